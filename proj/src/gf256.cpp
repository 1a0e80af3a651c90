// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "saes32/gf256.hpp"

#include <stdexcept>

namespace saes32 {

static void check_poly(FieldPoly poly) {
  if (poly != FieldPoly::aes && poly != FieldPoly::sm4)
    throw std::invalid_argument("gf256: unknown reduction polynomial identifier");
}

uint8_t gf256_mul(uint8_t a, uint8_t b, FieldPoly poly) {
  check_poly(poly);
  const uint32_t p = static_cast<uint32_t>(poly);
  uint32_t r = 0;
  uint32_t x = a;
  for (int i = 0; i < 8; i++) {
    if ((b >> i) & 1) r ^= x << i;
  }
  for (int i = 15; i >= 8; i--) {
    if ((r >> i) & 1) r ^= p << (i - 8);
  }
  return static_cast<uint8_t>(r);
}

uint8_t gf256_inv(uint8_t a, FieldPoly poly) {
  check_poly(poly);
  if (a == 0) return 0;
  // a^254 by square-and-multiply (the group has order 255)
  uint8_t result = 1;
  uint8_t sq = a;
  for (int i = 0; i < 8; i++) {
    if ((254 >> i) & 1) result = gf256_mul(result, sq, poly);
    sq = gf256_mul(sq, sq, poly);
  }
  return result;
}

}  // namespace saes32
