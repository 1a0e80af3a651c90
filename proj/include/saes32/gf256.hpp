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

#pragma once

#include <cstdint>

namespace saes32 {

// Reduction polynomials for the two GF(2^8) instances used here.
// AES: x^8 + x^4 + x^3 + x + 1;  SM4: x^8 + x^7 + x^6 + x^5 + x^4 + x^2 + 1.
enum class FieldPoly : uint16_t {
  aes = 0x11B,
  sm4 = 0x1F5,
};

uint8_t gf256_mul(uint8_t a, uint8_t b, FieldPoly poly);

// Multiplicative inverse; gf256_inv(0) = 0 by the usual S-box convention.
// Throws std::invalid_argument for an unknown polynomial identifier.
uint8_t gf256_inv(uint8_t a, FieldPoly poly);

}  // namespace saes32
