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

#include "saes32/hex.hpp"

#include <stdexcept>

#include "saes32/block.hpp"

namespace saes32 {

static int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<uint8_t> parse_hex(std::string_view s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
  std::vector<uint8_t> out(s.size() / 2);
  for (size_t i = 0; i < out.size(); i++) {
    const int hi = hex_digit(s[2 * i]);
    const int lo = hex_digit(s[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("bad hex digit");
    out[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return out;
}

std::string to_hex(std::span<const uint8_t> bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xF]);
  }
  return s;
}

Block128 Block128::from_bytes(std::span<const uint8_t> bytes16) {
  if (bytes16.size() != 16) throw std::invalid_argument("block must be 16 bytes");
  Block128 b;
  for (int i = 0; i < 4; i++) b.w[i] = load_le32(bytes16.data() + 4 * i);
  return b;
}

void Block128::to_bytes(std::span<uint8_t> bytes16) const {
  if (bytes16.size() != 16) throw std::invalid_argument("block must be 16 bytes");
  for (int i = 0; i < 4; i++) store_le32(bytes16.data() + 4 * i, w[i]);
}

}  // namespace saes32
