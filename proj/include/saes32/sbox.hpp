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

#include <array>
#include <cstdint>

namespace saes32 {

enum class SboxKind {
  aes,      // AES SubBytes
  aes_inv,  // AES InvSubBytes
  sm4,      // SM4 tau (no inverse needed: Feistel-like cipher)
};

struct SBoxTable {
  std::array<uint8_t, 256> entries{};
  SboxKind kind = SboxKind::aes;

  uint8_t operator[](uint8_t x) const { return entries[x]; }
};

// Tables are constructed once from finite-field inversion composed with the
// standard affine transforms, then treated as immutable fixtures.
// AES uses an output affine only; SM4 applies the same affine on both sides.
const SBoxTable& aes_sbox();
const SBoxTable& aes_inv_sbox();
const SBoxTable& sm4_sbox();

const SBoxTable& sbox_for(SboxKind kind);

}  // namespace saes32
