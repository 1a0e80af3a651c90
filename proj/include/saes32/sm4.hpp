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
#include <span>

#include "saes32/block.hpp"
#include "saes32/isa.hpp"

namespace saes32 {

struct Sm4KeySchedule {
  std::array<uint32_t, 32> rk{};
};

// The 32 CK round constants, byte j of word i being (4i+j)*7 mod 256.
// ck_constants computes them with 8-bit arithmetic; ck_constants_table holds
// the published table. Both are returned in the register convention
// (flipped byte order); ck_standard_word gives the big-endian printed form.
std::array<uint32_t, 32> ck_constants();
std::array<uint32_t, 32> ck_constants_table();
uint32_t ck_standard_word(int i);

// 32 round keys from a 128-bit key: FK whitening, then 8 blocks of four
// subkey words, each block taking 16 ssm4.ks invocations and 10 XORs.
Sm4KeySchedule sm4_key_expand(std::span<const uint8_t> key, ExecCtx& ctx);

// 8 rounds of 4 steps; 16 ssm4.ed and 10 XORs per round plus 4 subkey loads.
Block128 sm4_encrypt_block(const Sm4KeySchedule& ks, Block128 pt, ExecCtx& ctx);

// Forward routine over the reversed subkey order; no inverse S-box exists.
Block128 sm4_decrypt_block(const Sm4KeySchedule& ks, Block128 ct, ExecCtx& ctx);

}  // namespace saes32
