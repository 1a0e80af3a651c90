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
#include <span>
#include <vector>

#include "saes32/block.hpp"
#include "saes32/isa.hpp"

namespace saes32 {

// Expanded AES subkeys: 4r+4 words for r in {10, 12, 14} (128/192/256-bit
// keys). `inverse` marks the equivalent-inverse-cipher form used by
// aes_decrypt_block.
struct AesKeySchedule {
  std::vector<uint32_t> words;
  int rounds = 0;
  int key_bits = 0;
  bool inverse = false;
};

// Key expansion; SubWord steps run through saes32.encs.
// Throws std::invalid_argument unless key length is 16, 24 or 32 bytes.
AesKeySchedule aes_key_expand(std::span<const uint8_t> key, ExecCtx& ctx);

// Equivalent-inverse-cipher schedule: subkeys in decryption order with
// inverse MixColumns applied to the middle round keys. The transform itself
// runs on modeled instructions only (saes32.decsm over saes32.encs).
AesKeySchedule aes_inverse_schedule(const AesKeySchedule& enc, ExecCtx& ctx);

// One ECB block. Per round: 4 subkey loads that initialize the destination
// register set (no separate AddRoundKey XORs) and 16 saes32 invocations.
Block128 aes_encrypt_block(const AesKeySchedule& ks, Block128 pt, ExecCtx& ctx);
Block128 aes_decrypt_block(const AesKeySchedule& inv_ks, Block128 ct, ExecCtx& ctx);

// Encryption with the round keys computed on the fly: no schedule in memory,
// zero subkey loads (only the raw key words are read once).
Block128 aes_encrypt_otf(std::span<const uint8_t> key, Block128 pt, ExecCtx& ctx);

}  // namespace saes32
