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

#include "saes32/sm4.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace saes32 {

namespace {

// FK whitening constants in the register convention (standard values
// A3B1BAC6 56AA3350 677D9197 B27022DC, byte-reversed).
constexpr uint32_t kFk[4] = {0xC6BAB1A3, 0x5033AA56, 0x97917D67, 0xDC2270B2};

// Published CK table, big-endian as printed in the standard.
constexpr uint32_t kCkStandard[32] = {
    0x00070E15, 0x1C232A31, 0x383F464D, 0x545B6269,
    0x70777E85, 0x8C939AA1, 0xA8AFB6BD, 0xC4CBD2D9,
    0xE0E7EEF5, 0xFC030A11, 0x181F262D, 0x343B4249,
    0x50575E65, 0x6C737A81, 0x888F969D, 0xA4ABB2B9,
    0xC0C7CED5, 0xDCE3EAF1, 0xF8FF060D, 0x141B2229,
    0x30373E45, 0x4C535A61, 0x686F767D, 0x848B9299,
    0xA0A7AEB5, 0xBCC3CAD1, 0xD8DFE6ED, 0xF4FB0209,
    0x10171E25, 0x2C333A41, 0x484F565D, 0x646B7279,
};

uint32_t bswap32(uint32_t v) {
  return (v << 24) | ((v & 0xFF00u) << 8) | ((v >> 8) & 0xFF00u) | (v >> 24);
}

// Four consecutive invocations sharing source and destination registers,
// stepping fn[1:0] through 0..3 (the ssm4.ed4 / ssm4.ks4 pseudo-instruction).
uint32_t ssm4_group4(uint32_t rs1, uint32_t rs2, Op3 op, ExecCtx& ctx) {
  for (uint8_t i = 0; i < 4; i++) rs1 = saes32_op(rs1, rs2, FnCode(op, i), ctx);
  if (ctx.trace) {
    if (op == Op3::sm4_ed) ctx.trace->totals.macro_ed4++;
    else ctx.trace->totals.macro_ks4++;
  }
  return rs1;
}

// One round of four steps. Input mixing shares the pairwise XOR temporaries
// across steps: ten XORs total.
void sm4_round(uint32_t x[4], const uint32_t rk[4], Op3 op, ExecCtx& ctx) {
  uint32_t a = x[2] ^ x[3];
  note_xor(ctx);
  uint32_t t0 = x[1] ^ a;
  note_xor(ctx);
  t0 ^= rk[0];
  note_xor(ctx);
  x[0] = ssm4_group4(x[0], t0, op, ctx);

  uint32_t t1 = a ^ x[0];
  note_xor(ctx);
  t1 ^= rk[1];
  note_xor(ctx);
  x[1] = ssm4_group4(x[1], t1, op, ctx);

  uint32_t b = x[0] ^ x[1];
  note_xor(ctx);
  uint32_t t2 = b ^ x[3];
  note_xor(ctx);
  t2 ^= rk[2];
  note_xor(ctx);
  x[2] = ssm4_group4(x[2], t2, op, ctx);

  uint32_t t3 = b ^ x[2];
  note_xor(ctx);
  t3 ^= rk[3];
  note_xor(ctx);
  x[3] = ssm4_group4(x[3], t3, op, ctx);
}

}  // namespace

std::array<uint32_t, 32> ck_constants() {
  std::array<uint32_t, 32> ck{};
  for (int i = 0; i < 32; i++) {
    uint32_t w = 0;
    for (int j = 0; j < 4; j++) {
      const uint8_t b = static_cast<uint8_t>((4 * i + j) * 7);
      w |= static_cast<uint32_t>(b) << (8 * j);
    }
    ck[i] = w;
  }
  return ck;
}

std::array<uint32_t, 32> ck_constants_table() {
  std::array<uint32_t, 32> ck{};
  for (int i = 0; i < 32; i++) ck[i] = bswap32(kCkStandard[i]);
  return ck;
}

uint32_t ck_standard_word(int i) {
  if (i < 0 || i >= 32) throw std::invalid_argument("ck index must be 0..31");
  return kCkStandard[i];
}

Sm4KeySchedule sm4_key_expand(std::span<const uint8_t> key, ExecCtx& ctx) {
  if (key.size() != 16) throw std::invalid_argument("SM4 key must be 16 bytes");
  static const std::array<uint32_t, 32> ck = ck_constants();

  Sm4KeySchedule ks;
  if (ctx.trace) ctx.trace->scope_begin("keyschedule");
  uint32_t k[4];
  for (int j = 0; j < 4; j++) {
    k[j] = load_le32(key.data() + 4 * j);
    note_key_load(ctx);
    k[j] ^= kFk[j];
    note_xor(ctx);
  }
  for (int r = 0; r < 8; r++) {
    if (ctx.trace) ctx.trace->scope_begin("block" + std::to_string(r));
    sm4_round(k, ck.data() + 4 * r, Op3::sm4_ks, ctx);
    for (int j = 0; j < 4; j++) ks.rk[4 * r + j] = k[j];
    if (ctx.trace) ctx.trace->scope_end();
  }
  if (ctx.trace) ctx.trace->scope_end();
  return ks;
}

static Block128 sm4_crypt(const Sm4KeySchedule& ks, Block128 in, bool reverse, ExecCtx& ctx) {
  if (ctx.trace) ctx.trace->scope_begin("block");
  uint32_t x[4] = {in.w[0], in.w[1], in.w[2], in.w[3]};
  for (int r = 0; r < 8; r++) {
    if (ctx.trace) ctx.trace->scope_begin("round" + std::to_string(r));
    uint32_t rk[4];
    for (int j = 0; j < 4; j++) {
      const int step = 4 * r + j;
      rk[j] = ks.rk[reverse ? 31 - step : step];
      note_subkey_load(ctx);
    }
    sm4_round(x, rk, Op3::sm4_ed, ctx);
    if (ctx.trace) ctx.trace->scope_end();
  }
  // final reverse-order output swap: register naming only, no arithmetic
  Block128 out;
  out.w = {x[3], x[2], x[1], x[0]};
  if (ctx.trace) ctx.trace->scope_end();
  return out;
}

Block128 sm4_encrypt_block(const Sm4KeySchedule& ks, Block128 pt, ExecCtx& ctx) {
  return sm4_crypt(ks, pt, false, ctx);
}

Block128 sm4_decrypt_block(const Sm4KeySchedule& ks, Block128 ct, ExecCtx& ctx) {
  return sm4_crypt(ks, ct, true, ctx);
}

}  // namespace saes32
