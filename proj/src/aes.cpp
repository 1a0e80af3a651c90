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

#include "saes32/aes.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace saes32 {

namespace {

constexpr uint8_t kRcon[10] = {0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36};

void check_key_len(size_t len) {
  if (len != 16 && len != 24 && len != 32)
    throw std::invalid_argument("AES key must be 16, 24 or 32 bytes");
}

// Word rotation and the rcon XOR are base-ISA instructions; everything
// nonlinear goes through the instruction model.
uint32_t sub_rot_word(uint32_t prev_w, uint32_t t, uint8_t rcon, ExecCtx& ctx) {
  uint32_t acc = prev_w ^ rcon;
  note_xor(ctx);
  const uint32_t tr = std::rotr(t, 8);
  note_rot(ctx);
  for (uint8_t j = 0; j < 4; j++) acc = saes32_op(acc, tr, FnCode(Op3::encs, j), ctx);
  return acc;
}

uint32_t sub_word_fold(uint32_t prev_w, uint32_t t, ExecCtx& ctx) {
  uint32_t acc = prev_w;
  for (uint8_t j = 0; j < 4; j++) acc = saes32_op(acc, t, FnCode(Op3::encs, j), ctx);
  return acc;
}

// Inverse MixColumns of one word using only modeled instructions:
// saes32.encs rebuilds the word under SubBytes, saes32.decsm then applies
// InvSubBytes and the inverse matrix, leaving InvMixColumns alone.
uint32_t inv_mix_columns_word(uint32_t w, ExecCtx& ctx) {
  uint32_t s = 0, r = 0;
  for (uint8_t j = 0; j < 4; j++) s = saes32_op(s, w, FnCode(Op3::encs, j), ctx);
  for (uint8_t j = 0; j < 4; j++) r = saes32_op(r, s, FnCode(Op3::decsm, j), ctx);
  return r;
}

// Shared round structure. next4 fills the destination register set with the
// next four subkey words; the 16 saes32 invocations fold the source set in.
template <typename Next4>
Block128 aes_rounds(Next4&& next4, int rounds, bool decrypt, Block128 in, ExecCtx& ctx) {
  uint32_t u[4], t[4];
  next4(t);
  for (int j = 0; j < 4; j++) {
    u[j] = t[j] ^ in.w[j];
    note_xor(ctx);
  }
  for (int r = 1; r <= rounds; r++) {
    if (ctx.trace) ctx.trace->scope_begin("round" + std::to_string(r));
    const Op3 op = (r == rounds) ? (decrypt ? Op3::decs : Op3::encs)
                                 : (decrypt ? Op3::decsm : Op3::encsm);
    next4(t);
    for (int j = 0; j < 4; j++) {
      for (uint8_t k = 0; k < 4; k++) {
        const int src = decrypt ? (j + 4 - k) & 3 : (j + k) & 3;
        t[j] = saes32_op(t[j], u[src], FnCode(op, k), ctx);
      }
    }
    for (int j = 0; j < 4; j++) u[j] = t[j];
    if (ctx.trace) ctx.trace->scope_end();
  }
  Block128 out;
  for (int j = 0; j < 4; j++) out.w[j] = u[j];
  return out;
}

}  // namespace

AesKeySchedule aes_key_expand(std::span<const uint8_t> key, ExecCtx& ctx) {
  check_key_len(key.size());
  const int nk = static_cast<int>(key.size()) / 4;
  const int nr = nk + 6;

  AesKeySchedule ks;
  ks.rounds = nr;
  ks.key_bits = static_cast<int>(key.size()) * 8;
  ks.words.resize(4 * (nr + 1));

  if (ctx.trace) ctx.trace->scope_begin("keyschedule");
  for (int i = 0; i < nk; i++) {
    ks.words[i] = load_le32(key.data() + 4 * i);
    note_key_load(ctx);
  }
  for (int i = nk; i < 4 * (nr + 1); i++) {
    const uint32_t t = ks.words[i - 1];
    if (i % nk == 0) {
      ks.words[i] = sub_rot_word(ks.words[i - nk], t, kRcon[i / nk - 1], ctx);
    } else if (nk == 8 && i % nk == 4) {
      ks.words[i] = sub_word_fold(ks.words[i - nk], t, ctx);
    } else {
      ks.words[i] = ks.words[i - nk] ^ t;
      note_xor(ctx);
    }
  }
  if (ctx.trace) ctx.trace->scope_end();
  return ks;
}

AesKeySchedule aes_inverse_schedule(const AesKeySchedule& enc, ExecCtx& ctx) {
  if (enc.inverse) throw std::invalid_argument("schedule is already in inverse form");
  const int nr = enc.rounds;
  AesKeySchedule inv;
  inv.rounds = nr;
  inv.key_bits = enc.key_bits;
  inv.inverse = true;
  inv.words.resize(4 * (nr + 1));

  if (ctx.trace) ctx.trace->scope_begin("invschedule");
  for (int j = 0; j < 4; j++) inv.words[j] = enc.words[4 * nr + j];
  for (int r = 1; r < nr; r++) {
    for (int j = 0; j < 4; j++) {
      note_subkey_load(ctx);
      inv.words[4 * r + j] = inv_mix_columns_word(enc.words[4 * (nr - r) + j], ctx);
    }
  }
  for (int j = 0; j < 4; j++) inv.words[4 * nr + j] = enc.words[j];
  if (ctx.trace) ctx.trace->scope_end();
  return inv;
}

Block128 aes_encrypt_block(const AesKeySchedule& ks, Block128 pt, ExecCtx& ctx) {
  if (ks.inverse) throw std::invalid_argument("encrypt needs the forward schedule");
  if (ctx.trace) ctx.trace->scope_begin("block");
  size_t next = 0;
  auto next4 = [&](uint32_t t[4]) {
    for (int j = 0; j < 4; j++) {
      t[j] = ks.words[next++];
      note_subkey_load(ctx);
    }
  };
  Block128 ct = aes_rounds(next4, ks.rounds, false, pt, ctx);
  if (ctx.trace) ctx.trace->scope_end();
  return ct;
}

Block128 aes_decrypt_block(const AesKeySchedule& inv_ks, Block128 ct, ExecCtx& ctx) {
  if (!inv_ks.inverse)
    throw std::invalid_argument("decrypt needs the inverse schedule (aes_inverse_schedule)");
  if (ctx.trace) ctx.trace->scope_begin("block");
  size_t next = 0;
  auto next4 = [&](uint32_t t[4]) {
    for (int j = 0; j < 4; j++) {
      t[j] = inv_ks.words[next++];
      note_subkey_load(ctx);
    }
  };
  Block128 pt = aes_rounds(next4, inv_ks.rounds, true, ct, ctx);
  if (ctx.trace) ctx.trace->scope_end();
  return pt;
}

Block128 aes_encrypt_otf(std::span<const uint8_t> key, Block128 pt, ExecCtx& ctx) {
  check_key_len(key.size());
  const int nk = static_cast<int>(key.size()) / 4;
  const int nr = nk + 6;

  if (ctx.trace) ctx.trace->scope_begin("otf");
  // Ring of the last nk schedule words, held in registers; nothing is ever
  // committed to a schedule in memory.
  uint32_t win[8];
  for (int i = 0; i < nk; i++) {
    win[i] = load_le32(key.data() + 4 * i);
    note_key_load(ctx);
  }
  int ix = 0;
  int rcon_ix = 0;
  auto next_word = [&]() -> uint32_t {
    const int i = ix++;
    if (i < nk) return win[i];
    const uint32_t t = win[(i - 1) % nk];
    const uint32_t prev = win[i % nk];  // this slot still holds w[i-nk]
    uint32_t w;
    if (i % nk == 0) {
      w = sub_rot_word(prev, t, kRcon[rcon_ix++], ctx);
    } else if (nk == 8 && i % nk == 4) {
      w = sub_word_fold(prev, t, ctx);
    } else {
      w = prev ^ t;
      note_xor(ctx);
    }
    win[i % nk] = w;
    return w;
  };
  auto next4 = [&](uint32_t t[4]) {
    for (int j = 0; j < 4; j++) t[j] = next_word();
  };
  Block128 ct = aes_rounds(next4, nr, false, pt, ctx);
  if (ctx.trace) ctx.trace->scope_end();
  return ct;
}

}  // namespace saes32
