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
#include <stdexcept>
#include <string>

#include "saes32/sbox.hpp"
#include "saes32/trace.hpp"

namespace saes32 {

// fn[4:2] operation selector. Values 6 and 7 are unused code points and are
// rejected everywhere.
enum class Op3 : uint8_t {
  encsm = 0,   // AES encrypt round (S-box + forward MixColumns column)
  encs = 1,    // AES final round / key schedule (S-box only)
  decsm = 2,   // AES decrypt round (inverse S-box + inverse MixColumns column)
  decs = 3,    // AES decrypt final round
  sm4_ed = 4,  // SM4 encrypt/decrypt transform
  sm4_ks = 5,  // SM4 key-schedule transform
};

struct InvalidInstruction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Validated 5-bit function specifier: fn[4:2] = op3, fn[1:0] = source byte
// index (byte 0 = bits [7:0] of rs2).
class FnCode {
 public:
  FnCode(Op3 op3, uint8_t byte_ix);
  static FnCode from_bits(uint8_t fn5);  // throws InvalidInstruction on fn[4:2] in {6,7}

  Op3 op3() const { return op3_; }
  uint8_t byte_ix() const { return byte_ix_; }
  uint8_t bits() const { return static_cast<uint8_t>((static_cast<uint8_t>(op3_) << 2) | byte_ix_); }

  bool operator==(const FnCode&) const = default;

 private:
  Op3 op3_;
  uint8_t byte_ix_;
};

enum class SboxBackend { table, circuit };

// Execution context for instruction-model runs: S-box backend selection and
// an optional caller-owned census. No hidden global state.
struct ExecCtx {
  SboxBackend backend = SboxBackend::table;
  InstrTrace* trace = nullptr;
};

// The 8->32-bit linear expansion selected by fn[4:2], on the S-box output.
uint32_t expand_op3(Op3 op3, uint8_t s);

// One instruction: select byte fn[1:0] of rs2, substitute, linearly expand,
// rotate left by 8*fn[1:0], XOR into rs1.
uint32_t saes32_op(uint32_t rs1, uint32_t rs2, FnCode fn, ExecCtx& ctx);

// RV64 behavior: operands truncated to 32 bits, result zero-extended.
uint64_t saes32_op_rv64(uint64_t rs1, uint64_t rs2, FnCode fn, ExecCtx& ctx);

// S-box lookup honoring the context's backend selection (table or layered
// circuit); both backends must agree bit-for-bit.
uint8_t sbox_lookup(SboxKind kind, uint8_t x, SboxBackend backend);

// ---- binary encoding (R-type, custom-0) ----
//   [31:30]=00 | [29:25]=fn | [24:20]=rs2 | [19:15]=rs1 | [14:12]=000
//   | [11:7]=rd | [6:0]=0001011
struct EncodedInstr {
  uint32_t word = 0;
  uint8_t rd = 0, rs1 = 0, rs2 = 0;
  FnCode fn{Op3::encsm, 0};

  bool operator==(const EncodedInstr&) const = default;
};

EncodedInstr encode(FnCode fn, uint8_t rd, uint8_t rs1, uint8_t rs2);
EncodedInstr decode(uint32_t word);  // throws InvalidInstruction

// Assembler identifier for fn[4:2]: saes32.encsm, saes32.encs, saes32.decsm,
// saes32.decs, ssm4.ed, ssm4.ks.
std::string mnemonic(Op3 op3);
// "<mnemonic> x<rd>, x<rs1>, x<rs2>, <byte_ix>"
std::string disassemble(const EncodedInstr& instr);

// ---- census helpers used by the cipher routines ----
inline void note_xor(ExecCtx& ctx, uint64_t n = 1) {
  if (ctx.trace) ctx.trace->totals.xor_ops += n;
}
inline void note_rot(ExecCtx& ctx, uint64_t n = 1) {
  if (ctx.trace) ctx.trace->totals.rot_ops += n;
}
inline void note_subkey_load(ExecCtx& ctx, uint64_t n = 1) {
  if (ctx.trace) ctx.trace->totals.subkey_loads += n;
}
inline void note_key_load(ExecCtx& ctx, uint64_t n = 1) {
  if (ctx.trace) ctx.trace->totals.key_loads += n;
}

}  // namespace saes32
