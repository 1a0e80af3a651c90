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

#include "saes32/isa.hpp"

#include <bit>

#include "saes32/sbox_circuit.hpp"

namespace saes32 {

FnCode::FnCode(Op3 op3, uint8_t byte_ix) : op3_(op3), byte_ix_(byte_ix) {
  if (static_cast<uint8_t>(op3) > 5)
    throw InvalidInstruction("fn[4:2] in {6,7} is an unused code point");
  if (byte_ix > 3) throw std::invalid_argument("fn[1:0] byte index must be 0..3");
}

FnCode FnCode::from_bits(uint8_t fn5) {
  if (fn5 > 0x1F) throw std::invalid_argument("fn is a 5-bit field");
  return FnCode(static_cast<Op3>(fn5 >> 2), static_cast<uint8_t>(fn5 & 3));
}

namespace {

uint8_t xtime(uint8_t x) {
  return static_cast<uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1B : 0x00));
}

// Forward MixColumns column of a single byte, in the flipped byte order the
// instruction uses: low byte 2*s, then s, s, 3*s.
uint32_t aes_mix_column_fwd(uint8_t s) {
  const uint32_t s2 = xtime(s);
  return (static_cast<uint32_t>(s ^ s2) << 24) | (static_cast<uint32_t>(s) << 16) |
         (static_cast<uint32_t>(s) << 8) | s2;
}

// Inverse MixColumns column: low byte 14*s, then 9*s, 13*s, 11*s.
uint32_t aes_mix_column_inv(uint8_t s) {
  const uint8_t s2 = xtime(s);
  const uint8_t s4 = xtime(s2);
  const uint8_t s8 = xtime(s4);
  return (static_cast<uint32_t>(s ^ s2 ^ s8) << 24) |
         (static_cast<uint32_t>(s ^ s4 ^ s8) << 16) |
         (static_cast<uint32_t>(s ^ s8) << 8) | static_cast<uint32_t>(s2 ^ s4 ^ s8);
}

// SM4 encryption linear transform L restricted to one substituted byte,
// expressed directly on the flipped word order.
uint32_t sm4_expand_ed(uint8_t s) {
  const uint32_t x = s;
  return x ^ (x << 8) ^ (x << 2) ^ (x << 18) ^ ((x & 0x3F) << 26) ^ ((x & 0xC0) << 10);
}

// SM4 key-schedule transform L' on one substituted byte, same convention.
uint32_t sm4_expand_ks(uint8_t s) {
  const uint32_t x = s;
  return x ^ ((x & 0x07) << 29) ^ ((x & 0xFE) << 7) ^ ((x & 0x01) << 23) ^ ((x & 0xF8) << 13);
}

SboxKind sbox_kind_for(Op3 op3) {
  switch (op3) {
    case Op3::encsm:
    case Op3::encs: return SboxKind::aes;
    case Op3::decsm:
    case Op3::decs: return SboxKind::aes_inv;
    case Op3::sm4_ed:
    case Op3::sm4_ks: return SboxKind::sm4;
  }
  throw std::invalid_argument("bad op3");
}

}  // namespace

uint32_t expand_op3(Op3 op3, uint8_t s) {
  switch (op3) {
    case Op3::encsm: return aes_mix_column_fwd(s);
    case Op3::encs: return s;  // zero-extension: final round / key schedule
    case Op3::decsm: return aes_mix_column_inv(s);
    case Op3::decs: return s;
    case Op3::sm4_ed: return sm4_expand_ed(s);
    case Op3::sm4_ks: return sm4_expand_ks(s);
  }
  throw std::invalid_argument("bad op3");
}

uint8_t sbox_lookup(SboxKind kind, uint8_t x, SboxBackend backend) {
  if (backend == SboxBackend::table) return sbox_for(kind)[x];
  static const LayeredSBox circuits[3] = {
      build_layered_sbox(SboxKind::aes),
      build_layered_sbox(SboxKind::aes_inv),
      build_layered_sbox(SboxKind::sm4),
  };
  return circuits[static_cast<int>(kind)].lookup(x);
}

uint32_t saes32_op(uint32_t rs1, uint32_t rs2, FnCode fn, ExecCtx& ctx) {
  const int shift = 8 * fn.byte_ix();
  const uint8_t b = static_cast<uint8_t>(rs2 >> shift);
  const uint8_t s = sbox_lookup(sbox_kind_for(fn.op3()), b, ctx.backend);
  const uint32_t expanded = expand_op3(fn.op3(), s);
  if (ctx.trace) ctx.trace->totals.saes32[static_cast<size_t>(fn.op3())]++;
  return rs1 ^ std::rotl(expanded, shift);
}

uint64_t saes32_op_rv64(uint64_t rs1, uint64_t rs2, FnCode fn, ExecCtx& ctx) {
  return saes32_op(static_cast<uint32_t>(rs1), static_cast<uint32_t>(rs2), fn, ctx);
}

// ---- encoding ----

namespace {
constexpr uint32_t kOpcodeCustom0 = 0b0001011;
}

EncodedInstr encode(FnCode fn, uint8_t rd, uint8_t rs1, uint8_t rs2) {
  if (rd >= 32 || rs1 >= 32 || rs2 >= 32)
    throw std::invalid_argument("register index must be < 32");
  EncodedInstr e;
  e.rd = rd;
  e.rs1 = rs1;
  e.rs2 = rs2;
  e.fn = fn;
  e.word = (static_cast<uint32_t>(fn.bits()) << 25) | (static_cast<uint32_t>(rs2) << 20) |
           (static_cast<uint32_t>(rs1) << 15) | (static_cast<uint32_t>(rd) << 7) |
           kOpcodeCustom0;
  return e;
}

EncodedInstr decode(uint32_t word) {
  if ((word & 0x7F) != kOpcodeCustom0)
    throw InvalidInstruction("opcode is not custom-0");
  if (((word >> 12) & 0x7) != 0) throw InvalidInstruction("funct3 must be 000");
  if ((word >> 30) != 0) throw InvalidInstruction("bits [31:30] must be 00");
  const uint8_t fn5 = static_cast<uint8_t>((word >> 25) & 0x1F);
  if ((fn5 >> 2) > 5) throw InvalidInstruction("fn[4:2] in {6,7} is an unused code point");
  EncodedInstr e;
  e.word = word;
  e.rd = static_cast<uint8_t>((word >> 7) & 0x1F);
  e.rs1 = static_cast<uint8_t>((word >> 15) & 0x1F);
  e.rs2 = static_cast<uint8_t>((word >> 20) & 0x1F);
  e.fn = FnCode::from_bits(fn5);
  return e;
}

std::string mnemonic(Op3 op3) {
  switch (op3) {
    case Op3::encsm: return "saes32.encsm";
    case Op3::encs: return "saes32.encs";
    case Op3::decsm: return "saes32.decsm";
    case Op3::decs: return "saes32.decs";
    case Op3::sm4_ed: return "ssm4.ed";
    case Op3::sm4_ks: return "ssm4.ks";
  }
  throw std::invalid_argument("bad op3");
}

std::string disassemble(const EncodedInstr& instr) {
  return mnemonic(instr.fn.op3()) + " x" + std::to_string(instr.rd) + ", x" +
         std::to_string(instr.rs1) + ", x" + std::to_string(instr.rs2) + ", " +
         std::to_string(instr.fn.byte_ix());
}

}  // namespace saes32
