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

#include <bit>
#include <random>

#include "doctest.h"
#include "saes32/isa.hpp"

using namespace saes32;

namespace {

ExecCtx plain() { return ExecCtx{}; }

const Op3 kAllOp3[6] = {Op3::encsm, Op3::encs, Op3::decsm, Op3::decs, Op3::sm4_ed, Op3::sm4_ks};

}  // namespace

TEST_CASE("zero-extension path hits the S-box directly") {
  ExecCtx ctx = plain();
  CHECK(saes32_op(0, 0, FnCode(Op3::encs, 0), ctx) == 0x00000063);
  CHECK(expand_op3(Op3::encs, 0xAB) == 0x000000AB);
  CHECK(expand_op3(Op3::decs, 0xAB) == 0x000000AB);
}

TEST_CASE("forward MixColumns expansion places {2s,s,s,3s}") {
  // byte order: low byte 2*s, then s, s, 3*s
  CHECK(expand_op3(Op3::encsm, 0x01) == 0x03010102);
}

TEST_CASE("inverse MixColumns expansion inverts the forward one") {
  // linear maps on words assembled from the single-byte expansions
  auto mc = [](uint32_t w, Op3 op) {
    ExecCtx ctx = plain();
    uint32_t r = 0;
    for (uint8_t k = 0; k < 4; k++) {
      // raw matrix column, no S-box: build from expansion of each byte
      const uint8_t b = static_cast<uint8_t>(w >> (8 * k));
      r ^= std::rotl(expand_op3(op, b), 8 * k);
    }
    return r;
  };
  for (int b = 0; b < 256; b++) {
    for (int pos = 0; pos < 4; pos++) {
      const uint32_t col = static_cast<uint32_t>(b) << (8 * pos);
      CHECK(mc(mc(col, Op3::encsm), Op3::decsm) == col);
    }
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; i++) {
    const uint32_t w = rng();
    CHECK(mc(mc(w, Op3::encsm), Op3::decsm) == w);
    CHECK(mc(mc(w, Op3::decsm), Op3::encsm) == w);
  }
}

TEST_CASE("XOR-linearity in rs1") {
  std::mt19937 rng(11);
  ExecCtx ctx = plain();
  for (int i = 0; i < 2000; i++) {
    const uint32_t a = rng(), b = rng(), y = rng();
    const FnCode fn(kAllOp3[rng() % 6], static_cast<uint8_t>(rng() % 4));
    CHECK(saes32_op(a ^ b, y, fn, ctx) == (saes32_op(a, y, fn, ctx) ^ b));
  }
}

TEST_CASE("byte locality: only the selected byte of rs2 matters") {
  std::mt19937 rng(13);
  ExecCtx ctx = plain();
  for (Op3 op : kAllOp3) {
    for (uint8_t ix = 0; ix < 4; ix++) {
      const FnCode fn(op, ix);
      for (int b = 0; b < 256; b++) {
        const uint32_t base = saes32_op(0, static_cast<uint32_t>(b) << (8 * ix), fn, ctx);
        for (int j = 0; j < 4; j++) {
          uint32_t filler = rng();
          filler &= ~(0xFFu << (8 * ix));
          const uint32_t y = filler | (static_cast<uint32_t>(b) << (8 * ix));
          CHECK(saes32_op(0, y, fn, ctx) == base);
        }
      }
    }
  }
}

TEST_CASE("rotation coherence across byte positions") {
  std::mt19937 rng(17);
  ExecCtx ctx = plain();
  for (Op3 op : kAllOp3) {
    for (uint8_t ix = 0; ix < 4; ix++) {
      for (int i = 0; i < 64; i++) {
        const uint32_t y = rng();
        const uint32_t lhs = saes32_op(0, std::rotl(y, 8), FnCode(op, (ix + 1) % 4), ctx);
        const uint32_t rhs = std::rotl(saes32_op(0, y, FnCode(op, ix), ctx), 8);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("table and circuit backends agree") {
  std::mt19937 rng(19);
  ExecCtx table{SboxBackend::table, nullptr};
  ExecCtx circuit{SboxBackend::circuit, nullptr};
  for (int i = 0; i < 10000; i++) {
    const uint32_t a = rng(), y = rng();
    const FnCode fn(kAllOp3[rng() % 6], static_cast<uint8_t>(rng() % 4));
    CHECK(saes32_op(a, y, fn, table) == saes32_op(a, y, fn, circuit));
  }
}

TEST_CASE("RV64 wrapper truncates and zero-extends") {
  ExecCtx ctx = plain();
  const uint64_t rs1 = 0xDEADBEEF'00000000ull;
  const uint64_t rs2 = 0x12345678'00000000ull;
  CHECK(saes32_op_rv64(rs1, rs2, FnCode(Op3::encs, 0), ctx) ==
        saes32_op(0, 0, FnCode(Op3::encs, 0), ctx));
  const uint64_t r = saes32_op_rv64(0xFFFFFFFF'FFFFFFFFull, 0, FnCode(Op3::encs, 1), ctx);
  CHECK((r >> 32) == 0);  // zero-extended
}

TEST_CASE("fn code validation") {
  CHECK_THROWS_AS(FnCode::from_bits(0b11000), InvalidInstruction);  // fn[4:2] = 6
  CHECK_THROWS_AS(FnCode::from_bits(0b11100), InvalidInstruction);  // fn[4:2] = 7
  CHECK_THROWS_AS(FnCode(Op3::encsm, 4), std::invalid_argument);
  CHECK(FnCode::from_bits(0b10111).op3() == Op3::sm4_ks);
  CHECK(FnCode::from_bits(0b10111).byte_ix() == 3);
}

TEST_CASE("mnemonics") {
  CHECK(mnemonic(Op3::encsm) == "saes32.encsm");
  CHECK(mnemonic(Op3::encs) == "saes32.encs");
  CHECK(mnemonic(Op3::decsm) == "saes32.decsm");
  CHECK(mnemonic(Op3::decs) == "saes32.decs");
  CHECK(mnemonic(Op3::sm4_ed) == "ssm4.ed");
  CHECK(mnemonic(Op3::sm4_ks) == "ssm4.ks");
}

TEST_CASE("encoding example and round-trips") {
  const EncodedInstr e = encode(FnCode(Op3::encsm, 0), 1, 2, 3);
  CHECK(e.word == 0x0031008B);
  const EncodedInstr d = decode(0x0031008B);
  CHECK(d.fn == FnCode(Op3::encsm, 0));
  CHECK(d.rd == 1);
  CHECK(d.rs1 == 2);
  CHECK(d.rs2 == 3);
  CHECK(disassemble(d) == "saes32.encsm x1, x2, x3, 0");

  std::mt19937 rng(23);
  for (Op3 op : kAllOp3) {
    for (uint8_t ix = 0; ix < 4; ix++) {
      for (int i = 0; i < 100; i++) {
        const uint8_t rd = static_cast<uint8_t>(rng() % 32);
        const uint8_t rs1 = static_cast<uint8_t>(rng() % 32);
        const uint8_t rs2 = static_cast<uint8_t>(rng() % 32);
        const EncodedInstr enc = encode(FnCode(op, ix), rd, rs1, rs2);
        const EncodedInstr dec = decode(enc.word);
        CHECK(dec == enc);
      }
    }
  }
}

TEST_CASE("encode/decode rejects invalid operands") {
  CHECK_THROWS_AS(encode(FnCode(Op3::encs, 0), 32, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(encode(FnCode(Op3::encs, 0), 0, 32, 0), std::invalid_argument);
  // fn[4:2] = 6 in funct7[4:2]
  const uint32_t bad_fn = (0b11000u << 25) | 0b0001011u;
  CHECK_THROWS_AS(decode(bad_fn), InvalidInstruction);
  CHECK_THROWS_AS(decode(0x00000033), InvalidInstruction);             // wrong opcode
  CHECK_THROWS_AS(decode(0x0031108B), InvalidInstruction);             // funct3 != 0
  CHECK_THROWS_AS(decode(0x0031008B | 0x80000000u), InvalidInstruction);  // bit 31 set
}
