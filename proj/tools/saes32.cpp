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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "saes32/aes.hpp"
#include "saes32/hex.hpp"
#include "saes32/netlist.hpp"
#include "saes32/profiler.hpp"
#include "saes32/sbox.hpp"
#include "saes32/sbox_circuit.hpp"
#include "saes32/sm4.hpp"

using namespace saes32;

namespace {

struct KatVector {
  std::string alg;
  std::string key, pt, ct;
};

const std::vector<KatVector> kEmbeddedKats = {
    {"aes128", "000102030405060708090a0b0c0d0e0f", "00112233445566778899aabbccddeeff",
     "69c4e0d86a7b0430d8cdb78070b4c55a"},
    {"aes192", "000102030405060708090a0b0c0d0e0f1011121314151617",
     "00112233445566778899aabbccddeeff", "dda97ca4864cdfe06eaf70a0ec0d7191"},
    {"aes256", "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "00112233445566778899aabbccddeeff", "8ea2b7ca516745bfeafc49904b496089"},
    {"sm4", "0123456789abcdeffedcba9876543210", "0123456789abcdeffedcba9876543210",
     "681edf34d206965e86b3e94f536e4246"},
};

SboxBackend backend_of(const std::string& name) {
  if (name == "table") return SboxBackend::table;
  if (name == "circuit") return SboxBackend::circuit;
  throw std::invalid_argument("--sbox must be 'table' or 'circuit'");
}

std::string run_block_op(const std::string& alg, const std::string& key_hex,
                         const std::string& block_hex, bool decrypt, bool otf,
                         SboxBackend backend) {
  const auto key = parse_hex(key_hex);
  const auto block = parse_hex(block_hex);
  const Block128 in = Block128::from_bytes(block);
  ExecCtx ctx{backend, nullptr};
  Block128 out;
  if (alg == "sm4") {
    if (otf) throw std::invalid_argument("--otf applies to AES only");
    if (key.size() != 16) throw std::invalid_argument("sm4 key must be 16 bytes");
    const auto ks = sm4_key_expand(key, ctx);
    out = decrypt ? sm4_decrypt_block(ks, in, ctx) : sm4_encrypt_block(ks, in, ctx);
  } else if (alg == "aes128" || alg == "aes192" || alg == "aes256") {
    const size_t want = alg == "aes128" ? 16 : alg == "aes192" ? 24 : 32;
    if (key.size() != want)
      throw std::invalid_argument(alg + " key must be " + std::to_string(want) + " bytes");
    if (otf) {
      if (decrypt) throw std::invalid_argument("on-the-fly keying supports encryption only");
      out = aes_encrypt_otf(key, in, ctx);
    } else if (decrypt) {
      const auto inv = aes_inverse_schedule(aes_key_expand(key, ctx), ctx);
      out = aes_decrypt_block(inv, in, ctx);
    } else {
      out = aes_encrypt_block(aes_key_expand(key, ctx), in, ctx);
    }
  } else {
    throw std::invalid_argument("unknown --alg: " + alg);
  }
  std::vector<uint8_t> ob(16);
  out.to_bytes(ob);
  return to_hex(ob);
}

int run_kat(const std::string& alg, const std::string& file, bool iterated,
            SboxBackend backend) {
  std::vector<KatVector> vectors;
  if (!file.empty()) {
    if (alg == "all") throw std::invalid_argument("--file needs a specific --alg");
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open fixture file: " + file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      KatVector v;
      v.alg = alg;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) {
        if (tok.rfind("KEY=", 0) == 0) v.key = tok.substr(4);
        else if (tok.rfind("PT=", 0) == 0) v.pt = tok.substr(3);
        else if (tok.rfind("CT=", 0) == 0) v.ct = tok.substr(3);
        else throw std::invalid_argument("bad fixture token: " + tok);
      }
      if (v.key.empty() || v.pt.empty() || v.ct.empty())
        throw std::invalid_argument("fixture line needs KEY=, PT= and CT=");
      vectors.push_back(v);
    }
  } else {
    for (const auto& v : kEmbeddedKats) {
      if (alg == "all" || alg == v.alg) vectors.push_back(v);
    }
  }

  int failures = 0;
  for (const auto& v : vectors) {
    const std::string enc = run_block_op(v.alg, v.key, v.pt, false, false, backend);
    const std::string dec = run_block_op(v.alg, v.key, v.ct, true, false, backend);
    const bool ok = enc == v.ct && dec == v.pt;
    std::printf("%-7s enc/dec %s\n", v.alg.c_str(), ok ? "ok" : "FAIL");
    if (!ok) failures++;
  }
  if (iterated && (alg == "all" || alg == "sm4")) {
    const auto key = parse_hex("0123456789abcdeffedcba9876543210");
    ExecCtx ctx{backend, nullptr};
    const auto ks = sm4_key_expand(key, ctx);
    Block128 x = Block128::from_bytes(key);
    for (int i = 0; i < 1000000; i++) x = sm4_encrypt_block(ks, x, ctx);
    std::vector<uint8_t> ob(16);
    x.to_bytes(ob);
    const bool ok = to_hex(ob) == "595298c7c6fd271f0402f804c33d3f66";
    std::printf("sm4     x1000000 %s\n", ok ? "ok" : "FAIL");
    if (!ok) failures++;
  }
  if (failures == 0) {
    std::printf("ALL PASS\n");
    return 0;
  }
  std::printf("%d FAILURE(S)\n", failures);
  return 1;
}

int run_gates() {
  struct Row {
    const char* name;
    const Netlist* nl;
  };
  const LayeredSBox aes = build_layered_sbox(SboxKind::aes);
  const LayeredSBox inv = build_layered_sbox(SboxKind::aes_inv);
  const LayeredSBox sm4 = build_layered_sbox(SboxKind::sm4);
  const Row rows[] = {
      {"shared middle", aes.middle.get()}, {"aes top", aes.top.get()},
      {"aes bottom", aes.bottom.get()},    {"aes^-1 top", inv.top.get()},
      {"aes^-1 bottom", inv.bottom.get()}, {"sm4 top", sm4.top.get()},
      {"sm4 bottom", sm4.bottom.get()},
  };
  std::printf("%-15s %5s %5s %5s %5s %5s %6s %6s\n", "component", "in", "out", "xor", "xnor",
              "and", "total", "depth");
  for (const Row& r : rows) {
    const GateStats s = gate_stats(*r.nl);
    std::printf("%-15s %5zu %5zu %5zu %5zu %5zu %6zu %6zu\n", r.name, r.nl->n_inputs(),
                r.nl->n_outputs(), s.xor_count, s.xnor_count, s.and_count, s.total, s.depth);
  }
  auto kind_total = [](const LayeredSBox& c) {
    return gate_stats(*c.top).total + gate_stats(*c.middle).total + gate_stats(*c.bottom).total;
  };
  std::printf("totals: aes %zu, aes^-1 %zu, sm4 %zu gates\n", kind_total(aes), kind_total(inv),
              kind_total(sm4));
  return 0;
}

int run_verify_sbox() {
  int failures = 0;
  for (SboxKind kind : {SboxKind::aes, SboxKind::aes_inv, SboxKind::sm4}) {
    const LayeredSBox c = build_layered_sbox(kind);
    const SBoxTable& t = sbox_for(kind);
    int bad = 0;
    for (int x = 0; x < 256; x++) {
      if (c.lookup(static_cast<uint8_t>(x)) != t[static_cast<uint8_t>(x)]) bad++;
    }
    const GateStats top = gate_stats(*c.top);
    const GateStats mid = gate_stats(*c.middle);
    const GateStats bot = gate_stats(*c.bottom);
    const bool structural = top.and_count == 0 && bot.and_count == 0 && mid.xnor_count == 0;
    const char* name =
        kind == SboxKind::aes ? "aes" : kind == SboxKind::aes_inv ? "aes^-1" : "sm4";
    std::printf("%-7s circuit/table equivalence: %s (256 inputs), structure: %s\n", name,
                bad == 0 ? "ok" : "FAIL", structural ? "ok" : "FAIL");
    if (bad != 0 || !structural) failures++;
  }
  if (failures == 0) {
    std::printf("ALL PASS\n");
    return 0;
  }
  return 1;
}

int run_census(const std::string& workload, const std::string& format, SboxBackend backend) {
  std::vector<CensusRow> rows;
  for (Workload w : all_workloads()) {
    if (workload == "all" || workload == workload_name(w))
      rows.push_back(census_row(w, backend));
  }
  if (rows.empty()) throw std::invalid_argument("unknown workload: " + workload);
  std::cout << (format == "tsv" ? render_census_tsv(rows) : render_census_text(rows));
  std::cout << "\nbaseline comparison:\n";
  const ComparisonReport rep = compare_baseline();
  std::cout << (format == "tsv" ? rep.render_tsv() : rep.render_text());
  return 0;
}

int run_disasm(const std::string& word_hex) {
  if (word_hex.size() != 8) throw std::invalid_argument("expected an 8-digit hex word");
  const auto bytes = parse_hex(word_hex);
  const uint32_t word = (static_cast<uint32_t>(bytes[0]) << 24) |
                        (static_cast<uint32_t>(bytes[1]) << 16) |
                        (static_cast<uint32_t>(bytes[2]) << 8) | bytes[3];
  const EncodedInstr instr = decode(word);
  std::printf("%s\n", disassemble(instr).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bit-exact model of the SAES32/SSM4 AES+SM4 instruction extension"};
  app.require_subcommand(1);

  std::string sbox_sel = "table";

  auto* kat = app.add_subcommand("kat", "run standard known-answer vectors");
  std::string kat_alg = "all", kat_file;
  bool kat_iterated = false;
  kat->add_option("--alg", kat_alg, "all|aes128|aes192|aes256|sm4")->capture_default_str();
  kat->add_option("--file", kat_file, "fixture file with KEY=<hex> PT=<hex> CT=<hex> lines");
  kat->add_flag("--iterated", kat_iterated, "also run the 1,000,000-fold SM4 vector");
  kat->add_option("--sbox", sbox_sel, "table|circuit")->envname("SAES32_SBOX");

  std::string alg, key_hex, block_hex;
  bool otf = false;
  auto add_block_opts = [&](CLI::App* cmd) {
    cmd->add_option("--alg", alg, "aes128|aes192|aes256|sm4")->required();
    cmd->add_option("--key", key_hex, "key as hex")->required();
    cmd->add_option("--block", block_hex, "16-byte block as hex")->required();
    cmd->add_option("--sbox", sbox_sel, "table|circuit")->envname("SAES32_SBOX");
  };
  auto* enc = app.add_subcommand("enc", "encrypt one block");
  add_block_opts(enc);
  enc->add_flag("--otf", otf, "AES on-the-fly key schedule");
  auto* dec = app.add_subcommand("dec", "decrypt one block");
  add_block_opts(dec);

  auto* census_cmd = app.add_subcommand("census", "instruction-count reports");
  std::string census_workload = "all", census_format = "text";
  census_cmd->add_option("--workload", census_workload, "workload name or 'all'")
      ->capture_default_str();
  census_cmd->add_option("--format", census_format, "text|tsv")->capture_default_str();
  census_cmd->add_option("--sbox", sbox_sel, "table|circuit")->envname("SAES32_SBOX");

  auto* gates = app.add_subcommand("gates", "per-layer gate statistics of the S-box circuits");
  auto* verify = app.add_subcommand("verify-sbox", "exhaustive circuit/table equivalence");
  auto* disasm = app.add_subcommand("disasm", "decode one instruction word");
  std::string disasm_word;
  disasm->add_option("word", disasm_word, "instruction word as 8 hex digits")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(kat))
      return run_kat(kat_alg, kat_file, kat_iterated, backend_of(sbox_sel));
    if (app.got_subcommand(enc)) {
      std::printf("%s\n",
                  run_block_op(alg, key_hex, block_hex, false, otf, backend_of(sbox_sel)).c_str());
      return 0;
    }
    if (app.got_subcommand(dec)) {
      std::printf("%s\n",
                  run_block_op(alg, key_hex, block_hex, true, false, backend_of(sbox_sel)).c_str());
      return 0;
    }
    if (app.got_subcommand(census_cmd))
      return run_census(census_workload, census_format, backend_of(sbox_sel));
    if (app.got_subcommand(gates)) return run_gates();
    if (app.got_subcommand(verify)) return run_verify_sbox();
    if (app.got_subcommand(disasm)) return run_disasm(disasm_word);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
