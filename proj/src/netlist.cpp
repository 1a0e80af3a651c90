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

#include "saes32/netlist.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace saes32 {

static std::string_view op_name(GateOp op) {
  switch (op) {
    case GateOp::gate_xor: return "xor";
    case GateOp::gate_xnor: return "xnor";
    case GateOp::gate_and: return "and";
  }
  return "?";
}

Netlist::Netlist(size_t n_inputs, std::vector<Gate> gates, std::vector<uint16_t> output_wires,
                 std::vector<std::string> wire_names)
    : n_inputs_(n_inputs),
      gates_(std::move(gates)),
      output_wires_(std::move(output_wires)),
      wire_names_(std::move(wire_names)) {
  const size_t nw = n_inputs_ + gates_.size();
  if (wire_names_.size() != nw) throw std::invalid_argument("netlist: wire name count mismatch");
  std::vector<bool> defined(nw, false);
  for (size_t i = 0; i < n_inputs_; i++) defined[i] = true;
  for (size_t g = 0; g < gates_.size(); g++) {
    const Gate& gate = gates_[g];
    if (gate.out != n_inputs_ + g) throw std::invalid_argument("netlist: gate out-of-order");
    if (gate.in_a >= gate.out || gate.in_b >= gate.out || !defined[gate.in_a] ||
        !defined[gate.in_b])
      throw std::invalid_argument("netlist: gate reads an undefined wire");
    if (defined[gate.out]) throw std::invalid_argument("netlist: wire assigned twice");
    defined[gate.out] = true;
  }
  for (uint16_t w : output_wires_) {
    if (w >= nw) throw std::invalid_argument("netlist: output wire out of range");
  }
}

Netlist Netlist::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  size_t n_inputs = 0;
  std::vector<std::string> out_names;
  bool have_inputs = false, have_outputs = false;

  std::map<std::string, uint16_t> index_of;
  std::vector<std::string> names;
  std::vector<Gate> gates;

  auto fail = [](const std::string& msg) { throw std::invalid_argument("netlist: " + msg); };

  while (std::getline(in, line)) {
    // strip comments and whitespace
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!have_inputs) {
      if (tok.size() != 2 || tok[0] != "inputs") fail("expected 'inputs N' first");
      n_inputs = static_cast<size_t>(std::stoul(tok[1]));
      for (size_t i = 0; i < n_inputs; i++) {
        names.push_back("x" + std::to_string(i));
        index_of[names.back()] = static_cast<uint16_t>(i);
      }
      have_inputs = true;
      continue;
    }
    if (!have_outputs) {
      if (tok[0] != "outputs" || tok.size() < 2) fail("expected 'outputs <names>' second");
      out_names.assign(tok.begin() + 1, tok.end());
      have_outputs = true;
      continue;
    }
    if (tok.size() != 5 || tok[1] != "=") fail("bad gate line: " + line);
    const std::string& lhs = tok[0];
    const std::string& opname = tok[2];
    GateOp op;
    if (opname == "xor") op = GateOp::gate_xor;
    else if (opname == "xnor") op = GateOp::gate_xnor;
    else if (opname == "and") op = GateOp::gate_and;
    else fail("unknown gate op: " + opname);
    auto ita = index_of.find(tok[3]);
    auto itb = index_of.find(tok[4]);
    if (ita == index_of.end() || itb == index_of.end()) fail("undefined operand in: " + line);
    if (index_of.count(lhs)) fail("wire assigned twice: " + lhs);
    const uint16_t out = static_cast<uint16_t>(names.size());
    gates.push_back(Gate{op, ita->second, itb->second, out});
    index_of[lhs] = out;
    names.push_back(lhs);
  }
  if (!have_inputs || !have_outputs) fail("missing inputs/outputs header");

  std::vector<uint16_t> outs;
  for (const auto& n : out_names) {
    auto it = index_of.find(n);
    if (it == index_of.end()) fail("undefined output wire: " + n);
    outs.push_back(it->second);
  }
  return Netlist(n_inputs, std::move(gates), std::move(outs), std::move(names));
}

std::string Netlist::serialize() const {
  std::ostringstream out;
  out << "inputs " << n_inputs_ << "\n";
  out << "outputs";
  for (uint16_t w : output_wires_) out << ' ' << wire_names_[w];
  out << "\n";
  for (const Gate& g : gates_) {
    out << wire_names_[g.out] << " = " << op_name(g.op) << ' ' << wire_names_[g.in_a] << ' '
        << wire_names_[g.in_b] << "\n";
  }
  return out.str();
}

std::vector<uint8_t> Netlist::eval(std::span<const uint8_t> inputs) const {
  if (inputs.size() != n_inputs_)
    throw std::invalid_argument("netlist eval: input length mismatch");
  std::vector<uint8_t> vals(n_wires());
  std::copy(inputs.begin(), inputs.end(), vals.begin());
  for (const Gate& g : gates_) {
    const uint8_t a = vals[g.in_a], b = vals[g.in_b];
    switch (g.op) {
      case GateOp::gate_xor: vals[g.out] = a ^ b; break;
      case GateOp::gate_xnor: vals[g.out] = a ^ b ^ 1u; break;
      case GateOp::gate_and: vals[g.out] = a & b; break;
    }
  }
  std::vector<uint8_t> out(n_outputs());
  for (size_t i = 0; i < out.size(); i++) out[i] = vals[output_wires_[i]];
  return out;
}

GateStats gate_stats(const Netlist& nl) {
  GateStats s;
  std::vector<size_t> depth(nl.n_wires(), 0);
  for (const Gate& g : nl.gates()) {
    switch (g.op) {
      case GateOp::gate_xor: s.xor_count++; break;
      case GateOp::gate_xnor: s.xnor_count++; break;
      case GateOp::gate_and: s.and_count++; break;
    }
    depth[g.out] = 1 + std::max(depth[g.in_a], depth[g.in_b]);
  }
  s.total = nl.gates().size();
  for (uint16_t w : nl.output_wires()) s.depth = std::max(s.depth, depth[w]);
  return s;
}

}  // namespace saes32
