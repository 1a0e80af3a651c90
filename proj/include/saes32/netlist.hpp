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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saes32 {

enum class GateOp : uint8_t { gate_xor, gate_xnor, gate_and };

struct Gate {
  GateOp op;
  uint16_t in_a;
  uint16_t in_b;
  uint16_t out;

  bool operator==(const Gate&) const = default;
};

// Ordered two-input gate list over named wires. Wires 0..n_inputs-1 are the
// inputs; each gate defines exactly one new wire (single static assignment)
// and may only read wires defined before it, so the list is topologically
// ordered by construction.
//
// Text form: an `inputs N` line, an `outputs <name>...` line, then one gate
// per line as `OUT = OP A B` with wires named x0.. (inputs), y0.. (outputs)
// and t0.. (temporaries).
class Netlist {
 public:
  Netlist(size_t n_inputs, std::vector<Gate> gates, std::vector<uint16_t> output_wires,
          std::vector<std::string> wire_names);

  static Netlist parse(std::string_view text);
  std::string serialize() const;

  // In-order gate evaluation over a 0/1 bit vector.
  // Throws std::invalid_argument if inputs.size() != n_inputs().
  std::vector<uint8_t> eval(std::span<const uint8_t> inputs) const;

  size_t n_inputs() const { return n_inputs_; }
  size_t n_outputs() const { return output_wires_.size(); }
  size_t n_wires() const { return n_inputs_ + gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<uint16_t>& output_wires() const { return output_wires_; }
  const std::string& wire_name(size_t w) const { return wire_names_[w]; }

  bool operator==(const Netlist&) const = default;

 private:
  size_t n_inputs_;
  std::vector<Gate> gates_;
  std::vector<uint16_t> output_wires_;
  std::vector<std::string> wire_names_;  // one per wire, inputs first
};

struct GateStats {
  size_t xor_count = 0;
  size_t xnor_count = 0;
  size_t and_count = 0;
  size_t total = 0;
  size_t depth = 0;  // longest input-to-output path, in gates
};

GateStats gate_stats(const Netlist& nl);

}  // namespace saes32
