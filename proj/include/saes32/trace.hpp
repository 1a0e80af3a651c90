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
#include <string>
#include <vector>

namespace saes32 {

// Architectural instruction census for one execution. Counts are monotone
// non-decreasing while a workload runs; tracing never changes results.
struct InstrCounts {
  std::array<uint64_t, 6> saes32{};  // indexed by Op3 value
  uint64_t xor_ops = 0;              // word XORs outside the modeled instruction
  uint64_t rot_ops = 0;              // word rotations
  uint64_t other_arith = 0;
  uint64_t subkey_loads = 0;         // loads from a precomputed key schedule
  uint64_t key_loads = 0;            // loads of raw cipher-key words
  uint64_t macro_ed4 = 0;            // four-wide ssm4.ed pseudo-instruction groups
  uint64_t macro_ks4 = 0;

  uint64_t saes32_total() const;
  // register-to-register arithmetic: saes32 + xor + rot + other
  uint64_t arith_total() const;
  uint64_t load_total() const { return subkey_loads + key_loads; }

  InstrCounts operator+(const InstrCounts& o) const;
  InstrCounts operator-(const InstrCounts& o) const;
  bool operator==(const InstrCounts&) const = default;
};

struct ScopeCounts {
  std::string label;
  InstrCounts counts;
};

// Caller-owned trace context; never global. Scopes give labeled subtotals
// (per round, per subkey block, per schedule) via begin/end bracketing.
class InstrTrace {
 public:
  InstrCounts totals;

  void scope_begin(std::string label);
  void scope_end();
  const std::vector<ScopeCounts>& scopes() const { return scopes_; }

  // Subtotal over all closed scopes whose label starts with `prefix`.
  InstrCounts scope_sum(const std::string& prefix) const;

  friend InstrTrace merge(const InstrTrace& a, const InstrTrace& b);

 private:
  std::vector<std::pair<std::string, InstrCounts>> open_;
  std::vector<ScopeCounts> scopes_;
};

// Associative merge of two trace results.
InstrTrace merge(const InstrTrace& a, const InstrTrace& b);

}  // namespace saes32
