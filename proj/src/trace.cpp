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

#include "saes32/trace.hpp"

#include <stdexcept>

namespace saes32 {

uint64_t InstrCounts::saes32_total() const {
  uint64_t t = 0;
  for (uint64_t c : saes32) t += c;
  return t;
}

uint64_t InstrCounts::arith_total() const {
  return saes32_total() + xor_ops + rot_ops + other_arith;
}

InstrCounts InstrCounts::operator+(const InstrCounts& o) const {
  InstrCounts r = *this;
  for (size_t i = 0; i < saes32.size(); i++) r.saes32[i] += o.saes32[i];
  r.xor_ops += o.xor_ops;
  r.rot_ops += o.rot_ops;
  r.other_arith += o.other_arith;
  r.subkey_loads += o.subkey_loads;
  r.key_loads += o.key_loads;
  r.macro_ed4 += o.macro_ed4;
  r.macro_ks4 += o.macro_ks4;
  return r;
}

InstrCounts InstrCounts::operator-(const InstrCounts& o) const {
  InstrCounts r = *this;
  for (size_t i = 0; i < saes32.size(); i++) r.saes32[i] -= o.saes32[i];
  r.xor_ops -= o.xor_ops;
  r.rot_ops -= o.rot_ops;
  r.other_arith -= o.other_arith;
  r.subkey_loads -= o.subkey_loads;
  r.key_loads -= o.key_loads;
  r.macro_ed4 -= o.macro_ed4;
  r.macro_ks4 -= o.macro_ks4;
  return r;
}

void InstrTrace::scope_begin(std::string label) {
  open_.emplace_back(std::move(label), totals);
}

void InstrTrace::scope_end() {
  if (open_.empty()) throw std::logic_error("InstrTrace: scope_end without scope_begin");
  auto [label, snapshot] = std::move(open_.back());
  open_.pop_back();
  scopes_.push_back(ScopeCounts{std::move(label), totals - snapshot});
}

InstrCounts InstrTrace::scope_sum(const std::string& prefix) const {
  InstrCounts sum;
  for (const auto& s : scopes_) {
    if (s.label.rfind(prefix, 0) == 0) sum = sum + s.counts;
  }
  return sum;
}

InstrTrace merge(const InstrTrace& a, const InstrTrace& b) {
  InstrTrace r;
  r.totals = a.totals + b.totals;
  r.scopes_ = a.scopes_;
  r.scopes_.insert(r.scopes_.end(), b.scopes_.begin(), b.scopes_.end());
  return r;
}

}  // namespace saes32
