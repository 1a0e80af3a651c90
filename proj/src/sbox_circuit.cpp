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

#include "saes32/sbox_circuit.hpp"

#include <array>
#include <stdexcept>

#include "saes32/sbox_circuit_data.hpp"

namespace saes32 {

uint8_t LayeredSBox::lookup(uint8_t x) const {
  std::array<uint8_t, 8> bits;
  for (int i = 0; i < 8; i++) bits[i] = (x >> i) & 1;
  const auto t = top->eval(bits);
  const auto m = middle->eval(t);
  const auto y = bottom->eval(m);
  uint8_t r = 0;
  for (int i = 0; i < 8; i++) r |= static_cast<uint8_t>(y[i] << i);
  return r;
}

std::shared_ptr<const Netlist> shared_middle_netlist() {
  static const auto middle =
      std::make_shared<const Netlist>(Netlist::parse(circuit_data::kSharedMiddle));
  return middle;
}

LayeredSBox build_layered_sbox(SboxKind kind) {
  static const auto aes_top =
      std::make_shared<const Netlist>(Netlist::parse(circuit_data::kAesTop));
  static const auto aes_bot =
      std::make_shared<const Netlist>(Netlist::parse(circuit_data::kAesBottom));
  static const auto inv_top =
      std::make_shared<const Netlist>(Netlist::parse(circuit_data::kAesInvTop));
  static const auto inv_bot =
      std::make_shared<const Netlist>(Netlist::parse(circuit_data::kAesInvBottom));
  static const auto sm4_top =
      std::make_shared<const Netlist>(Netlist::parse(circuit_data::kSm4Top));
  static const auto sm4_bot =
      std::make_shared<const Netlist>(Netlist::parse(circuit_data::kSm4Bottom));

  LayeredSBox s;
  s.kind = kind;
  s.middle = shared_middle_netlist();
  switch (kind) {
    case SboxKind::aes: s.top = aes_top; s.bottom = aes_bot; break;
    case SboxKind::aes_inv: s.top = inv_top; s.bottom = inv_bot; break;
    case SboxKind::sm4: s.top = sm4_top; s.bottom = sm4_bot; break;
    default: throw std::invalid_argument("build_layered_sbox: bad kind");
  }
  return s;
}

}  // namespace saes32
