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

#include <memory>

#include "saes32/netlist.hpp"
#include "saes32/sbox.hpp"

namespace saes32 {

// Layered S-box circuit: a linear 8->21 top, the nonlinear 21->18 middle
// stage shared by all three kinds, and a linear 18->8 bottom. The middle
// uses XOR/AND gates only; tops and bottoms use XOR/XNOR only.
struct LayeredSBox {
  std::shared_ptr<const Netlist> top;
  std::shared_ptr<const Netlist> middle;
  std::shared_ptr<const Netlist> bottom;
  SboxKind kind = SboxKind::aes;

  // Composed evaluation on one byte (bit i of the byte on input wire x<i>).
  uint8_t lookup(uint8_t x) const;
};

LayeredSBox build_layered_sbox(SboxKind kind);

// The single shared middle-stage instance (identical object in every
// LayeredSBox returned by build_layered_sbox).
std::shared_ptr<const Netlist> shared_middle_netlist();

}  // namespace saes32
