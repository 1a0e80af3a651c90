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

namespace saes32::circuit_data {

// Netlist sources in the text format of Netlist::parse.
extern const char* const kSharedMiddle;   // 21 -> 18, XOR/AND only
extern const char* const kAesTop;         // 8 -> 21
extern const char* const kAesBottom;      // 18 -> 8
extern const char* const kAesInvTop;      // 8 -> 21
extern const char* const kAesInvBottom;   // 18 -> 8
extern const char* const kSm4Top;         // 8 -> 21
extern const char* const kSm4Bottom;      // 18 -> 8

}  // namespace saes32::circuit_data
