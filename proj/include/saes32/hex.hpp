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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saes32 {

// Hex strings are big-endian byte streams, exactly as printed in the
// standards' test vectors.
std::vector<uint8_t> parse_hex(std::string_view s);  // throws std::invalid_argument
std::string to_hex(std::span<const uint8_t> bytes);  // lowercase

}  // namespace saes32
