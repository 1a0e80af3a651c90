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

#include <string>
#include <vector>

#include "saes32/isa.hpp"
#include "saes32/trace.hpp"

namespace saes32 {

enum class Workload {
  aes128_enc, aes128_dec, aes128_otf,
  aes192_enc, aes192_dec, aes192_otf,
  aes256_enc, aes256_dec, aes256_otf,
  sm4_enc, sm4_dec, sm4_ks,
};

const char* workload_name(Workload w);
std::vector<Workload> all_workloads();

// Runs the workload on fixed standard inputs with a fresh trace.
// Deterministic; tracing is observation-only.
InstrTrace census(Workload w, SboxBackend backend = SboxBackend::table);

struct CensusRow {
  std::string workload;
  InstrCounts totals;
  InstrCounts per_round;  // meaningful when rounds > 0
  int rounds = 0;
};

CensusRow census_row(Workload w, SboxBackend backend = SboxBackend::table);
std::string render_census_text(const std::vector<CensusRow>& rows);
std::string render_census_tsv(const std::vector<CensusRow>& rows);

// Instruction-count comparison against cited baseline figures. The baselines
// are embedded constants with provenance, never measured here; ratios are
// computed, not asserted. No cycle accuracy is claimed anywhere.
struct BaselineRow {
  std::string workload;
  double ext_count = 0;       // per-round count with the extension
  double baseline_count = 0;  // per-round count, cited baseline
  double ratio = 0;           // baseline / ext, computed
  bool estimate_only = false;
  std::string note;
};

struct ComparisonReport {
  std::vector<BaselineRow> rows;
  std::string render_text() const;
  std::string render_tsv() const;
};

ComparisonReport compare_baseline();

}  // namespace saes32
