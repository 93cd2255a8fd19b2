// Copyright 2026 The adg-metrics Authors
//
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

#ifndef ADGM_REPORT_H_
#define ADGM_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "adgm/adg.h"
#include "adgm/metrics.h"

namespace adgm {

enum class OutputFormat { kText, kJson };

struct CliConfig {
  std::string input_path;
  OutputFormat output_format = OutputFormat::kText;
  std::optional<std::string> dot_path;
  bool default_internal = true;
  bool show_closure = false;
};

// JSON report. Keys appear in a fixed order, indentation is two spaces and
// the text ends with a newline:
//
//   {
//     "architecture": ..., "vertices": [...],
//     "arcs": [{"from", "to", "kind"}...],
//     "closure": [{"from", "to"}...],      (only with show_closure)
//     "metrics": {"m_t", "m_t_by_kind": {"shared", "flow", "constrained"},
//                 "m_g", "m_t_star", "m_g_star", "m_s", "m_s_witnesses",
//                 "m_s_star", "m_s_star_witnesses"}
//   }
std::string RenderJson(const MetricsReport& report, const Adg& adg,
                       const CliConfig& config);

// Plain-text table, one metric per line in a fixed order.
std::string RenderText(const MetricsReport& report, const Adg& adg,
                       const CliConfig& config);

// Exit codes of Run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Entry point of the `adg-metrics` tool; argv[0] is the program name.
//
//   adg-metrics analyze <path> [--json | --text] [--dot <path>]
//                              [--no-default-internal] [--closure]
int Run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);

}  // namespace adgm

#endif  // ADGM_REPORT_H_
