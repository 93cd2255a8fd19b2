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

// Dependence-based architecture metrics. All values are primitive counts.
//
//   M_T   number of classified arcs (a flow and a shared arc between the same
//         two ports count twice)
//   M_G   M_T plus the sum of declared component complexities
//   M'_T  number of pairs in the transitive closure of the untyped arc
//         relation
//   M'_G  M'_T plus the same complexity sum
//   M_S   largest number of distinct ports a single port directly depends on
//   M'_S  the same over the transitive closure
//
// M_S and M'_S report every vertex attaining the maximum, in vertex order.

#ifndef ADGM_METRICS_H_
#define ADGM_METRICS_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adgm/adg.h"
#include "adgm/model.h"

namespace adgm {

using Count = std::uint64_t;

struct MostAffected {
  Count value = 0;
  std::vector<std::string> witnesses;

  friend bool operator==(const MostAffected&, const MostAffected&) = default;
};

struct MetricsReport {
  Count m_t = 0;
  std::array<Count, 3> m_t_by_kind{};  // indexed by ArcKind
  Count m_g = 0;
  Count m_t_star = 0;
  Count m_g_star = 0;
  Count m_s = 0;
  std::vector<std::string> m_s_witnesses;
  Count m_s_star = 0;
  std::vector<std::string> m_s_star_witnesses;

  Count by_kind(ArcKind kind) const {
    return m_t_by_kind[static_cast<std::size_t>(kind)];
  }

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

Count TotalComplexity(const Adg& adg);
Count GlobalComplexity(const Adg& adg, std::span<const Count> complexities);
Count TotalComplexityStar(const Adg& adg);
// Component complexities under indirect analysis are the declared ones.
Count GlobalComplexityStar(const Adg& adg, std::span<const Count> complexities);
MostAffected MostAffectedPort(const Adg& adg);
MostAffected MostAffectedPortStar(const Adg& adg);

// Argmax of |row v| over all vertices of `r`, with witness names from `adg`.
MostAffected MaxFanOut(const Adg& adg, const Relation& r);

// Declared complexities of every component, in declaration order.
std::vector<Count> DeclaredComplexities(const Architecture& arch);

// Builds the ADG and fills every field. Requires Validate(arch).ok().
MetricsReport ComputeReport(const Architecture& arch,
                            bool default_internal = true);
// Same, for an already-built ADG of `arch`.
MetricsReport ComputeReport(const Adg& adg, std::span<const Count> complexities);

}  // namespace adgm

#endif  // ADGM_METRICS_H_
