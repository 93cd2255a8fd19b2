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

#include "adgm/metrics.h"

#include <numeric>

namespace adgm {

namespace {

Count Sum(std::span<const Count> values) {
  return std::accumulate(values.begin(), values.end(), Count{0});
}

}  // namespace

Count TotalComplexity(const Adg& adg) { return adg.arcs().size(); }

Count GlobalComplexity(const Adg& adg, std::span<const Count> complexities) {
  return TotalComplexity(adg) + Sum(complexities);
}

Count TotalComplexityStar(const Adg& adg) {
  return TransitiveClosure(Untyped(adg)).size();
}

Count GlobalComplexityStar(const Adg& adg,
                           std::span<const Count> complexities) {
  return TotalComplexityStar(adg) + Sum(complexities);
}

MostAffected MaxFanOut(const Adg& adg, const Relation& r) {
  MostAffected result;
  for (VertexIndex v = 0; v < adg.vertex_count(); ++v) {
    const Count fan_out = r.RowSize(v);
    if (fan_out > result.value) {
      result.value = fan_out;
      result.witnesses.clear();
    }
    if (fan_out == result.value) result.witnesses.push_back(adg.vertex(v));
  }
  return result;
}

MostAffected MostAffectedPort(const Adg& adg) {
  return MaxFanOut(adg, Untyped(adg));
}

MostAffected MostAffectedPortStar(const Adg& adg) {
  return MaxFanOut(adg, TransitiveClosure(Untyped(adg)));
}

std::vector<Count> DeclaredComplexities(const Architecture& arch) {
  std::vector<Count> out;
  out.reserve(arch.components.size());
  for (const auto& comp : arch.components) out.push_back(comp.complexity);
  return out;
}

MetricsReport ComputeReport(const Adg& adg,
                            std::span<const Count> complexities) {
  MetricsReport report;
  for (const Arc& arc : adg.arcs()) {
    ++report.m_t_by_kind[static_cast<std::size_t>(arc.kind)];
  }
  const Count code_level = Sum(complexities);
  const Relation direct = Untyped(adg);
  const Relation closure = TransitiveClosure(direct);

  report.m_t = TotalComplexity(adg);
  report.m_g = report.m_t + code_level;
  report.m_t_star = closure.size();
  report.m_g_star = report.m_t_star + code_level;

  MostAffected ms = MaxFanOut(adg, direct);
  report.m_s = ms.value;
  report.m_s_witnesses = std::move(ms.witnesses);
  MostAffected ms_star = MaxFanOut(adg, closure);
  report.m_s_star = ms_star.value;
  report.m_s_star_witnesses = std::move(ms_star.witnesses);
  return report;
}

MetricsReport ComputeReport(const Architecture& arch, bool default_internal) {
  const Adg adg = BuildAdg(arch, default_internal);
  const std::vector<Count> complexities = DeclaredComplexities(arch);
  return ComputeReport(adg, complexities);
}

}  // namespace adgm
