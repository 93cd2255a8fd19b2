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

#include "adgm/report.h"

#include <sstream>

#include "json.hpp"

namespace adgm {

namespace {

using Json = nlohmann::ordered_json;

Json StringArray(const std::vector<std::string>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v);
  return arr;
}

std::string JoinWitnesses(const std::vector<std::string>& witnesses) {
  std::string out = "[";
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (i > 0) out += ", ";
    out += witnesses[i];
  }
  return out + "]";
}

}  // namespace

std::string RenderJson(const MetricsReport& report, const Adg& adg,
                       const CliConfig& config) {
  Json doc;
  doc["architecture"] = adg.name();
  doc["vertices"] = StringArray(adg.vertices());

  Json arcs = Json::array();
  for (const Arc& arc : adg.arcs()) {
    Json entry;
    entry["from"] = arc.source;
    entry["to"] = arc.target;
    entry["kind"] = std::string(ToString(arc.kind));
    arcs.push_back(std::move(entry));
  }
  doc["arcs"] = std::move(arcs);

  if (config.show_closure) {
    Json closure = Json::array();
    for (const auto& [from, to] : TransitiveClosure(Untyped(adg)).Pairs()) {
      Json entry;
      entry["from"] = adg.vertex(from);
      entry["to"] = adg.vertex(to);
      closure.push_back(std::move(entry));
    }
    doc["closure"] = std::move(closure);
  }

  Json metrics;
  metrics["m_t"] = report.m_t;
  Json by_kind;
  for (ArcKind kind : kAllArcKinds) {
    by_kind[std::string(ToString(kind))] = report.by_kind(kind);
  }
  metrics["m_t_by_kind"] = std::move(by_kind);
  metrics["m_g"] = report.m_g;
  metrics["m_t_star"] = report.m_t_star;
  metrics["m_g_star"] = report.m_g_star;
  metrics["m_s"] = report.m_s;
  metrics["m_s_witnesses"] = StringArray(report.m_s_witnesses);
  metrics["m_s_star"] = report.m_s_star;
  metrics["m_s_star_witnesses"] = StringArray(report.m_s_star_witnesses);
  doc["metrics"] = std::move(metrics);

  return doc.dump(2) + "\n";
}

std::string RenderText(const MetricsReport& report, const Adg& adg,
                       const CliConfig& config) {
  std::ostringstream out;
  out << "architecture " << adg.name() << "\n";
  out << "vertices: " << adg.vertex_count() << "\n";
  out << "arcs: " << adg.arcs().size() << "\n";
  out << "M_T = " << report.m_t << "\n";
  for (ArcKind kind : kAllArcKinds) {
    out << "M_T[" << ToString(kind) << "] = " << report.by_kind(kind) << "\n";
  }
  out << "M_G = " << report.m_g << "\n";
  out << "M'_T = " << report.m_t_star << "\n";
  out << "M'_G = " << report.m_g_star << "\n";
  out << "M_S = " << report.m_s << " " << JoinWitnesses(report.m_s_witnesses)
      << "\n";
  out << "M'_S = " << report.m_s_star << " "
      << JoinWitnesses(report.m_s_star_witnesses) << "\n";
  if (config.show_closure) {
    out << "closure:\n";
    for (const auto& [from, to] : TransitiveClosure(Untyped(adg)).Pairs()) {
      out << "  " << adg.vertex(from) << " -> " << adg.vertex(to) << "\n";
    }
  }
  return out.str();
}

}  // namespace adgm
