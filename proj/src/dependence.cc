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

#include "adgm/dependence.h"

#include <map>
#include <string>
#include <vector>

namespace adgm {

namespace {

std::string Qualify(const std::string& component, const std::string& port) {
  return component + "." + port;
}

void AddSymmetric(ArcSet& arcs, const std::string& a, const std::string& b,
                  ArcKind kind) {
  if (a == b) return;
  arcs.insert({a, b, kind});
  arcs.insert({b, a, kind});
}

}  // namespace

std::string_view ToString(ArcKind kind) {
  switch (kind) {
    case ArcKind::kShared:
      return "shared";
    case ArcKind::kFlow:
      return "flow";
    case ArcKind::kConstrained:
      return "constrained";
  }
  return "?";
}

std::optional<ArcKind> ArcKindFromString(std::string_view name) {
  for (ArcKind kind : kAllArcKinds) {
    if (ToString(kind) == name) return kind;
  }
  return std::nullopt;
}

ArcSet InferFlow(const Architecture& arch, bool default_internal) {
  ArcSet arcs;
  for (const auto* links : {&arch.attachments, &arch.befores}) {
    for (const auto& att : *links) {
      arcs.insert({att.to.Qualified(), att.from.Qualified(), ArcKind::kFlow});
    }
  }

  std::map<std::string, std::vector<const InternalFlow*>> declared;
  for (const auto& flow : arch.internal_flows) {
    declared[flow.component].push_back(&flow);
  }
  for (const auto& comp : arch.components) {
    const auto it = declared.find(comp.name);
    if (it != declared.end()) {
      for (const InternalFlow* flow : it->second) {
        arcs.insert({Qualify(comp.name, flow->out_port),
                     Qualify(comp.name, flow->in_port), ArcKind::kFlow});
      }
      continue;
    }
    if (!default_internal) continue;
    for (const auto& out : comp.ports) {
      if (!CanSend(out.direction)) continue;
      for (const auto& in : comp.ports) {
        if (&in == &out || !CanReceive(in.direction)) continue;
        arcs.insert({Qualify(comp.name, out.name), Qualify(comp.name, in.name),
                     ArcKind::kFlow});
      }
    }
  }
  return arcs;
}

ArcSet InferShared(const Architecture& arch) {
  // resource -> distinct accessing ports
  std::map<std::string, std::set<std::string>> users;
  for (const auto& comp : arch.components) {
    for (const auto& access : comp.accesses) {
      users[access.resource].insert(Qualify(comp.name, access.via));
    }
  }
  ArcSet arcs;
  for (const auto& [resource, ports] : users) {
    for (auto a = ports.begin(); a != ports.end(); ++a) {
      for (auto b = std::next(a); b != ports.end(); ++b) {
        AddSymmetric(arcs, *a, *b, ArcKind::kShared);
      }
    }
  }
  return arcs;
}

ArcSet InferConstrained(const Architecture& arch) {
  ArcSet arcs;
  for (const auto& ex : arch.exclusives) {
    AddSymmetric(arcs, ex.a.Qualified(), ex.b.Qualified(),
                 ArcKind::kConstrained);
  }
  return arcs;
}

ArcSet InferAll(const Architecture& arch, bool default_internal) {
  ArcSet arcs = InferFlow(arch, default_internal);
  arcs.merge(InferShared(arch));
  arcs.merge(InferConstrained(arch));
  return arcs;
}

}  // namespace adgm
