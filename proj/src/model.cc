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

#include "adgm/model.h"

#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace adgm {

std::string_view ToString(Direction dir) {
  switch (dir) {
    case Direction::kIn:
      return "in";
    case Direction::kOut:
      return "out";
    case Direction::kInOut:
      return "inout";
  }
  return "?";
}

std::string_view ToString(AccessMode mode) {
  return mode == AccessMode::kReads ? "reads" : "writes";
}

int Component::FindPort(std::string_view port_name) const {
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (ports[i].name == port_name) return static_cast<int>(i);
  }
  return -1;
}

int Architecture::FindComponent(std::string_view component_name) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].name == component_name) return static_cast<int>(i);
  }
  return -1;
}

bool Architecture::HasResource(std::string_view resource_name) const {
  for (const auto& r : resources) {
    if (r.name == resource_name) return true;
  }
  return false;
}

bool operator==(const Port& a, const Port& b) {
  return a.name == b.name && a.direction == b.direction;
}

bool operator==(const ResourceAccess& a, const ResourceAccess& b) {
  return a.resource == b.resource && a.mode == b.mode && a.via == b.via;
}

bool operator==(const Component& a, const Component& b) {
  return a.name == b.name && a.ports == b.ports &&
         a.complexity == b.complexity && a.accesses == b.accesses;
}

bool operator==(const PortRef& a, const PortRef& b) {
  return a.component == b.component && a.port == b.port;
}

bool operator==(const Attachment& a, const Attachment& b) {
  return a.from == b.from && a.to == b.to;
}

bool operator==(const ExclusivePair& a, const ExclusivePair& b) {
  return a.a == b.a && a.b == b.b;
}

bool operator==(const InternalFlow& a, const InternalFlow& b) {
  return a.component == b.component && a.out_port == b.out_port &&
         a.in_port == b.in_port;
}

bool operator==(const ResourceDecl& a, const ResourceDecl& b) {
  return a.name == b.name;
}

bool operator==(const Architecture& a, const Architecture& b) {
  return a.name == b.name && a.components == b.components &&
         a.resources == b.resources && a.attachments == b.attachments &&
         a.befores == b.befores && a.exclusives == b.exclusives &&
         a.internal_flows == b.internal_flows;
}

namespace {

class Validator {
 public:
  explicit Validator(const Architecture& arch) : arch_(arch) {}

  ValidationOutcome Run() {
    std::set<std::string> component_names;
    for (const auto& comp : arch_.components) {
      if (!component_names.insert(comp.name).second) {
        Report(ViolationKind::kDuplicateComponent, comp.name,
               "duplicate component '" + comp.name + "'", comp.pos);
      }
      std::set<std::string> port_names;
      for (const auto& port : comp.ports) {
        if (!port_names.insert(port.name).second) {
          Report(ViolationKind::kDuplicatePort, comp.name + "." + port.name,
                 "duplicate port '" + port.name + "' in component '" +
                     comp.name + "'",
                 port.pos);
        }
      }
      for (const auto& access : comp.accesses) {
        if (!arch_.HasResource(access.resource)) {
          Report(ViolationKind::kUnknownResource, access.resource,
                 "undeclared resource '" + access.resource + "'", access.pos);
        }
        if (comp.FindPort(access.via) < 0) {
          Report(ViolationKind::kUnknownPort, comp.name + "." + access.via,
                 "component '" + comp.name + "' has no port '" + access.via +
                     "'",
                 access.pos);
        }
      }
    }

    std::set<std::string> resource_names;
    for (const auto& res : arch_.resources) {
      if (!resource_names.insert(res.name).second) {
        Report(ViolationKind::kDuplicateResource, res.name,
               "duplicate resource '" + res.name + "'", res.pos);
      }
    }

    for (const auto& att : arch_.attachments) CheckLink(att, "attach");
    for (const auto& att : arch_.befores) CheckLink(att, "before");

    for (const auto& ex : arch_.exclusives) {
      bool resolved = Resolve(ex.a) != nullptr;
      resolved = Resolve(ex.b) != nullptr && resolved;
      if (resolved && ex.a == ex.b) {
        Report(ViolationKind::kSelfReference, ex.a.Qualified(),
               "port '" + ex.a.Qualified() + "' cannot exclude itself", ex.pos);
      }
    }

    for (const auto& flow : arch_.internal_flows) CheckInternal(flow);

    return std::move(outcome_);
  }

 private:
  void Report(ViolationKind kind, std::string identifier, std::string message,
              SourcePos pos) {
    outcome_.violations.push_back(
        {kind, std::move(identifier), std::move(message), pos});
  }

  // Resolves a port reference, reporting a violation when it dangles.
  const Port* Resolve(const PortRef& ref) {
    const int ci = arch_.FindComponent(ref.component);
    if (ci < 0) {
      Report(ViolationKind::kUnknownComponent, ref.component,
             "unknown component '" + ref.component + "'", ref.pos);
      return nullptr;
    }
    const Component& comp = arch_.components[ci];
    const int pi = comp.FindPort(ref.port);
    if (pi < 0) {
      Report(ViolationKind::kUnknownPort, ref.Qualified(),
             "component '" + ref.component + "' has no port '" + ref.port +
                 "'",
             ref.pos);
      return nullptr;
    }
    return &comp.ports[pi];
  }

  void CheckLink(const Attachment& att, std::string_view keyword) {
    const Port* from = Resolve(att.from);
    const Port* to = Resolve(att.to);
    if (from == nullptr || to == nullptr) return;
    if (att.from == att.to) {
      Report(ViolationKind::kSelfReference, att.from.Qualified(),
             std::string(keyword) + " from port '" + att.from.Qualified() +
                 "' to itself",
             att.pos);
      return;
    }
    if (!CanSend(from->direction)) {
      Report(ViolationKind::kDirection, att.from.Qualified(),
             std::string(keyword) + " source '" + att.from.Qualified() +
                 "' is an in port",
             att.from.pos);
    }
    if (!CanReceive(to->direction)) {
      Report(ViolationKind::kDirection, att.to.Qualified(),
             std::string(keyword) + " target '" + att.to.Qualified() +
                 "' is an out port",
             att.to.pos);
    }
  }

  void CheckInternal(const InternalFlow& flow) {
    const int ci = arch_.FindComponent(flow.component);
    if (ci < 0) {
      Report(ViolationKind::kUnknownComponent, flow.component,
             "unknown component '" + flow.component + "'", flow.pos);
      return;
    }
    const Component& comp = arch_.components[ci];
    const auto check_port = [&](const std::string& name, SourcePos pos,
                                bool want_send) -> bool {
      const int pi = comp.FindPort(name);
      if (pi < 0) {
        Report(ViolationKind::kUnknownPort, comp.name + "." + name,
               "component '" + comp.name + "' has no port '" + name + "'",
               pos);
        return false;
      }
      const Direction dir = comp.ports[pi].direction;
      if (want_send && !CanSend(dir)) {
        Report(ViolationKind::kDirection, comp.name + "." + name,
               "internal flow target '" + comp.name + "." + name +
                   "' is an in port",
               pos);
      } else if (!want_send && !CanReceive(dir)) {
        Report(ViolationKind::kDirection, comp.name + "." + name,
               "internal flow source '" + comp.name + "." + name +
                   "' is an out port",
               pos);
      }
      return true;
    };
    const bool out_ok = check_port(flow.out_port, flow.out_pos, true);
    const bool in_ok = check_port(flow.in_port, flow.in_pos, false);
    if (out_ok && in_ok && flow.out_port == flow.in_port) {
      Report(ViolationKind::kSelfReference, comp.name + "." + flow.out_port,
             "internal flow from port '" + comp.name + "." + flow.out_port +
                 "' to itself",
             flow.pos);
    }
  }

  const Architecture& arch_;
  ValidationOutcome outcome_;
};

}  // namespace

ValidationOutcome Validate(const Architecture& arch) {
  return Validator(arch).Run();
}

std::string PrettyPrint(const Architecture& arch) {
  std::ostringstream out;
  out << "architecture " << arch.name << " {\n";
  for (const auto& res : arch.resources) {
    out << "  resource " << res.name << ";\n";
  }
  for (const auto& comp : arch.components) {
    out << "  component " << comp.name << " {";
    if (comp.ports.empty() && comp.complexity == 0 && comp.accesses.empty()) {
      out << "}\n";
      continue;
    }
    out << "\n";
    for (const auto& port : comp.ports) {
      out << "    port " << port.name << " : " << ToString(port.direction)
          << ";\n";
    }
    if (comp.complexity != 0) {
      out << "    complexity " << comp.complexity << ";\n";
    }
    for (const auto& access : comp.accesses) {
      out << "    " << ToString(access.mode) << " " << access.resource
          << " via " << access.via << ";\n";
    }
    out << "  }\n";
  }
  for (const auto& att : arch.attachments) {
    out << "  attach " << att.from.Qualified() << " -> " << att.to.Qualified()
        << ";\n";
  }
  for (const auto& att : arch.befores) {
    out << "  before " << att.from.Qualified() << " -> " << att.to.Qualified()
        << ";\n";
  }
  for (const auto& ex : arch.exclusives) {
    out << "  exclusive " << ex.a.Qualified() << ", " << ex.b.Qualified()
        << ";\n";
  }
  for (const auto& flow : arch.internal_flows) {
    out << "  internal " << flow.component << "." << flow.out_port << " <- "
        << flow.component << "." << flow.in_port << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace adgm
