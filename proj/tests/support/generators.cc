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

#include "support/generators.h"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace adgm::testing {

const char* const kPipelineSource = R"(architecture Pipeline {
  component Producer { port p : out; complexity 4; }
  component Filter   { port i : in; port o : out; complexity 7; }
  component Consumer { port c : in; complexity 2; }
  attach Producer.p -> Filter.i;
  attach Filter.o -> Consumer.c;
}
)";

namespace {

constexpr Direction kDirections[] = {Direction::kIn, Direction::kOut,
                                     Direction::kInOut};

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

struct PortLoc {
  std::size_t component;
  std::size_t port;
};

std::vector<PortLoc> AllPorts(const Architecture& arch) {
  std::vector<PortLoc> out;
  for (std::size_t c = 0; c < arch.components.size(); ++c) {
    for (std::size_t p = 0; p < arch.components[c].ports.size(); ++p) {
      out.push_back({c, p});
    }
  }
  return out;
}

const Port& PortAt(const Architecture& arch, PortLoc loc) {
  return arch.components[loc.component].ports[loc.port];
}

PortRef RefTo(const Architecture& arch, PortLoc loc) {
  return {arch.components[loc.component].name, PortAt(arch, loc).name, {}};
}

// A random (sender, receiver) pair of distinct ports, if one exists.
std::optional<std::pair<PortLoc, PortLoc>> RandomLink(
    const Architecture& arch, const std::vector<PortLoc>& ports, Rng& rng) {
  std::vector<PortLoc> senders;
  std::vector<PortLoc> receivers;
  for (const PortLoc& loc : ports) {
    if (CanSend(PortAt(arch, loc).direction)) senders.push_back(loc);
    if (CanReceive(PortAt(arch, loc).direction)) receivers.push_back(loc);
  }
  if (senders.empty() || receivers.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const PortLoc s = senders[Uniform(rng, 0, senders.size() - 1)];
    const PortLoc r = receivers[Uniform(rng, 0, receivers.size() - 1)];
    if (s.component != r.component || s.port != r.port) {
      return std::make_pair(s, r);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<PortLoc, PortLoc>> RandomDistinctPair(
    const std::vector<PortLoc>& ports, Rng& rng) {
  if (ports.size() < 2) return std::nullopt;
  const int a = Uniform(rng, 0, ports.size() - 1);
  int b = Uniform(rng, 0, ports.size() - 2);
  if (b >= a) ++b;
  return std::make_pair(ports[a], ports[b]);
}

void AddAccess(Architecture& arch, PortLoc via, const std::string& resource,
               AccessMode mode) {
  Component& comp = arch.components[via.component];
  comp.accesses.push_back({resource, mode, comp.ports[via.port].name, {}});
}

}  // namespace

Architecture RandomArchitecture(Rng& rng, const RandomArchOptions& opts) {
  Architecture arch;
  arch.name = "Gen";
  const int component_count = Uniform(rng, 0, opts.max_components);
  for (int c = 0; c < component_count; ++c) {
    Component comp;
    comp.name = "C" + std::to_string(c);
    comp.complexity = Uniform(rng, 0, 3) == 0 ? 0 : Uniform(rng, 1, 20);
    const int port_count = Uniform(rng, 0, opts.max_ports);
    for (int p = 0; p < port_count; ++p) {
      comp.ports.push_back(
          {"p" + std::to_string(p), kDirections[Uniform(rng, 0, 2)], {}});
    }
    arch.components.push_back(std::move(comp));
  }
  const std::vector<PortLoc> ports = AllPorts(arch);
  if (ports.empty()) return arch;

  const int resource_count = Uniform(rng, 0, opts.max_resources);
  for (int r = 0; r < resource_count; ++r) {
    arch.resources.push_back({"r" + std::to_string(r), {}});
  }
  if (resource_count > 0) {
    const int access_count = Uniform(rng, 0, 2 * resource_count + 2);
    for (int i = 0; i < access_count; ++i) {
      const PortLoc via = ports[Uniform(rng, 0, ports.size() - 1)];
      AddAccess(arch, via, arch.resources[Uniform(rng, 0, resource_count - 1)].name,
                Chance(rng, 0.5) ? AccessMode::kReads : AccessMode::kWrites);
    }
  }

  const int link_budget = static_cast<int>(ports.size());
  for (int i = Uniform(rng, 0, link_budget); i > 0; --i) {
    if (const auto link = RandomLink(arch, ports, rng)) {
      arch.attachments.push_back(
          {RefTo(arch, link->first), RefTo(arch, link->second), {}});
    }
  }
  for (int i = Uniform(rng, 0, link_budget / 3); i > 0; --i) {
    if (const auto link = RandomLink(arch, ports, rng)) {
      arch.befores.push_back(
          {RefTo(arch, link->first), RefTo(arch, link->second), {}});
    }
  }
  for (int i = Uniform(rng, 0, link_budget / 3); i > 0; --i) {
    if (const auto pair = RandomDistinctPair(ports, rng)) {
      arch.exclusives.push_back(
          {RefTo(arch, pair->first), RefTo(arch, pair->second), {}});
    }
  }
  // Occasionally repeat a declaration; duplicates must collapse.
  if (!arch.attachments.empty() && Chance(rng, 0.1)) {
    arch.attachments.push_back(arch.attachments.front());
  }

  for (const Component& comp : arch.components) {
    if (!Chance(rng, opts.internal_probability)) continue;
    std::vector<std::pair<std::string, std::string>> candidates;
    for (const Port& out : comp.ports) {
      for (const Port& in : comp.ports) {
        if (&out != &in && CanSend(out.direction) &&
            CanReceive(in.direction)) {
          candidates.emplace_back(out.name, in.name);
        }
      }
    }
    if (candidates.empty()) continue;
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const int keep = Uniform(rng, 1, candidates.size());
    for (int k = 0; k < keep; ++k) {
      arch.internal_flows.push_back(
          {comp.name, candidates[k].first, candidates[k].second, {}, {}, {}});
    }
  }
  return arch;
}

std::optional<Architecture> AddRandomDeclaration(const Architecture& arch,
                                                 Rng& rng, Addition* chosen) {
  const std::vector<PortLoc> ports = AllPorts(arch);
  if (ports.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Architecture next = arch;
    const auto kind = static_cast<Addition>(Uniform(rng, 0, 3));
    switch (kind) {
      case Addition::kAttach:
      case Addition::kBefore: {
        const auto link = RandomLink(next, ports, rng);
        if (!link) continue;
        Attachment att{RefTo(next, link->first), RefTo(next, link->second), {}};
        (kind == Addition::kAttach ? next.attachments : next.befores)
            .push_back(std::move(att));
        break;
      }
      case Addition::kExclusive: {
        const auto pair = RandomDistinctPair(ports, rng);
        if (!pair) continue;
        next.exclusives.push_back(
            {RefTo(next, pair->first), RefTo(next, pair->second), {}});
        break;
      }
      case Addition::kAccess: {
        if (next.resources.empty() || Chance(rng, 0.2)) {
          next.resources.push_back(
              {"extra" + std::to_string(next.resources.size()), {}});
        }
        const auto& res =
            next.resources[Uniform(rng, 0, next.resources.size() - 1)];
        AddAccess(next, ports[Uniform(rng, 0, ports.size() - 1)], res.name,
                  Chance(rng, 0.5) ? AccessMode::kReads : AccessMode::kWrites);
        break;
      }
    }
    if (chosen != nullptr) *chosen = kind;
    return next;
  }
  return std::nullopt;
}

Renaming RandomRenaming(const Architecture& arch, Rng& rng) {
  const auto permuted_names = [&rng](std::size_t count,
                                     const std::string& prefix) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::string> names;
    for (std::size_t i : order) {
      names.push_back(prefix + std::to_string(i) + "_" +
                      std::to_string(Uniform(rng, 0, 999)));
    }
    return names;
  };

  Renaming result;
  Architecture& out = result.renamed;
  out = arch;
  out.name = arch.name + "Renamed";

  std::map<std::string, std::string> component_map;
  std::map<std::string, std::map<std::string, std::string>> port_map;
  const auto comp_names = permuted_names(arch.components.size(), "Unit");
  for (std::size_t c = 0; c < arch.components.size(); ++c) {
    const Component& src = arch.components[c];
    component_map[src.name] = comp_names[c];
    const auto port_names = permuted_names(src.ports.size(), "q");
    for (std::size_t p = 0; p < src.ports.size(); ++p) {
      port_map[src.name][src.ports[p].name] = port_names[p];
      result.vertex_map[src.name + "." + src.ports[p].name] =
          comp_names[c] + "." + port_names[p];
    }
  }
  std::map<std::string, std::string> resource_map;
  const auto res_names = permuted_names(arch.resources.size(), "store");
  for (std::size_t r = 0; r < arch.resources.size(); ++r) {
    resource_map[arch.resources[r].name] = res_names[r];
  }

  const auto rename_ref = [&](PortRef& ref) {
    ref.port = port_map[ref.component][ref.port];
    ref.component = component_map[ref.component];
  };
  for (Component& comp : out.components) {
    const std::string old = comp.name;
    for (Port& port : comp.ports) port.name = port_map[old][port.name];
    for (ResourceAccess& access : comp.accesses) {
      access.via = port_map[old][access.via];
      access.resource = resource_map[access.resource];
    }
    comp.name = component_map[old];
  }
  for (ResourceDecl& res : out.resources) res.name = resource_map[res.name];
  for (auto* links : {&out.attachments, &out.befores}) {
    for (Attachment& att : *links) {
      rename_ref(att.from);
      rename_ref(att.to);
    }
  }
  for (ExclusivePair& ex : out.exclusives) {
    rename_ref(ex.a);
    rename_ref(ex.b);
  }
  for (InternalFlow& flow : out.internal_flows) {
    flow.out_port = port_map[flow.component][flow.out_port];
    flow.in_port = port_map[flow.component][flow.in_port];
    flow.component = component_map[flow.component];
  }
  return result;
}

int MaxDeclarations(int port_count) {
  if (port_count <= 2) return 4;
  if (port_count == 3) return 3;
  if (port_count <= 5) return 2;
  return 1;
}

namespace {

struct Candidate {
  enum Kind { kAttach, kBefore, kExclusive, kShared, kInternal } kind;
  PortLoc a;
  PortLoc b;
};

void Compositions(int n, std::vector<int>& parts,
                  std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(parts);
    return;
  }
  for (int k = 1; k <= std::min(n, 3); ++k) {
    parts.push_back(k);
    Compositions(n - k, parts, out);
    parts.pop_back();
  }
}

Architecture WithDeclarations(const Architecture& layout,
                              const std::vector<Candidate>& candidates,
                              const std::vector<std::size_t>& chosen) {
  Architecture arch = layout;
  bool needs_resource = false;
  for (std::size_t index : chosen) {
    const Candidate& cand = candidates[index];
    switch (cand.kind) {
      case Candidate::kAttach:
        arch.attachments.push_back(
            {RefTo(arch, cand.a), RefTo(arch, cand.b), {}});
        break;
      case Candidate::kBefore:
        arch.befores.push_back({RefTo(arch, cand.a), RefTo(arch, cand.b), {}});
        break;
      case Candidate::kExclusive:
        arch.exclusives.push_back(
            {RefTo(arch, cand.a), RefTo(arch, cand.b), {}});
        break;
      case Candidate::kShared:
        needs_resource = true;
        AddAccess(arch, cand.a, "r", AccessMode::kReads);
        AddAccess(arch, cand.b, "r", AccessMode::kWrites);
        break;
      case Candidate::kInternal: {
        const Component& comp = arch.components[cand.a.component];
        arch.internal_flows.push_back({comp.name, comp.ports[cand.a.port].name,
                                       comp.ports[cand.b.port].name, {}, {},
                                       {}});
        break;
      }
    }
  }
  if (needs_resource) arch.resources.push_back({"r", {}});
  return arch;
}

}  // namespace

std::uint64_t ForEachSmallArchitecture(
    const std::function<void(const Architecture&)>& visit) {
  std::uint64_t visited = 0;
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::vector<int>> layouts;
    std::vector<int> parts;
    Compositions(n, parts, layouts);
    const int direction_choices = n <= 4 ? 3 : 2;
    int assignments = 1;
    for (int i = 0; i < n; ++i) assignments *= direction_choices;

    for (const auto& layout_parts : layouts) {
      for (int code = 0; code < assignments; ++code) {
        Architecture layout;
        layout.name = "Small";
        int rest = code;
        for (std::size_t c = 0; c < layout_parts.size(); ++c) {
          Component comp;
          comp.name = "C" + std::to_string(c);
          comp.complexity = (c * 3 + 1) % 5;
          for (int p = 0; p < layout_parts[c]; ++p) {
            comp.ports.push_back({"p" + std::to_string(p),
                                  kDirections[rest % direction_choices],
                                  {}});
            rest /= direction_choices;
          }
          layout.components.push_back(std::move(comp));
        }

        const std::vector<PortLoc> ports = AllPorts(layout);
        std::vector<Candidate> candidates;
        for (std::size_t i = 0; i < ports.size(); ++i) {
          for (std::size_t j = 0; j < ports.size(); ++j) {
            if (i == j) continue;
            const Port& u = PortAt(layout, ports[i]);
            const Port& v = PortAt(layout, ports[j]);
            if (CanSend(u.direction) && CanReceive(v.direction)) {
              candidates.push_back({Candidate::kAttach, ports[i], ports[j]});
              candidates.push_back({Candidate::kBefore, ports[i], ports[j]});
              if (ports[i].component == ports[j].component) {
                candidates.push_back(
                    {Candidate::kInternal, ports[i], ports[j]});
              }
            }
            if (i < j) {
              candidates.push_back({Candidate::kExclusive, ports[i], ports[j]});
              candidates.push_back({Candidate::kShared, ports[i], ports[j]});
            }
          }
        }

        // Every subset of at most MaxDeclarations(n) candidates.
        const std::size_t limit = MaxDeclarations(n);
        std::vector<std::size_t> chosen;
        std::function<void(std::size_t)> extend = [&](std::size_t start) {
          visit(WithDeclarations(layout, candidates, chosen));
          ++visited;
          if (chosen.size() == limit) return;
          for (std::size_t k = start; k < candidates.size(); ++k) {
            chosen.push_back(k);
            extend(k + 1);
            chosen.pop_back();
          }
        };
        extend(0);
      }
    }
  }
  return visited;
}

}  // namespace adgm::testing
