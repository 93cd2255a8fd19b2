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

#include "adgm/adg.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace adgm {

namespace {

constexpr std::size_t kWordBits = 64;

std::uint64_t Bit(VertexIndex j) { return std::uint64_t{1} << (j % kWordBits); }

std::string_view EdgeStyle(ArcKind kind) {
  switch (kind) {
    case ArcKind::kFlow:
      return "solid";
    case ArcKind::kShared:
      return "dashed";
    case ArcKind::kConstrained:
      return "dotted";
  }
  return "solid";
}

}  // namespace

Relation::Relation(std::size_t vertex_count)
    : n_(vertex_count),
      words_((vertex_count + kWordBits - 1) / kWordBits),
      bits_(n_ * words_, 0) {}

void Relation::Insert(VertexIndex from, VertexIndex to) {
  if (from >= n_ || to >= n_) {
    throw std::out_of_range("relation pair outside the vertex set");
  }
  Row(from)[to / kWordBits] |= Bit(to);
}

bool Relation::Contains(VertexIndex from, VertexIndex to) const {
  if (from >= n_ || to >= n_) return false;
  return (Row(from)[to / kWordBits] & Bit(to)) != 0;
}

std::size_t Relation::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total;
}

std::size_t Relation::RowSize(VertexIndex from) const {
  if (from >= n_) return 0;
  std::size_t total = 0;
  const std::uint64_t* row = Row(from);
  for (std::size_t w = 0; w < words_; ++w) total += std::popcount(row[w]);
  return total;
}

std::vector<std::pair<VertexIndex, VertexIndex>> Relation::Pairs() const {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (VertexIndex i = 0; i < n_; ++i) {
    for (VertexIndex j = 0; j < n_; ++j) {
      if (Contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Relation::IsSubsetOf(const Relation& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  }
  return true;
}

Relation TransitiveClosure(const Relation& r) {
  Relation closure = r;
  const std::size_t n = closure.n_;
  for (VertexIndex k = 0; k < n; ++k) {
    const std::uint64_t* row_k = closure.Row(k);
    for (VertexIndex i = 0; i < n; ++i) {
      if (!closure.Contains(i, k)) continue;
      std::uint64_t* row_i = closure.Row(i);
      for (std::size_t w = 0; w < closure.words_; ++w) row_i[w] |= row_k[w];
    }
  }
  return closure;
}

Relation SelectFrom(const Relation& r, VertexIndex v) {
  Relation out(r.vertex_count());
  for (VertexIndex j = 0; j < r.vertex_count(); ++j) {
    if (r.Contains(v, j)) out.Insert(v, j);
  }
  return out;
}

VertexIndex Adg::IndexOf(std::string_view vertex_id) const {
  const auto it = index_.find(std::string(vertex_id));
  if (it == index_.end()) {
    throw std::out_of_range("unknown vertex '" + std::string(vertex_id) + "'");
  }
  return it->second;
}

bool Adg::Contains(std::string_view vertex_id) const {
  return index_.count(std::string(vertex_id)) != 0;
}

Adg MakeAdg(std::string name, const std::vector<ComponentPorts>& components,
            const ArcSet& arcs) {
  Adg adg;
  adg.name_ = std::move(name);
  for (const auto& comp : components) {
    ComponentVertices cv{comp.name, {}};
    for (const auto& port : comp.ports) {
      const VertexIndex index = adg.vertices_.size();
      std::string id = comp.name + "." + port;
      if (!adg.index_.emplace(id, index).second) {
        throw std::invalid_argument("duplicate vertex '" + id + "'");
      }
      adg.vertices_.push_back(std::move(id));
      adg.component_index_.push_back(adg.components_.size());
      cv.ports.push_back(index);
    }
    adg.components_.push_back(std::move(cv));
  }

  struct Keyed {
    VertexIndex source;
    VertexIndex target;
    const Arc* arc;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(arcs.size());
  for (const Arc& arc : arcs) {
    const auto s = adg.index_.find(arc.source);
    const auto t = adg.index_.find(arc.target);
    if (s == adg.index_.end() || t == adg.index_.end()) {
      throw std::invalid_argument("arc " + arc.source + " -> " + arc.target +
                                  " names an unknown vertex");
    }
    if (s->second == t->second) {
      throw std::invalid_argument("self-loop arc on " + arc.source);
    }
    keyed.push_back({s->second, t->second, &arc});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.source, a.target, a.arc->kind) <
           std::tie(b.source, b.target, b.arc->kind);
  });
  for (const Keyed& k : keyed) {
    adg.arcs_.push_back(*k.arc);
    adg.arc_endpoints_.emplace_back(k.source, k.target);
  }
  return adg;
}

Adg BuildAdg(const Architecture& arch, bool default_internal) {
  std::vector<ComponentPorts> components;
  components.reserve(arch.components.size());
  for (const auto& comp : arch.components) {
    ComponentPorts cp{comp.name, {}};
    for (const auto& port : comp.ports) cp.ports.push_back(port.name);
    components.push_back(std::move(cp));
  }
  return MakeAdg(arch.name, components, InferAll(arch, default_internal));
}

Relation Untyped(const Adg& adg) {
  Relation r(adg.vertex_count());
  for (std::size_t a = 0; a < adg.arcs().size(); ++a) {
    const auto [s, t] = adg.Endpoints(a);
    r.Insert(s, t);
  }
  return r;
}

std::vector<VertexIndex> ReachableFrom(const Adg& adg,
                                       std::string_view vertex_id) {
  const VertexIndex start = adg.IndexOf(vertex_id);
  std::vector<std::vector<VertexIndex>> successors(adg.vertex_count());
  for (std::size_t a = 0; a < adg.arcs().size(); ++a) {
    const auto [s, t] = adg.Endpoints(a);
    successors[s].push_back(t);
  }
  std::vector<bool> seen(adg.vertex_count(), false);
  std::vector<VertexIndex> stack(successors[start].begin(),
                                 successors[start].end());
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    for (VertexIndex w : successors[v]) {
      if (!seen[w]) stack.push_back(w);
    }
  }
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

std::string ToDot(const Adg& adg) {
  std::ostringstream out;
  out << "digraph \"" << adg.name() << "\" {\n";
  for (const auto& comp : adg.components()) {
    out << "  subgraph \"cluster_" << comp.name << "\" {\n";
    out << "    label=\"" << comp.name << "\";\n";
    for (VertexIndex v : comp.ports) {
      out << "    \"" << adg.vertex(v) << "\";\n";
    }
    out << "  }\n";
  }
  for (const Arc& arc : adg.arcs()) {
    out << "  \"" << arc.source << "\" -> \"" << arc.target << "\" [label=\""
        << ToString(arc.kind) << "\", style=" << EdgeStyle(arc.kind) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace adgm
