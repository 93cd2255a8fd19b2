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

#ifndef ADGM_ADG_H_
#define ADGM_ADG_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "adgm/dependence.h"
#include "adgm/model.h"

namespace adgm {

using VertexIndex = std::size_t;

// A binary relation over the vertex set {0, ..., n-1}, stored as a dense
// row-major bit matrix. Row i holds the pairs whose first element is i.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t vertex_count);

  std::size_t vertex_count() const { return n_; }

  void Insert(VertexIndex from, VertexIndex to);
  bool Contains(VertexIndex from, VertexIndex to) const;

  // Number of pairs, |R|.
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  // Number of pairs whose first element is `from`.
  std::size_t RowSize(VertexIndex from) const;

  // All pairs, ordered by first then second element.
  std::vector<std::pair<VertexIndex, VertexIndex>> Pairs() const;

  // Subset test over the same vertex set.
  bool IsSubsetOf(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  friend Relation TransitiveClosure(const Relation& r);

  std::uint64_t* Row(VertexIndex i) { return bits_.data() + i * words_; }
  const std::uint64_t* Row(VertexIndex i) const {
    return bits_.data() + i * words_;
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// R+, the smallest transitive relation containing r (Warshall).
Relation TransitiveClosure(const Relation& r);

// Pairs of r whose first element is v.
Relation SelectFrom(const Relation& r, VertexIndex v);

struct ComponentVertices {
  std::string name;
  std::vector<VertexIndex> ports;  // contiguous, declaration order
};

struct ComponentPorts {
  std::string name;
  std::vector<std::string> ports;
};

// Architectural dependence graph: one vertex per declared port, ordered by
// component then port declaration order, and the classified arc set.
class Adg {
 public:
  Adg() = default;

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<ComponentVertices>& components() const {
    return components_;
  }
  // Arcs in canonical order: source index, target index, kind.
  const std::vector<Arc>& arcs() const { return arcs_; }

  const std::string& vertex(VertexIndex i) const { return vertices_[i]; }
  const std::string& component_of(VertexIndex i) const {
    return components_[component_index_[i]].name;
  }

  // Throws std::out_of_range for an unknown vertex id.
  VertexIndex IndexOf(std::string_view vertex_id) const;
  bool Contains(std::string_view vertex_id) const;

  // Arc endpoints as vertex indices, parallel to arcs().
  std::pair<VertexIndex, VertexIndex> Endpoints(std::size_t arc) const {
    return arc_endpoints_[arc];
  }

 private:
  friend Adg MakeAdg(std::string name, const std::vector<ComponentPorts>&,
                     const ArcSet& arcs);

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<ComponentVertices> components_;
  std::vector<std::size_t> component_index_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<Arc> arcs_;
  std::vector<std::pair<VertexIndex, VertexIndex>> arc_endpoints_;
};

// Assembles an ADG from explicit parts. Vertex ids are "component.port".
// Throws std::invalid_argument if an arc names an unknown vertex or is a
// self-loop, or if a vertex id repeats.
Adg MakeAdg(std::string name, const std::vector<ComponentPorts>& components,
            const ArcSet& arcs);

// Requires Validate(arch).ok().
Adg BuildAdg(const Architecture& arch, bool default_internal = true);

// Untyped projection of the arc set: kinds collapse to a plain relation.
Relation Untyped(const Adg& adg);

// Vertices reachable from `vertex_id` along one or more arcs, in canonical
// order. Computed by depth-first search, independently of
// TransitiveClosure, so the two can cross-check each other. Throws
// std::out_of_range for an unknown vertex id.
std::vector<VertexIndex> ReachableFrom(const Adg& adg,
                                       std::string_view vertex_id);

// Graphviz rendering: a cluster per component, a node per port, an edge per
// arc labelled with its kind. Flow edges are solid, shared dashed and
// constrained dotted. Output is byte-deterministic.
std::string ToDot(const Adg& adg);

}  // namespace adgm

#endif  // ADGM_ADG_H_
