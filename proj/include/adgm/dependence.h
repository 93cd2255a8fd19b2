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

// Architectural dependence inference.
//
// An arc (u, v) always means "port u depends on port v". Vertices are the
// qualified port names "Component.port".
//
//   flow         attach/before A.p -> B.q gives (B.q, A.p); each intra-
//                component flow gives (out, in).
//   shared       two distinct port accesses to the same resource give both
//                (A.p, B.q) and (B.q, A.p), whatever the access modes.
//   constrained  exclusive A.p, B.q gives both (A.p, B.q) and (B.q, A.p).
//
// Intra-component flows: a component with explicit `internal` declarations
// contributes exactly those. Otherwise, when default_internal is set, every
// out-capable port depends on every other in-capable port of the component.

#ifndef ADGM_DEPENDENCE_H_
#define ADGM_DEPENDENCE_H_

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "adgm/model.h"

namespace adgm {

// Declaration order is the reporting order for per-kind counts.
enum class ArcKind { kShared, kFlow, kConstrained };

inline constexpr std::array<ArcKind, 3> kAllArcKinds = {
    ArcKind::kShared, ArcKind::kFlow, ArcKind::kConstrained};

std::string_view ToString(ArcKind kind);
std::optional<ArcKind> ArcKindFromString(std::string_view name);

struct Arc {
  std::string source;  // the dependent port
  std::string target;  // the port it depends on
  ArcKind kind = ArcKind::kFlow;

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

using ArcSet = std::set<Arc>;

// All functions below require Validate(arch).ok().
ArcSet InferFlow(const Architecture& arch, bool default_internal = true);
ArcSet InferShared(const Architecture& arch);
ArcSet InferConstrained(const Architecture& arch);
ArcSet InferAll(const Architecture& arch, bool default_internal = true);

}  // namespace adgm

#endif  // ADGM_DEPENDENCE_H_
