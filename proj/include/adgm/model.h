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

#ifndef ADGM_MODEL_H_
#define ADGM_MODEL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adgm {

// 1-based line/column of a declaration in its source text. A default
// constructed position (0, 0) means "not parsed from text".
struct SourcePos {
  int line = 0;
  int column = 0;
};

enum class Direction { kIn, kOut, kInOut };
enum class AccessMode { kReads, kWrites };

std::string_view ToString(Direction dir);
std::string_view ToString(AccessMode mode);

// Whether a port of this direction may act as a producer (attach source).
inline bool CanSend(Direction dir) { return dir != Direction::kIn; }
// Whether a port of this direction may act as a consumer (attach target).
inline bool CanReceive(Direction dir) { return dir != Direction::kOut; }

struct Port {
  std::string name;
  Direction direction = Direction::kIn;
  SourcePos pos;
};

struct ResourceAccess {
  std::string resource;
  AccessMode mode = AccessMode::kReads;
  std::string via;  // port name of the owning component
  SourcePos pos;
};

struct Component {
  std::string name;
  std::vector<Port> ports;
  std::uint64_t complexity = 0;  // declared code-level complexity
  std::vector<ResourceAccess> accesses;
  SourcePos pos;

  // Index of the named port, or -1.
  int FindPort(std::string_view port_name) const;
};

struct PortRef {
  std::string component;
  std::string port;
  SourcePos pos;

  // "Component.port", the vertex id used throughout the graph layer.
  std::string Qualified() const { return component + "." + port; }
};

// Used for both `attach` and `before` declarations.
struct Attachment {
  PortRef from;
  PortRef to;
  SourcePos pos;
};

struct ExclusivePair {
  PortRef a;
  PortRef b;
  SourcePos pos;
};

// `internal C.o <- C.i`: within component C, out-port o depends on in-port i.
struct InternalFlow {
  std::string component;
  std::string out_port;
  std::string in_port;
  SourcePos pos;
  SourcePos out_pos;
  SourcePos in_pos;
};

struct ResourceDecl {
  std::string name;
  SourcePos pos;
};

struct Architecture {
  std::string name;
  std::vector<Component> components;
  std::vector<ResourceDecl> resources;
  std::vector<Attachment> attachments;
  std::vector<Attachment> befores;
  std::vector<ExclusivePair> exclusives;
  std::vector<InternalFlow> internal_flows;
  SourcePos pos;

  // Index of the named component, or -1.
  int FindComponent(std::string_view component_name) const;
  bool HasResource(std::string_view resource_name) const;
};

// Structural equality. Source positions are ignored so that a model built in
// code compares equal to the same model parsed from text.
bool operator==(const Port& a, const Port& b);
bool operator==(const ResourceAccess& a, const ResourceAccess& b);
bool operator==(const Component& a, const Component& b);
bool operator==(const PortRef& a, const PortRef& b);
bool operator==(const Attachment& a, const Attachment& b);
bool operator==(const ExclusivePair& a, const ExclusivePair& b);
bool operator==(const InternalFlow& a, const InternalFlow& b);
bool operator==(const ResourceDecl& a, const ResourceDecl& b);
bool operator==(const Architecture& a, const Architecture& b);

enum class ViolationKind {
  kDuplicateComponent,
  kDuplicatePort,
  kDuplicateResource,
  kUnknownComponent,
  kUnknownPort,
  kUnknownResource,
  kDirection,
  kSelfReference,
};

struct Violation {
  ViolationKind kind;
  std::string identifier;  // offending name, qualified where it helps
  std::string message;
  SourcePos pos;
};

struct ValidationOutcome {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every structural invariant of the model. Violations are reported in
// a fixed order: components (and their ports and accesses) in declaration
// order, then resources, attachments, befores, exclusives, internal flows.
ValidationOutcome Validate(const Architecture& arch);

// Canonical MiniADL text. Parsing the result yields a model equal to `arch`.
std::string PrettyPrint(const Architecture& arch);

}  // namespace adgm

#endif  // ADGM_MODEL_H_
