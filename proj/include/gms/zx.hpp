// Copyright 2026 The gmsc authors
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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gms/circuit.hpp"
#include "gms/phase.hpp"

namespace gms {

using VertexId = int;

enum class VertexKind { Boundary, Z, X };

/// Measurement-plane label. XY is an ordinary spider carrying its phase;
/// YZ marks the degree-1 phase vertex of a phase gadget pair. XZ never
/// occurs in the pipeline and is accepted only by the gflow verifier.
enum class Plane { XY, YZ, XZ };

enum class EdgeType { Plain, Hadamard };

struct VertexData {
  VertexKind kind = VertexKind::Z;
  Phase phase;
  Plane plane = Plane::XY;
};

/// A ZX-diagram over Z/X spiders and boundary vertices, with plain and
/// Hadamard edges. Simple graph: at most one edge per vertex pair, no
/// self-loops (parallel edges and loops are resolved eagerly by the
/// graph-like normalization, which works on an internal multigraph).
/// Vertex ids are never reused within a diagram's lifetime.
class ZxDiagram {
 public:
  VertexId add_vertex(VertexKind kind, Phase phase = Phase::zero(),
                      Plane plane = Plane::XY);
  void remove_vertex(VertexId v);
  bool has_vertex(VertexId v) const;
  VertexData& vertex(VertexId v);
  const VertexData& vertex(VertexId v) const;

  void add_edge(VertexId u, VertexId v, EdgeType t);
  void remove_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;
  EdgeType edge_type(VertexId u, VertexId v) const;
  void set_edge_type(VertexId u, VertexId v, EdgeType t);
  /// Mod-2 edge update between spiders: adds a Hadamard edge, or removes the
  /// existing one (parallel Hadamard edges cancel pairwise in graph-like form).
  void toggle_hadamard_edge(VertexId u, VertexId v);

  const std::map<VertexId, EdgeType>& neighbors(VertexId v) const;
  int degree(VertexId v) const;

  std::vector<VertexId>& inputs() { return inputs_; }
  std::vector<VertexId>& outputs() { return outputs_; }
  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }

  bool is_boundary(VertexId v) const;
  bool is_spider(VertexId v) const { return !is_boundary(v); }
  /// Spider not adjacent to any boundary vertex.
  bool is_interior(VertexId v) const;
  bool boundary_adjacent(VertexId v) const;

  /// Live vertex ids, ascending.
  std::vector<VertexId> vertex_ids() const;
  int vertex_count() const;
  int next_vertex_id() const { return static_cast<int>(verts_.size()); }

  /// Adjacency-list text (one vertex per line) for golden tests.
  std::string dump() const;

 private:
  std::vector<std::optional<VertexData>> verts_;
  std::vector<std::map<VertexId, EdgeType>> adj_;
  std::vector<VertexId> inputs_, outputs_;
};

/// Translate a circuit gate-by-gate into a ZX-diagram whose linear map equals
/// the circuit unitary up to global phase. Accepts
/// {H, RZ, RX, R, Z, X, S, Sdg, T, Tdg, CNOT, CZ, XX, SWAP, GMS}.
ZxDiagram circuit_to_diagram(const Circuit& c);

/// Normalize to graph-like form: only Z-spiders, only Hadamard edges between
/// spiders, no parallel edges or self-loops, clean plain boundary wires,
/// at most one boundary per spider. Idempotent; preserves semantics up to
/// global phase.
ZxDiagram to_graph_like(const ZxDiagram& d);

/// Empty iff the diagram satisfies every graph-like property.
std::vector<std::string> validate_graph_like(const ZxDiagram& d);

}  // namespace gms
