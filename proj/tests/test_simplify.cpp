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

#include "gms/simplify.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>

#include "gms/gflow.hpp"
#include "gms/sim.hpp"
#include "gms/zx.hpp"
#include "test_util.hpp"

using namespace gms;

namespace {

ZxDiagram graph_like_of(const Circuit& c) {
  return to_graph_like(circuit_to_diagram(c));
}

bool lcomp_candidate(const ZxDiagram& d, VertexId v) {
  if (!is_rewrite_interior(d, v) || d.vertex(v).plane != Plane::XY ||
      !d.vertex(v).phase.is_proper_clifford() || is_gadget_axle(d, v))
    return false;
  for (auto& [w, t] : d.neighbors(v))
    if (is_gadget_axle(d, w)) return false;
  return true;
}

bool pivot_candidate(const ZxDiagram& d, VertexId v) {
  return is_rewrite_interior(d, v) && d.vertex(v).plane == Plane::XY &&
         d.vertex(v).phase.is_pauli() && !is_gadget_axle(d, v);
}

int non_clifford_count(const ZxDiagram& d) {
  int k = 0;
  for (VertexId v : d.vertex_ids())
    if (d.is_spider(v) && !d.vertex(v).phase.is_clifford()) ++k;
  return k;
}

}  // namespace

TEST_CASE("single local complementation preserves the diagram map") {
  std::mt19937_64 rng(901);
  int exercised = 0;
  for (int trial = 0; trial < 40 && exercised < 8; ++trial) {
    Circuit c = testutil::random_clifford_t_circuit(3, 16, rng);
    ZxDiagram d = graph_like_of(c);
    VertexId v = -1;
    for (VertexId x : d.vertex_ids())
      if (lcomp_candidate(d, x)) {
        v = x;
        break;
      }
    if (v < 0) continue;
    Unitary before = diagram_unitary(d);
    local_complement_at(d, v);
    CHECK(validate_graph_like(d).empty());
    CHECK(equivalent_up_to_phase(before, diagram_unitary(d)));
    ++exercised;
  }
  CHECK(exercised >= 4);
}

TEST_CASE("single pivot preserves the diagram map") {
  std::mt19937_64 rng(902);
  int exercised = 0;
  for (int trial = 0; trial < 60 && exercised < 8; ++trial) {
    Circuit c = testutil::random_clifford_t_circuit(3, 18, rng);
    ZxDiagram d = graph_like_of(c);
    VertexId u = -1, v = -1;
    for (VertexId x : d.vertex_ids()) {
      if (!pivot_candidate(d, x)) continue;
      for (auto& [w, t] : d.neighbors(x))
        if (w > x && pivot_candidate(d, w)) {
          u = x;
          v = w;
          break;
        }
      if (u >= 0) break;
    }
    if (u < 0) continue;
    Unitary before = diagram_unitary(d);
    pivot_at(d, u, v);
    CHECK(validate_graph_like(d).empty());
    CHECK(equivalent_up_to_phase(before, diagram_unitary(d)));
    ++exercised;
  }
  CHECK(exercised >= 4);
}

TEST_CASE("rewrite preconditions are enforced") {
  Circuit c(2);
  c.add(Gate::cz(0, 1));
  ZxDiagram d = graph_like_of(c);
  // Every spider is boundary-adjacent here.
  for (VertexId v : d.vertex_ids())
    if (d.is_spider(v)) {
      CHECK_THROWS_AS(local_complement_at(d, v), std::invalid_argument);
      break;
    }
  CHECK_THROWS_AS(pivot_at(d, 0, 1), std::invalid_argument);
}

TEST_CASE("gadget pivot turns a non-Clifford phase into a pendant") {
  // in -- s1 -- u(0) -- v(pi/4) -- s2 -- out, u and v interior.
  ZxDiagram d;
  VertexId bi = d.add_vertex(VertexKind::Boundary);
  VertexId s1 = d.add_vertex(VertexKind::Z);
  VertexId u = d.add_vertex(VertexKind::Z);
  VertexId v = d.add_vertex(VertexKind::Z, Phase::rational(1, 4));
  VertexId s2 = d.add_vertex(VertexKind::Z);
  VertexId bo = d.add_vertex(VertexKind::Boundary);
  d.add_edge(bi, s1, EdgeType::Plain);
  d.add_edge(s1, u, EdgeType::Hadamard);
  d.add_edge(u, v, EdgeType::Hadamard);
  d.add_edge(v, s2, EdgeType::Hadamard);
  d.add_edge(s2, bo, EdgeType::Plain);
  d.inputs().push_back(bi);
  d.outputs().push_back(bo);
  REQUIRE(validate_graph_like(d).empty());

  Unitary before = diagram_unitary(d);
  CHECK(pivot_gadget(d, u, v));
  CHECK(validate_graph_like(d).empty());
  CHECK(equivalent_up_to_phase(before, diagram_unitary(d)));
  CHECK_FALSE(d.has_vertex(u));
  CHECK_FALSE(d.has_vertex(v));
  int pendants = 0;
  for (VertexId x : d.vertex_ids())
    if (d.is_spider(x) && d.vertex(x).plane == Plane::YZ && d.degree(x) == 1) {
      ++pendants;
      CHECK(d.vertex(x).phase == Phase::rational(1, 4));
    }
  CHECK(pendants == 1);
}

TEST_CASE("gadget pivot refuses a degree-1 target and bad pivots throw") {
  ZxDiagram d;
  VertexId bi = d.add_vertex(VertexKind::Boundary);
  VertexId s1 = d.add_vertex(VertexKind::Z);
  VertexId u = d.add_vertex(VertexKind::Z);
  VertexId v = d.add_vertex(VertexKind::Z);
  d.add_edge(bi, s1, EdgeType::Plain);
  d.add_edge(s1, u, EdgeType::Hadamard);
  d.add_edge(u, v, EdgeType::Hadamard);
  d.inputs().push_back(bi);
  CHECK_FALSE(pivot_gadget(d, u, v));
  CHECK(d.has_vertex(u));
  CHECK(d.has_vertex(v));
  CHECK_THROWS_AS(pivot_gadget(d, s1, u), std::invalid_argument);
}

TEST_CASE("full_simplify preserves the circuit unitary") {
  std::mt19937_64 rng(903);
  for (int trial = 0; trial < 24; ++trial) {
    int n = 2 + trial % 3;
    Circuit c = trial % 2 == 0
                    ? testutil::random_clifford_t_circuit(n, 15, rng)
                    : testutil::random_full_circuit(n, 10, rng);
    ZxDiagram d = graph_like_of(c);
    SimplifyStats stats;
    ZxDiagram r = full_simplify(d, &stats);
    CHECK(validate_graph_like(r).empty());
    CHECK(gflow_exists(r));
    CHECK(stats.total() <= 10 * d.vertex_count());
    CHECK(equivalent_up_to_phase(circuit_unitary(c), diagram_unitary(r)));
  }
}

TEST_CASE("full_simplify reaches a fixpoint") {
  std::mt19937_64 rng(904);
  for (int trial = 0; trial < 8; ++trial) {
    Circuit c = testutil::random_clifford_t_circuit(3, 20, rng);
    ZxDiagram r = full_simplify(graph_like_of(c));
    SimplifyStats again;
    full_simplify(r, &again);
    CHECK(again.total() == 0);
    // Fixpoint shape: nothing left for the Clifford rules to chew on.
    for (VertexId v : r.vertex_ids()) {
      if (!r.has_vertex(v)) continue;
      CHECK_FALSE(lcomp_candidate(r, v));
      if (pivot_candidate(r, v))
        for (auto& [w, t] : r.neighbors(v)) CHECK_FALSE(pivot_candidate(r, w));
    }
  }
}

TEST_CASE("Clifford circuits lose all non-Clifford content and shrink") {
  std::mt19937_64 rng(905);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c(3);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> qd(0, 2);
    for (int i = 0; i < 18; ++i) {
      int q = qd(rng);
      switch (kind(rng)) {
        case 0:
          c.add(Gate::h(q));
          break;
        case 1:
          c.add(Gate::s(q));
          break;
        case 2:
          c.add(Gate::cz(q, (q + 1) % 3));
          break;
        default:
          c.add(Gate::cnot(q, (q + 1) % 3));
          break;
      }
    }
    ZxDiagram d = graph_like_of(c);
    ZxDiagram r = full_simplify(d);
    CHECK(non_clifford_count(r) == 0);
    CHECK(r.vertex_count() <= d.vertex_count());
    CHECK(equivalent_up_to_phase(circuit_unitary(c), diagram_unitary(r)));
  }
}

TEST_CASE("parallel phase gadgets on the same legs fuse") {
  Circuit c(2);
  c.add(Gate::xx(0, 1, Phase::rational(1, 4)));
  c.add(Gate::xx(0, 1, Phase::rational(1, 8)));
  SimplifyStats stats;
  ZxDiagram r = full_simplify(graph_like_of(c), &stats);
  CHECK(stats.gadget_fusions >= 1);
  CHECK(equivalent_up_to_phase(circuit_unitary(c), diagram_unitary(r)));

  // Opposite angles cancel to a zero gadget, which disappears entirely.
  Circuit c2(2);
  c2.add(Gate::xx(0, 1, Phase::rational(1, 4)));
  c2.add(Gate::xx(0, 1, Phase::rational(-1, 4)));
  ZxDiagram r2 = full_simplify(graph_like_of(c2), &stats);
  for (VertexId v : r2.vertex_ids())
    if (r2.is_spider(v)) CHECK(r2.vertex(v).plane == Plane::XY);
  CHECK(equivalent_up_to_phase(circuit_unitary(c2), diagram_unitary(r2)));
}

TEST_CASE("T-heavy circuits gadgetize their interior non-Clifford phases") {
  std::mt19937_64 rng(906);
  int gadget_pivots = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Circuit c = testutil::random_clifford_t_circuit(3, 22, rng);
    SimplifyStats stats;
    ZxDiagram r = full_simplify(graph_like_of(c), &stats);
    gadget_pivots += stats.gadget_pivots;
    // Any leftover non-Clifford XY spider must touch the boundary region or
    // sit next to a gadget; interior ones surrounded by Pauli spiders would
    // have been gadgetized.
    for (VertexId v : r.vertex_ids()) {
      if (!is_rewrite_interior(r, v) || r.vertex(v).plane != Plane::XY)
        continue;
      if (r.vertex(v).phase.is_clifford()) continue;
      for (auto& [w, t] : r.neighbors(v)) CHECK_FALSE(pivot_candidate(r, w));
    }
    CHECK(equivalent_up_to_phase(circuit_unitary(c), diagram_unitary(r)));
  }
  CHECK(gadget_pivots > 0);
}
