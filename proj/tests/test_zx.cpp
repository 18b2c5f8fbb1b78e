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

#include <random>

#include "doctest.h"
#include "gms/sim.hpp"
#include "gms/zx.hpp"
#include "test_util.hpp"

using namespace gms;

namespace {

void check_diagram_matches(const Circuit& c, const ZxDiagram& d,
                           double tol = 1e-9) {
  CHECK(equivalent_up_to_phase(circuit_unitary(c), diagram_unitary(d), tol));
}

}  // namespace

TEST_CASE("single wire contracts to the identity") {
  Circuit c(1);
  check_diagram_matches(c, circuit_to_diagram(c));
}

TEST_CASE("one Z-spider on a wire is diag(1, e^{ia})") {
  Circuit c(1);
  c.add(Gate::rz(0, Phase::rational(3, 8)));
  Unitary u = diagram_unitary(circuit_to_diagram(c));
  Unitary expect(2, 2);
  std::complex<double> i{0, 1};
  expect << 1, 0, 0, std::exp(i * (3 * M_PI / 8));
  CHECK(equivalent_up_to_phase(expect, u, 1e-12));
}

TEST_CASE("gate-by-gate translation matches the simulator") {
  struct Case {
    const char* name;
    Circuit c;
  };
  std::vector<Case> cases;
  {
    Circuit c(1);
    c.add(Gate::h(0));
    cases.push_back({"h", c});
  }
  {
    Circuit c(1);
    c.add(Gate::rx(0, Phase::rational(5, 8)));
    cases.push_back({"rx", c});
  }
  {
    Circuit c(1);
    c.add(Gate::r(0, Phase::rational(3, 8), Phase::rational(1, 4)));
    cases.push_back({"r", c});
  }
  {
    Circuit c(2);
    c.add(Gate::cnot(0, 1));
    cases.push_back({"cnot", c});
  }
  {
    Circuit c(2);
    c.add(Gate::cnot(1, 0));
    cases.push_back({"cnot reversed", c});
  }
  {
    Circuit c(2);
    c.add(Gate::cz(0, 1));
    cases.push_back({"cz", c});
  }
  {
    Circuit c(2);
    c.add(Gate::xx(0, 1, Phase::rational(3, 8)));
    cases.push_back({"xx", c});
  }
  {
    Circuit c(2);
    c.add(Gate::swap(0, 1));
    cases.push_back({"swap", c});
  }
  {
    Circuit c(3);
    c.add(Gate::global_ms(GmsLayer(Phase::half_pi(), {{0, 1}, {1, 2}})));
    cases.push_back({"gms", c});
  }
  for (auto& cs : cases) {
    CAPTURE(cs.name);
    check_diagram_matches(cs.c, circuit_to_diagram(cs.c));
  }
}

TEST_CASE("random circuits translate faithfully") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 3;
    Circuit c = testutil::random_full_circuit(n, 12, rng);
    check_diagram_matches(c, circuit_to_diagram(c));
  }
}

TEST_CASE("to_graph_like yields a valid graph-like diagram") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 3;
    Circuit c = testutil::random_full_circuit(n, 12, rng);
    ZxDiagram g = to_graph_like(circuit_to_diagram(c));
    auto errs = validate_graph_like(g);
    CAPTURE(trial);
    for (auto& e : errs) {
      CAPTURE(e);
      CHECK(false);
    }
    CHECK(errs.empty());
    check_diagram_matches(c, g);
  }
}

TEST_CASE("to_graph_like is idempotent") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = testutil::random_full_circuit(3, 10, rng);
    ZxDiagram g1 = to_graph_like(circuit_to_diagram(c));
    ZxDiagram g2 = to_graph_like(g1);
    CHECK(validate_graph_like(g2).empty());
    CHECK(g1.vertex_count() == g2.vertex_count());
    check_diagram_matches(c, g2);
  }
}

TEST_CASE("graph-like form of a CNOT diagram is still a CNOT") {
  Circuit c(2);
  c.add(Gate::cnot(0, 1));
  ZxDiagram g = to_graph_like(circuit_to_diagram(c));
  CHECK(validate_graph_like(g).empty());
  Unitary u = diagram_unitary(g);
  CHECK(equivalent_up_to_phase(circuit_unitary(c), u, 1e-12));
}

TEST_CASE("awkward boundary cases are repaired") {
  SUBCASE("bare wire") {
    Circuit c(1);
    ZxDiagram g = to_graph_like(circuit_to_diagram(c));
    CHECK(validate_graph_like(g).empty());
    check_diagram_matches(c, g);
  }
  SUBCASE("single H wire") {
    Circuit c(1);
    c.add(Gate::h(0));
    ZxDiagram g = to_graph_like(circuit_to_diagram(c));
    CHECK(validate_graph_like(g).empty());
    check_diagram_matches(c, g);
  }
  SUBCASE("spider that would touch two boundaries") {
    Circuit c(1);
    c.add(Gate::rz(0, Phase::rational(1, 4)));
    ZxDiagram g = to_graph_like(circuit_to_diagram(c));
    CHECK(validate_graph_like(g).empty());
    check_diagram_matches(c, g);
  }
  SUBCASE("adjacent hadamards cancel") {
    Circuit c(1);
    c.add(Gate::h(0));
    c.add(Gate::h(0));
    ZxDiagram g = to_graph_like(circuit_to_diagram(c));
    CHECK(validate_graph_like(g).empty());
    check_diagram_matches(c, g);
  }
}

TEST_CASE("phase gadget tags survive normalization") {
  Circuit c(2);
  c.add(Gate::xx(0, 1, Phase::rational(1, 4)));
  ZxDiagram g = to_graph_like(circuit_to_diagram(c));
  int gadgets = 0;
  for (VertexId v : g.vertex_ids())
    if (g.is_spider(v) && g.vertex(v).plane == Plane::YZ) {
      ++gadgets;
      CHECK(g.degree(v) == 1);
      CHECK(g.vertex(v).phase == Phase::rational(1, 4));
    }
  CHECK(gadgets == 1);
}

TEST_CASE("diagram editing invariants") {
  ZxDiagram d;
  VertexId a = d.add_vertex(VertexKind::Z);
  VertexId b = d.add_vertex(VertexKind::Z, Phase::half_pi());
  d.add_edge(a, b, EdgeType::Hadamard);
  CHECK_THROWS_AS(d.add_edge(a, b, EdgeType::Plain), std::invalid_argument);
  CHECK_THROWS_AS(d.add_edge(a, a, EdgeType::Plain), std::invalid_argument);
  d.toggle_hadamard_edge(a, b);
  CHECK_FALSE(d.has_edge(a, b));
  d.toggle_hadamard_edge(a, b);
  CHECK(d.edge_type(a, b) == EdgeType::Hadamard);
  d.remove_vertex(b);
  CHECK_FALSE(d.has_vertex(b));
  CHECK(d.degree(a) == 0);
  // Ids are never reused.
  VertexId c = d.add_vertex(VertexKind::Z);
  CHECK(c > b);
}
