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

#include "gms/gflow.hpp"

#include "doctest.h"

#include <random>

#include "gms/zx.hpp"
#include "test_util.hpp"

using namespace gms;

namespace {

LabelledOpenGraph path_graph() {
  // 1 -- 2 -- 3, input 1, output 3.
  LabelledOpenGraph g;
  g.vertices = {1, 2, 3};
  g.adj[1] = {2};
  g.adj[2] = {1, 3};
  g.adj[3] = {2};
  g.inputs = {1};
  g.input_set = {1};
  g.outputs = {3};
  g.output_set = {3};
  g.label[1] = Plane::XY;
  g.label[2] = Plane::XY;
  return g;
}

}  // namespace

TEST_CASE("odd neighbourhood on a path") {
  LabelledOpenGraph g = path_graph();
  CHECK(odd_neighbourhood(g, {1, 3}).empty());
  CHECK(odd_neighbourhood(g, {2}) == std::set<VertexId>{1, 3});
  CHECK(odd_neighbourhood(g, {1, 2}) == std::set<VertexId>{1, 2, 3});
  CHECK(odd_neighbourhood(g, {}).empty());
}

TEST_CASE("gflow of a path graph") {
  LabelledOpenGraph g = path_graph();
  auto cert = find_maximally_delayed_gflow(g);
  REQUIRE(cert.has_value());
  CHECK(verify_gflow(g, *cert));
  CHECK(cert->g.at(2) == std::set<VertexId>{3});
  CHECK(cert->g.at(1) == std::set<VertexId>{2});
  CHECK(cert->layer.at(3) == 0);
  CHECK(cert->layer.at(2) == 1);
  CHECK(cert->layer.at(1) == 2);
}

TEST_CASE("corrupted certificates are rejected") {
  LabelledOpenGraph g = path_graph();
  auto cert = find_maximally_delayed_gflow(g);
  REQUIRE(cert.has_value());

  GflowCert bad = *cert;
  bad.layer[1] = 0;  // breaks the order: 1 must come before 2
  CHECK_FALSE(verify_gflow(g, bad));

  bad = *cert;
  bad.g[2] = {1};  // correction sets must avoid inputs
  CHECK_FALSE(verify_gflow(g, bad));

  bad = *cert;
  bad.g[1] = {3};  // Odd({3}) = {2} misses vertex 1 (XY plane)
  CHECK_FALSE(verify_gflow(g, bad));

  bad = *cert;
  bad.g.erase(1);  // every non-output needs a correction set
  CHECK_FALSE(verify_gflow(g, bad));
}

TEST_CASE("isolated XY vertex has no gflow, isolated YZ vertex does") {
  LabelledOpenGraph g;
  g.vertices = {1, 2, 3};
  g.adj[1] = {2};
  g.adj[2] = {1};
  g.adj[3] = {};
  g.inputs = {1};
  g.input_set = {1};
  g.outputs = {2};
  g.output_set = {2};
  g.label[1] = Plane::XY;
  g.label[3] = Plane::XY;
  CHECK_FALSE(find_maximally_delayed_gflow(g).has_value());

  g.label[3] = Plane::YZ;
  auto cert = find_maximally_delayed_gflow(g);
  REQUIRE(cert.has_value());
  CHECK(verify_gflow(g, *cert));
  CHECK(cert->g.at(3) == std::set<VertexId>{3});
}

TEST_CASE("circuit diagrams always admit a verified gflow") {
  std::mt19937_64 rng(511);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 3;
    Circuit c = trial % 2 == 0
                    ? testutil::random_clifford_t_circuit(n, 14, rng)
                    : testutil::random_full_circuit(n, 10, rng);
    ZxDiagram d = to_graph_like(circuit_to_diagram(c));
    LabelledOpenGraph g = open_graph_of(d);
    auto cert = find_maximally_delayed_gflow(g);
    REQUIRE(cert.has_value());
    CHECK(verify_gflow(g, *cert));
    for (VertexId o : g.outputs) CHECK(cert->layer.at(o) == 0);
  }
}

TEST_CASE("gflow_exists convenience wrapper") {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::cnot(0, 1));
  CHECK(gflow_exists(to_graph_like(circuit_to_diagram(c))));
}
