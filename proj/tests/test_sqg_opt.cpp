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

#include "gms/sqg_opt.hpp"

#include "doctest.h"

#include <random>
#include <vector>

#include "gms/extract.hpp"
#include "gms/sim.hpp"
#include "gms/simplify.hpp"
#include "gms/zx.hpp"
#include "test_util.hpp"

using namespace gms;

namespace {

std::vector<GmsLayer> gms_sequence(const Circuit& c) {
  std::vector<GmsLayer> out;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::GMS) out.push_back(g.gms);
  return out;
}

}  // namespace

TEST_CASE("adjacent Hadamards cancel") {
  Circuit c(1);
  c.add(Gate::h(0));
  c.add(Gate::h(0));
  CHECK(optimize_sqg(c).gates.empty());
}

TEST_CASE("Hadamard conjugation swaps rotation axes") {
  Circuit c(1);
  c.add(Gate::h(0));
  c.add(Gate::rx(0, Phase::rational(1, 4)));
  c.add(Gate::h(0));
  Circuit r = optimize_sqg(c);
  REQUIRE(r.gates.size() == 1);
  CHECK(r.gates[0].kind == GateKind::RZ);
  CHECK(r.gates[0].p0 == Phase::rational(1, 4));

  Circuit c2(1);
  c2.add(Gate::h(0));
  c2.add(Gate::rz(0, Phase::rational(-1, 8)));
  c2.add(Gate::h(0));
  Circuit r2 = optimize_sqg(c2);
  REQUIRE(r2.gates.size() == 1);
  CHECK(r2.gates[0].kind == GateKind::RX);
  CHECK(equivalent_up_to_phase(circuit_unitary(c2), circuit_unitary(r2)));
}

TEST_CASE("RX rides through GMS gates and merges") {
  Circuit c(2);
  c.add(Gate::rx(0, -Phase::half_pi()));
  c.add(Gate::global_ms(GmsLayer(Phase::half_pi(), {{0, 1}})));
  c.add(Gate::rx(0, -Phase::half_pi()));
  Circuit r = optimize_sqg(c);
  CHECK(r.count_single_qubit() == 1);
  CHECK(gms_sequence(r) == gms_sequence(c));
  CHECK(equivalent_up_to_phase(circuit_unitary(c), circuit_unitary(r)));

  // Opposite angles vanish entirely.
  Circuit c2 = c;
  c2.gates[2].p0 = Phase::half_pi();
  Circuit r2 = optimize_sqg(c2);
  CHECK(r2.count_single_qubit() == 0);
  CHECK(gms_sequence(r2) == gms_sequence(c2));
}

TEST_CASE("RZ does not cross a GMS that couples its qubit") {
  Circuit c(2);
  c.add(Gate::rz(0, Phase::rational(1, 4)));
  c.add(Gate::global_ms(GmsLayer(Phase::half_pi(), {{0, 1}})));
  c.add(Gate::rz(0, Phase::rational(1, 4)));
  Circuit r = optimize_sqg(c);
  CHECK(r.count_single_qubit() == 2);
  CHECK(equivalent_up_to_phase(circuit_unitary(c), circuit_unitary(r)));
}

TEST_CASE("same-axis rotations merge and zero angles drop") {
  Circuit c(1);
  c.add(Gate::rz(0, Phase::rational(1, 4)));
  c.add(Gate::rz(0, Phase::rational(1, 4)));
  c.add(Gate::rz(0, Phase::zero()));
  Circuit r = optimize_sqg(c);
  REQUIRE(r.gates.size() == 1);
  CHECK(r.gates[0].p0 == Phase::half_pi());

  Circuit c2(1);
  c2.add(Gate::rx(0, Phase::rational(1, 8)));
  c2.add(Gate::rx(0, Phase::rational(-1, 8)));
  CHECK(optimize_sqg(c2).gates.empty());
}

TEST_CASE("cleanup preserves extracted circuits and never adds gates") {
  std::mt19937_64 rng(642);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 4;
    Circuit c = testutil::random_clifford_t_circuit(n, 16, rng);
    ExtractOptions opts;
    opts.strategy = trial % 2 == 0 ? Strategy::Lp : Strategy::Patel;
    Circuit ext =
        extract_circuit(full_simplify(to_graph_like(circuit_to_diagram(c))),
                        opts);
    Circuit r = optimize_sqg(ext);
    CHECK(r.count_single_qubit() <= ext.count_single_qubit());
    CHECK(gms_sequence(r) == gms_sequence(ext));
    CHECK(equivalent_up_to_phase(circuit_unitary(c), circuit_unitary(r)));
    // Idempotent at the fixpoint.
    Circuit rr = optimize_sqg(r);
    CHECK(rr.gates.size() == r.gates.size());
  }
}

TEST_CASE("native lowering replaces H with RZ RX RZ") {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::cnot(0, 1));
  Circuit r = lower_h_to_native(c);
  CHECK(r.gates.size() == 4);
  for (const Gate& g : r.gates) CHECK(g.kind != GateKind::H);
  CHECK(equivalent_up_to_phase(circuit_unitary(c), circuit_unitary(r)));
}

TEST_CASE("unsupported gate kinds are rejected") {
  Circuit c(2);
  c.add(Gate::cnot(0, 1));
  CHECK_THROWS_AS(optimize_sqg(c), std::invalid_argument);
}
