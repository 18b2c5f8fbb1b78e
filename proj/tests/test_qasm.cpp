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
#include "gms/qasm.hpp"
#include "gms/sim.hpp"
#include "gms/stats.hpp"
#include "test_util.hpp"

using namespace gms;

TEST_CASE("basic statements map directly") {
  Circuit c = parse_qasm("qreg q[2]; cx q[0],q[1];");
  CHECK(c.qubit_count == 2);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0] == Gate::cnot(0, 1));

  c = parse_qasm("OPENQASM 2.0; include \"qelib1.inc\";\n"
                 "qreg q[1]; rz(pi/4) q[0];");
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0] == Gate::rz(0, Phase::rational(1, 4)));
}

TEST_CASE("float literals snap to exact rationals") {
  Circuit c = parse_qasm("qreg q[1]; rz(0.7853981633974483) q[0];");
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].p0 == Phase::rational(1, 4));
  // An angle far from any small rational multiple of pi stays numeric.
  c = parse_qasm("qreg q[1]; rz(0.5) q[0];");
  CHECK_FALSE(c.gates[0].p0.is_exact());
}

TEST_CASE("angle expressions") {
  Circuit c = parse_qasm("qreg q[1]; rz(-3*pi/4) q[0]; rx(pi/2 + pi/4) q[0];");
  CHECK(c.gates[0].p0 == Phase::rational(-3, 4));
  CHECK(c.gates[1].p0 == Phase::rational(3, 4));
}

TEST_CASE("unsupported constructs are rejected by name") {
  CHECK_THROWS_WITH_AS(parse_qasm("qreg q[1]; creg c[1];"),
                       doctest::Contains("creg"), QasmError);
  CHECK_THROWS_WITH_AS(parse_qasm("qreg q[1]; measure q[0];"),
                       doctest::Contains("measure"), QasmError);
  CHECK_THROWS_WITH_AS(parse_qasm("qreg q[1]; reset q[0];"),
                       doctest::Contains("reset"), QasmError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2]; cx q[0],q[5];"), QasmError);
  CHECK_THROWS_AS(parse_qasm("qreg q[1]; frobnicate q[0];"), QasmError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_qasm("qreg q[2];\ncx q[0] q[1];");
    CHECK(false);
  } catch (const QasmError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }
}

TEST_CASE("broadcast applies a one-qubit gate across the register") {
  Circuit c = parse_qasm("qreg q[3]; h q;");
  REQUIRE(c.gates.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(c.gates[i] == Gate::h(i));
}

TEST_CASE("lowered gates have the right unitaries") {
  SUBCASE("y") {
    Circuit c = parse_qasm("qreg q[1]; y q[0];");
    Unitary y(2, 2);
    std::complex<double> i{0, 1};
    y << 0, -i, i, 0;
    CHECK(equivalent_up_to_phase(y, circuit_unitary(c), 1e-12));
  }
  SUBCASE("ry") {
    Circuit c = parse_qasm("qreg q[1]; ry(3*pi/8) q[0];");
    double t = 3 * M_PI / 8;
    Unitary ry(2, 2);
    ry << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    CHECK(equivalent_up_to_phase(ry, circuit_unitary(c), 1e-12));
  }
  SUBCASE("u1 u2 u3") {
    auto u3_matrix = [](double th, double ph, double la) {
      std::complex<double> i{0, 1};
      Unitary u(2, 2);
      u << std::cos(th / 2), -std::exp(i * la) * std::sin(th / 2),
          std::exp(i * ph) * std::sin(th / 2),
          std::exp(i * (ph + la)) * std::cos(th / 2);
      return u;
    };
    Circuit c = parse_qasm("qreg q[1]; u3(pi/8, 3*pi/4, -pi/2) q[0];");
    CHECK(equivalent_up_to_phase(u3_matrix(M_PI / 8, 3 * M_PI / 4, -M_PI / 2),
                                 circuit_unitary(c), 1e-12));
    c = parse_qasm("qreg q[1]; u2(pi/4, pi/8) q[0];");
    CHECK(equivalent_up_to_phase(u3_matrix(M_PI / 2, M_PI / 4, M_PI / 8),
                                 circuit_unitary(c), 1e-12));
    c = parse_qasm("qreg q[1]; u1(5*pi/8) q[0];");
    CHECK(equivalent_up_to_phase(
        circuit_unitary(c),
        gate_unitary(Gate::rz(0, Phase::rational(5, 8)), 1), 1e-12));
  }
  SUBCASE("ccx equals the Toffoli permutation") {
    Circuit c = parse_qasm("qreg q[3]; ccx q[0],q[1],q[2];");
    Unitary tof = Unitary::Identity(8, 8);
    tof(3, 3) = 0;
    tof(7, 7) = 0;
    tof(3, 7) = 1;
    tof(7, 3) = 1;
    CHECK(equivalent_up_to_phase(tof, circuit_unitary(c), 1e-12));
    CHECK(c.count_entangling() == 6);
  }
}

TEST_CASE("gms instruction syntax") {
  Circuit c = parse_qasm("qreg q[4]; gms(pi/2) [0-1, 2-3];");
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].kind == GateKind::GMS);
  CHECK(c.gates[0].gms.pairs ==
        std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  std::string text = emit_qasmx(c);
  CHECK(text.find("gms(pi/2) [0-1, 2-3];") != std::string::npos);
}

TEST_CASE("round trip reproduces every gate") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = testutil::random_full_circuit(4, 20, rng);
    Circuit back = parse_qasm(emit_qasmx(c));
    REQUIRE(back.gates.size() == c.gates.size());
    for (size_t i = 0; i < c.gates.size(); ++i) CHECK(back.gates[i] == c.gates[i]);
  }
  // Numeric (unsnappable) angles also survive.
  Circuit c(1);
  c.add(Gate::rz(0, Phase::radians(0.5)));
  Circuit back = parse_qasm(emit_qasmx(c));
  CHECK(back.gates[0] == c.gates[0]);
}

TEST_CASE("stats count gates and layer timings") {
  Circuit c = parse_qasm("qreg q[2]; h q[0]; h q[1];");
  StatsRecord r = circuit_stats(c);
  CHECK(r.sqg_count == 2);
  CHECK(r.entangling_count == 0);
  CHECK(r.layer_count == 1);
  CHECK(r.time_ms == doctest::Approx(0.110));

  c = parse_qasm("qreg q[2]; cx q[0],q[1];");
  r = circuit_stats(c);
  CHECK(r.sqg_count == 0);
  CHECK(r.entangling_count == 1);
  CHECK(r.time_ms == doctest::Approx(0.672));

  c = parse_qasm("qreg q[2]; h q[0]; cx q[0],q[1]; h q[0];");
  r = circuit_stats(c);
  CHECK(r.layer_count == 3);
  CHECK(r.time_ms == doctest::Approx(0.892));
}

TEST_CASE("stats time is monotone under gate insertion") {
  std::mt19937_64 rng(505);
  Circuit c = testutil::random_full_circuit(4, 15, rng);
  double prev = 0.0;
  Circuit partial(4);
  for (const Gate& g : c.gates) {
    partial.add(g);
    StatsRecord r = circuit_stats(partial);
    CHECK(r.time_ms >= prev);
    prev = r.time_ms;
    CHECK(r.layer_count <= static_cast<int>(partial.gates.size()));
  }
}
