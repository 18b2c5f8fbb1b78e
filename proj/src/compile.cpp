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

#include "gms/compile.hpp"

#include <stdexcept>

#include "gms/simplify.hpp"
#include "gms/sqg_opt.hpp"
#include "gms/zx.hpp"

namespace gms {

namespace {

void lower_cnot(Circuit& out, int i, int j) {
  Phase mhp = -Phase::half_pi();
  out.add(Gate::h(i));
  out.add(Gate::global_ms(GmsLayer(Phase::half_pi(), {{i, j}})));
  out.add(Gate::rx(i, mhp));
  out.add(Gate::rx(j, mhp));
  out.add(Gate::h(i));
}

void lower_cz(Circuit& out, int i, int j) {
  Phase mhp = -Phase::half_pi();
  out.add(Gate::rz(i, mhp));
  out.add(Gate::rz(j, mhp));
  // ZZ(pi/2) as a Hadamard-conjugated single-pair GMS.
  out.add(Gate::h(i));
  out.add(Gate::h(j));
  out.add(Gate::global_ms(GmsLayer(Phase::half_pi(), {{i, j}})));
  out.add(Gate::h(i));
  out.add(Gate::h(j));
}

}  // namespace

Circuit naive_lowering(const Circuit& c) {
  Circuit out(c.qubit_count, c.name);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::RZ:
      case GateKind::RX:
      case GateKind::R:
      case GateKind::GMS:
        out.add(g);
        break;
      case GateKind::Z:
        out.add(Gate::rz(g.q0, Phase::pi()));
        break;
      case GateKind::X:
        out.add(Gate::rx(g.q0, Phase::pi()));
        break;
      case GateKind::S:
        out.add(Gate::rz(g.q0, Phase::half_pi()));
        break;
      case GateKind::Sdg:
        out.add(Gate::rz(g.q0, -Phase::half_pi()));
        break;
      case GateKind::T:
        out.add(Gate::rz(g.q0, Phase::rational(1, 4)));
        break;
      case GateKind::Tdg:
        out.add(Gate::rz(g.q0, Phase::rational(-1, 4)));
        break;
      case GateKind::CNOT:
        lower_cnot(out, g.q0, g.q1);
        break;
      case GateKind::CZ:
        lower_cz(out, g.q0, g.q1);
        break;
      case GateKind::XX:
        out.add(Gate::global_ms(GmsLayer(g.p0, {{g.q0, g.q1}})));
        break;
      case GateKind::SWAP:
        lower_cnot(out, g.q0, g.q1);
        lower_cnot(out, g.q1, g.q0);
        lower_cnot(out, g.q0, g.q1);
        break;
      default:
        throw std::invalid_argument("naive_lowering: unsupported gate");
    }
  }
  return out;
}

Circuit compile_circuit(const Circuit& c, const CompileOptions& opts) {
  Circuit out;
  if (opts.strategy == Strategy::Naive) {
    out = naive_lowering(c);
  } else {
    ZxDiagram d = full_simplify(to_graph_like(circuit_to_diagram(c)));
    ExtractOptions eo;
    eo.strategy = opts.strategy;
    eo.lp_node_budget = opts.lp_node_budget;
    eo.lp_max_size = opts.lp_max_size;
    eo.frontier_trace = opts.frontier_trace;
    out = extract_circuit(d, eo);
    out.name = c.name;
  }
  if (opts.run_sqg_opt) out = optimize_sqg(out);
  if (opts.native_h) out = lower_h_to_native(out);
  return out;
}

}  // namespace gms
