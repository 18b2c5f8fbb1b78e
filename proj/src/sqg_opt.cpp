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

#include <stdexcept>
#include <vector>

namespace gms {

namespace {

bool is_rotation(GateKind k) {
  return k == GateKind::RZ || k == GateKind::RX;
}

/// Index of the next live gate acting on q after position i, or -1.
int next_on(const std::vector<Gate>& gs, const std::vector<char>& dead,
            int i, int q) {
  for (int j = i + 1; j < static_cast<int>(gs.size()); ++j)
    if (!dead[j] && gs[j].acts_on(q)) return j;
  return -1;
}

/// One simplification step; returns true if anything changed.
bool step(std::vector<Gate>& gs, std::vector<char>& dead) {
  int n = static_cast<int>(gs.size());
  for (int i = 0; i < n; ++i) {
    if (dead[i]) continue;
    Gate& g = gs[i];
    if ((is_rotation(g.kind) || g.kind == GateKind::R) && g.p0.is_zero()) {
      dead[i] = true;
      return true;
    }
    if (g.kind == GateKind::GMS || g.kind == GateKind::R) continue;
    int q = g.q0;
    int j = next_on(gs, dead, i, q);
    if (g.kind == GateKind::H) {
      if (j < 0) continue;
      if (gs[j].kind == GateKind::H) {
        dead[i] = dead[j] = true;
        return true;
      }
      if (is_rotation(gs[j].kind)) {
        int k = next_on(gs, dead, j, q);
        if (k >= 0 && gs[k].kind == GateKind::H) {
          gs[j].kind =
              gs[j].kind == GateKind::RX ? GateKind::RZ : GateKind::RX;
          dead[i] = dead[k] = true;
          return true;
        }
      }
      continue;
    }
    // g is RZ or RX: merge with the next same-axis rotation, allowing RX to
    // ride through any number of GMS gates on its way to the outputs.
    while (j >= 0 && g.kind == GateKind::RX && gs[j].kind == GateKind::GMS)
      j = next_on(gs, dead, j, q);
    if (j >= 0 && gs[j].kind == g.kind) {
      gs[j].p0 += g.p0;
      dead[i] = true;
      if (gs[j].p0.is_zero()) dead[j] = true;
      return true;
    }
  }
  return false;
}

}  // namespace

Circuit optimize_sqg(const Circuit& c) {
  for (const Gate& g : c.gates)
    switch (g.kind) {
      case GateKind::H:
      case GateKind::RZ:
      case GateKind::RX:
      case GateKind::R:
      case GateKind::GMS:
        break;
      default:
        throw std::invalid_argument("optimize_sqg: unsupported gate kind");
    }
  std::vector<Gate> gs = c.gates;
  std::vector<char> dead(gs.size(), false);
  long cap = 4L * static_cast<long>(gs.size()) + 16;
  for (long iter = 0; iter < cap && step(gs, dead); ++iter) {
  }
  Circuit out(c.qubit_count, c.name);
  for (size_t i = 0; i < gs.size(); ++i)
    if (!dead[i]) out.add(gs[i]);
  return out;
}

Circuit lower_h_to_native(const Circuit& c) {
  Circuit out(c.qubit_count, c.name);
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::H) {
      out.add(g);
      continue;
    }
    out.add(Gate::rz(g.q0, Phase::half_pi()));
    out.add(Gate::rx(g.q0, Phase::half_pi()));
    out.add(Gate::rz(g.q0, Phase::half_pi()));
  }
  return out;
}

}  // namespace gms
