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

#include <vector>

#include "gms/circuit.hpp"
#include "gms/extract.hpp"
#include "gms/gf2.hpp"

namespace gms {

struct CompileOptions {
  Strategy strategy = Strategy::Lp;
  long lp_node_budget = 200000;
  int lp_max_size = 12;
  bool run_sqg_opt = true;
  bool native_h = false;
  /// When set, frontier biadjacency matrices seen during extraction are
  /// appended here (empty for the naive strategy).
  std::vector<Gf2Matrix>* frontier_trace = nullptr;
};

/// Full pipeline: diagram translation, graph-like normalization, rewriting
/// to a reduced diagram, GMS extraction, then single-qubit cleanup. The
/// naive strategy instead lowers each gate locally into GMS form without
/// touching ZX. Output gate set: {RZ, RX, R, H, GMS}, or {RZ, RX, R, GMS}
/// with native_h.
Circuit compile_circuit(const Circuit& c, const CompileOptions& opts = {});

/// Per-gate lowering used by the naive strategy: every two-qubit gate is
/// replaced by its single-pair GMS decomposition, single-qubit gates are
/// rewritten over {RZ, RX, H}.
Circuit naive_lowering(const Circuit& c);

}  // namespace gms
