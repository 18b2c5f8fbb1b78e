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

#include <optional>
#include <string>
#include <vector>

#include "gms/circuit.hpp"
#include "gms/gf2.hpp"

namespace gms {

/// 0/1 integer program over row-operation matrices G acting on a frontier
/// biadjacency matrix M (n frontier rows, m neighbour columns).
///
/// Feasible G are exactly the commuting-CNOT layers: unit diagonal, and any
/// row that gets added into another row has no off-diagonal entries itself.
/// The objective rewards rows of GM reduced to weight 1 (n points each) and
/// charges one point per off-diagonal entry of G.
struct LpInstance {
  Gf2Matrix m;  // the frontier matrix, n x cols
  int n = 0;
  int cols = 0;

  /// Feasibility check of a concrete G against the full linearized
  /// constraint set, materializing the auxiliary x/y/z/t/k variables.
  /// Returns the objective value, or nullopt when any constraint fails.
  std::optional<int> evaluate(const Gf2Matrix& g) const;

  /// Plain-text listing of the materialized constraints for inspection.
  std::string dump() const;
};

LpInstance encode(const Gf2Matrix& m);

/// A chosen commuting-CNOT layer together with its effect on the frontier.
struct FrontierReduction {
  Gf2Matrix g;                       // n x n, unit diagonal
  std::vector<int> extractable_rows;  // rows of GM with weight exactly 1
  int cnot_count = 0;                // off-diagonal ones of G
  int objective = 0;                 // n * |extractable| - cnot_count
};

/// Structural validity of a reduction against its frontier matrix: unit
/// diagonal, row-exclusion (an added row is itself untouched), extractable
/// rows really have weight 1 in GM, and the counts match.
bool reduction_is_valid(const FrontierReduction& r, const Gf2Matrix& m);

/// Provably optimal solution by depth-first branch-and-bound over the
/// off-diagonal entries of G, in ascending (row, column) order with the
/// 1-branch explored first. Ties go to smaller CNOT count, then to the
/// lexicographically smallest G (row-major). Returns nullopt when the node
/// budget is exhausted; throws std::runtime_error if no feasible G exists
/// (impossible for full-row-rank frontiers).
std::optional<FrontierReduction> solve_exact(const LpInstance& inst,
                                             long node_budget = 200000);

/// Guaranteed reduction by a single fanout: one target row receives the xor
/// of a row set S chosen (via unit-vector solving per column) to minimize
/// |S|, ties to the lowest column index. Throws std::runtime_error when no
/// column is reachable, which signals a gflow violation upstream.
FrontierReduction fanout_fallback(const Gf2Matrix& m);

/// The commuting CNOT list realizing G: one CNOT(i, j) per off-diagonal
/// G[i][j] = 1, meaning row op r_i <- r_i xor r_j. Throws on structural
/// violations (some qubit both control and target).
std::vector<Gate> reduction_to_cnots(const FrontierReduction& r);

}  // namespace gms
