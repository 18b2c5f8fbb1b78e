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

#include <set>
#include <utility>
#include <vector>

#include "gms/circuit.hpp"
#include "gms/gf2.hpp"
#include "gms/zx.hpp"

namespace gms {

enum class Strategy { Lp, Patel, Fanout, Naive };

/// Prepend-only circuit accumulator used while walking a diagram from the
/// outputs toward the inputs. Gates arrive in reverse circuit order; the
/// builder keeps one "open" GMS at a fixed angle of pi/2 and merges incoming
/// XX(pi/2) couplings into it while the per-qubit barrier flags permit.
///
/// barrier[q] is true once a gate that does not commute with XX on q (RZ, H,
/// R, or a CZ-derived block) has been placed on the input side of the open
/// GMS. An XX coupling is merged only if both of its qubits are unbarriered
/// and the pair is not already present; otherwise the round is closed and a
/// new GMS opens at the input end.
class GmsBuilder {
 public:
  explicit GmsBuilder(int qubits);

  /// Route one single-qubit gate (H, RZ, RX, or R), emitted in reverse
  /// circuit order. Zero-angle rotations are dropped. RX gates that land
  /// next to an RX on the same qubit within a segment merge by angle
  /// addition.
  void route_single(const Gate& g);

  /// Route one XX(pi/2) coupling through the open-GMS merge rules.
  void route_xx(int a, int b);

  /// True when nothing separates qubit q's input end from the open GMS and
  /// the open GMS does not couple q; such a qubit admits output-side
  /// placement of arbitrary gates.
  bool qubit_clear(int q) const;

  /// Place a prelowered gate block (given in circuit order) immediately on
  /// the output side of the open GMS. Caller must ensure every touched
  /// qubit is clear.
  void place_block_output_side(const std::vector<Gate>& block);

  /// Place a prelowered gate block (given in circuit order) at the input
  /// end; barriers are raised on every qubit the block touches.
  void place_block_input_side(const std::vector<Gate>& block);

  /// Assemble the final circuit, leftmost gate first.
  Circuit finish(int qubit_count) const;

 private:
  struct Round {
    std::vector<Gate> left;  // emission order; circuit order is reversed
    std::vector<Gate> mid;   // emission order; circuit order is reversed
    std::set<std::pair<int, int>> pairs;
    bool open = false;
  };

  void close_round();
  static void push_merging_rx(std::vector<Gate>& seg, const Gate& g);

  int qubits_;
  std::vector<Round> closed_;
  Round cur_;
  std::vector<char> barrier_;
};

/// Lower a CNOT list (circuit order) through the builder: each CNOT(i, j)
/// becomes H_i XX(pi/2) RX_i(-pi/2) RX_j(-pi/2) H_i, with the control-side
/// Hadamards dropped pairwise when consecutive CNOTs on a qubit share it as
/// control. A pairwise-commuting list on a fresh builder yields exactly one
/// GMS.
void extract_cnot_layer(const std::vector<Gate>& cnots, GmsBuilder& builder);

struct ExtractOptions {
  Strategy strategy = Strategy::Lp;
  long lp_node_budget = 200000;
  int lp_max_size = 12;
  /// When set, every frontier biadjacency matrix fed to a reduction
  /// strategy is appended here.
  std::vector<Gf2Matrix>* frontier_trace = nullptr;
};

/// Extract a circuit from a graph-like diagram with gflow. The output uses
/// only {RZ, RX, H, GMS}; every entangling operation is a GMS at angle pi/2.
/// Throws std::runtime_error when the frontier gets stuck, which indicates a
/// gflow violation upstream.
Circuit extract_circuit(const ZxDiagram& d, const ExtractOptions& opts = {});

}  // namespace gms
