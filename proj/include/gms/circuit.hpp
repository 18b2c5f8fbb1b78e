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

#include <string>
#include <utility>
#include <vector>

#include "gms/phase.hpp"

namespace gms {

enum class GateKind {
  H,
  RZ,
  RX,
  R,  // R(theta, phi) = exp(-i theta/2 (cos(phi) X + sin(phi) Y))
  Z,
  X,
  S,
  Sdg,
  T,
  Tdg,
  CNOT,
  CZ,
  XX,  // XX(alpha) = exp(-i alpha/2 X_i X_j)
  SWAP,
  GMS,
};

/// One global gate: simultaneous XX(angle) on every coupled pair.
/// Pairs are stored with first < second, sorted, without duplicates; this is
/// the canonical form of the symmetric zero-diagonal coupling matrix.
struct GmsLayer {
  Phase angle;
  std::vector<std::pair<int, int>> pairs;

  GmsLayer() : angle(Phase::half_pi()) {}
  GmsLayer(Phase a, std::vector<std::pair<int, int>> p);

  bool involves(int q) const;
  /// Highest qubit index + 1 touched by any pair.
  int max_qubit() const;
  bool operator==(const GmsLayer& o) const {
    return angle == o.angle && pairs == o.pairs;
  }
};

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;
  Phase p0;  // rotation angle (theta)
  Phase p1;  // second angle (phi) for R
  GmsLayer gms;

  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate rz(int q, Phase a) { return {GateKind::RZ, q, -1, a}; }
  static Gate rx(int q, Phase a) { return {GateKind::RX, q, -1, a}; }
  static Gate r(int q, Phase theta, Phase phi) {
    return {GateKind::R, q, -1, theta, phi};
  }
  static Gate z(int q) { return {GateKind::Z, q}; }
  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate s(int q) { return {GateKind::S, q}; }
  static Gate sdg(int q) { return {GateKind::Sdg, q}; }
  static Gate t(int q) { return {GateKind::T, q}; }
  static Gate tdg(int q) { return {GateKind::Tdg, q}; }
  static Gate cnot(int control, int target) {
    return {GateKind::CNOT, control, target};
  }
  static Gate cz(int a, int b);  // canonicalized to q0 < q1
  static Gate xx(int a, int b, Phase alpha);  // canonicalized to q0 < q1
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b}; }
  static Gate global_ms(GmsLayer layer);

  bool is_entangling() const;
  bool is_single_qubit() const { return !is_entangling(); }
  /// Qubits touched by this gate, ascending.
  std::vector<int> qubits() const;
  bool acts_on(int q) const;

  bool operator==(const Gate& o) const;
};

struct Circuit {
  int qubit_count = 0;
  std::string name;
  std::vector<Gate> gates;

  Circuit() = default;
  Circuit(int n, std::string nm = "") : qubit_count(n), name(std::move(nm)) {}

  void add(Gate g);
  /// Throws std::invalid_argument on any gate/index invariant violation.
  void validate() const;

  int count_entangling() const;
  int count_single_qubit() const;
};

}  // namespace gms
