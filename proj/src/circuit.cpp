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

#include "gms/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gms {

GmsLayer::GmsLayer(Phase a, std::vector<std::pair<int, int>> p)
    : angle(a), pairs(std::move(p)) {
  for (auto& pr : pairs) {
    if (pr.first == pr.second)
      throw std::invalid_argument("GmsLayer: diagonal coupling");
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw std::invalid_argument("GmsLayer: repeated pair");
  if (pairs.empty()) throw std::invalid_argument("GmsLayer: empty coupling");
}

bool GmsLayer::involves(int q) const {
  for (auto& pr : pairs)
    if (pr.first == q || pr.second == q) return true;
  return false;
}

int GmsLayer::max_qubit() const {
  int m = 0;
  for (auto& pr : pairs) m = std::max(m, pr.second + 1);
  return m;
}

Gate Gate::cz(int a, int b) {
  if (a > b) std::swap(a, b);
  return {GateKind::CZ, a, b};
}

Gate Gate::xx(int a, int b, Phase alpha) {
  if (a > b) std::swap(a, b);
  return {GateKind::XX, a, b, alpha};
}

Gate Gate::global_ms(GmsLayer layer) {
  Gate g{GateKind::GMS};
  g.gms = std::move(layer);
  return g;
}

bool Gate::is_entangling() const {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::XX:
    case GateKind::SWAP:
    case GateKind::GMS:
      return true;
    default:
      return false;
  }
}

std::vector<int> Gate::qubits() const {
  if (kind == GateKind::GMS) {
    std::set<int> qs;
    for (auto& pr : gms.pairs) {
      qs.insert(pr.first);
      qs.insert(pr.second);
    }
    return {qs.begin(), qs.end()};
  }
  if (q1 >= 0) {
    if (q0 < q1) return {q0, q1};
    return {q1, q0};
  }
  return {q0};
}

bool Gate::acts_on(int q) const {
  if (kind == GateKind::GMS) return gms.involves(q);
  return q0 == q || q1 == q;
}

bool Gate::operator==(const Gate& o) const {
  if (kind != o.kind) return false;
  if (kind == GateKind::GMS) return gms == o.gms;
  return q0 == o.q0 && q1 == o.q1 && p0 == o.p0 && p1 == o.p1;
}

void Circuit::add(Gate g) { gates.push_back(std::move(g)); }

void Circuit::validate() const {
  if (qubit_count <= 0) throw std::invalid_argument("Circuit: no qubits");
  for (const auto& g : gates) {
    for (int q : g.qubits()) {
      if (q < 0 || q >= qubit_count)
        throw std::invalid_argument("Circuit: qubit index out of range");
    }
    if (g.kind != GateKind::GMS && g.q1 >= 0 && g.q0 == g.q1)
      throw std::invalid_argument("Circuit: two-qubit gate on equal operands");
    if (g.kind == GateKind::CZ && g.q0 >= g.q1)
      throw std::invalid_argument("Circuit: CZ not in canonical order");
  }
}

int Circuit::count_entangling() const {
  int n = 0;
  for (const auto& g : gates) n += g.is_entangling() ? 1 : 0;
  return n;
}

int Circuit::count_single_qubit() const {
  return static_cast<int>(gates.size()) - count_entangling();
}

}  // namespace gms
