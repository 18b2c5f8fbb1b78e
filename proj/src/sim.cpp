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

#include "gms/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace gms {

namespace {

using C = std::complex<double>;
using Mat2 = std::array<C, 4>;  // row-major [a b; c d]

constexpr C kI{0.0, 1.0};

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 rz_mat(double t) {
  return {std::exp(-kI * (t / 2)), C{0}, C{0}, std::exp(kI * (t / 2))};
}

Mat2 rx_mat(double t) {
  double c = std::cos(t / 2), s = std::sin(t / 2);
  return {C{c}, -kI * s, -kI * s, C{c}};
}

Mat2 single_qubit_matrix(const Gate& g) {
  const double r2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      return {C{r2}, C{r2}, C{r2}, C{-r2}};
    case GateKind::RZ:
      return rz_mat(g.p0.value());
    case GateKind::RX:
      return rx_mat(g.p0.value());
    case GateKind::R: {
      double phi = g.p1.value();
      return mul(mul(rz_mat(phi), rx_mat(g.p0.value())), rz_mat(-phi));
    }
    case GateKind::Z:
      return {C{1}, C{0}, C{0}, C{-1}};
    case GateKind::X:
      return {C{0}, C{1}, C{1}, C{0}};
    case GateKind::S:
      return {C{1}, C{0}, C{0}, kI};
    case GateKind::Sdg:
      return {C{1}, C{0}, C{0}, -kI};
    case GateKind::T:
      return {C{1}, C{0}, C{0}, std::exp(kI * (M_PI / 4))};
    case GateKind::Tdg:
      return {C{1}, C{0}, C{0}, std::exp(-kI * (M_PI / 4))};
    default:
      throw std::logic_error("single_qubit_matrix: not a single-qubit gate");
  }
}

void apply_1q(StateVector& psi, int q, const Mat2& m) {
  Eigen::Index bit = Eigen::Index(1) << q;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    C a = psi(i), b = psi(i | bit);
    psi(i) = m[0] * a + m[1] * b;
    psi(i | bit) = m[2] * a + m[3] * b;
  }
}

void apply_xx(StateVector& psi, int qa, int qb, double alpha) {
  Eigen::Index ba = Eigen::Index(1) << qa;
  Eigen::Index bb = Eigen::Index(1) << qb;
  C c{std::cos(alpha / 2)};
  C s = -kI * std::sin(alpha / 2);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & ba) continue;  // each {i, i^(ba|bb)} pair visited once
    Eigen::Index j = i ^ (ba | bb);
    C a = psi(i), b = psi(j);
    psi(i) = c * a + s * b;
    psi(j) = c * b + s * a;
  }
}

}  // namespace

void apply_gate(StateVector& psi, const Gate& g, int n) {
  switch (g.kind) {
    case GateKind::CNOT: {
      Eigen::Index bc = Eigen::Index(1) << g.q0;
      Eigen::Index bt = Eigen::Index(1) << g.q1;
      for (Eigen::Index i = 0; i < psi.size(); ++i)
        if ((i & bc) && !(i & bt)) std::swap(psi(i), psi(i | bt));
      return;
    }
    case GateKind::CZ: {
      Eigen::Index m = (Eigen::Index(1) << g.q0) | (Eigen::Index(1) << g.q1);
      for (Eigen::Index i = 0; i < psi.size(); ++i)
        if ((i & m) == m) psi(i) = -psi(i);
      return;
    }
    case GateKind::SWAP: {
      Eigen::Index ba = Eigen::Index(1) << g.q0;
      Eigen::Index bb = Eigen::Index(1) << g.q1;
      for (Eigen::Index i = 0; i < psi.size(); ++i)
        if ((i & ba) && !(i & bb)) std::swap(psi(i), psi((i ^ ba) | bb));
      return;
    }
    case GateKind::XX:
      apply_xx(psi, g.q0, g.q1, g.p0.value());
      return;
    case GateKind::GMS: {
      double a = g.gms.angle.value();
      for (auto& pr : g.gms.pairs) apply_xx(psi, pr.first, pr.second, a);
      return;
    }
    default:
      apply_1q(psi, g.q0, single_qubit_matrix(g));
      return;
  }
  (void)n;
}

StateVector apply_circuit(const Circuit& c, StateVector psi) {
  if (psi.size() != (Eigen::Index(1) << c.qubit_count))
    throw std::invalid_argument("apply_circuit: dimension mismatch");
  for (const Gate& g : c.gates) apply_gate(psi, g, c.qubit_count);
  return psi;
}

Unitary gate_unitary(const Gate& g, int n) {
  if (n > 14) throw std::invalid_argument("gate_unitary: size exceeded");
  Circuit c(n);
  c.add(g);
  Eigen::Index dim = Eigen::Index(1) << n;
  Unitary u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    StateVector e = StateVector::Zero(dim);
    e(j) = 1.0;
    u.col(j) = apply_circuit(c, std::move(e));
  }
  return u;
}

Unitary circuit_unitary(const Circuit& c) {
  if (c.qubit_count > 10)
    throw std::invalid_argument("circuit_unitary: size exceeded");
  c.validate();
  Eigen::Index dim = Eigen::Index(1) << c.qubit_count;
  Unitary u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    StateVector e = StateVector::Zero(dim);
    e(j) = 1.0;
    u.col(j) = apply_circuit(c, std::move(e));
  }
  return u;
}

bool equivalent_up_to_phase(const Unitary& u1, const Unitary& u2, double tol) {
  if (u1.rows() != u2.rows() || u1.cols() != u2.cols()) return false;
  Eigen::Index r, cidx;
  double mx = u1.cwiseAbs().maxCoeff(&r, &cidx);
  if (mx < tol) return u2.cwiseAbs().maxCoeff() < tol;
  C gamma = u2(r, cidx) / u1(r, cidx);
  if (std::abs(std::abs(gamma) - 1.0) > 1e-6) return false;
  return (u1 * gamma - u2).cwiseAbs().maxCoeff() <= tol;
}

bool states_equal_up_to_phase(const StateVector& v1, const StateVector& v2,
                              double tol) {
  if (v1.size() != v2.size()) return false;
  Eigen::Index r;
  double mx = v1.cwiseAbs().maxCoeff(&r);
  if (mx < tol) return v2.cwiseAbs().maxCoeff() < tol;
  C gamma = v2(r) / v1(r);
  if (std::abs(std::abs(gamma) - 1.0) > 1e-6) return false;
  return (v1 * gamma - v2).cwiseAbs().maxCoeff() <= tol;
}

bool equivalent_on_random_states(const Circuit& c1, const Circuit& c2,
                                 int trials, double tol, unsigned seed) {
  if (c1.qubit_count != c2.qubit_count) return false;
  Eigen::Index dim = Eigen::Index(1) << c1.qubit_count;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < trials; ++t) {
    StateVector psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) psi(i) = C{gauss(rng), gauss(rng)};
    psi.normalize();
    StateVector o1 = apply_circuit(c1, psi);
    StateVector o2 = apply_circuit(c2, std::move(psi));
    double fidelity = std::norm(o1.dot(o2));
    if (fidelity < 1.0 - tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Diagram contraction.

namespace {

constexpr int kMaxOpenLegs = 26;

using LegKey = std::pair<VertexId, VertexId>;

LegKey leg_key(VertexId u, VertexId v) {
  return {std::min(u, v), std::max(u, v)};
}

// Vertex tensor over its legs (bit k of the index = leg k), built from the
// Z-spider tensor with a Hadamard folded onto each flagged leg.
std::vector<C> vertex_tensor(const VertexData& vd,
                             const std::vector<bool>& h_leg) {
  int k = static_cast<int>(h_leg.size());
  C ph = std::exp(kI * vd.phase.value());
  std::vector<C> t(size_t(1) << k, C{0});
  if (k == 0) {
    t[0] = C{1} + ph;
    return t;
  }
  t[0] = C{1};
  t[t.size() - 1] = ph;
  const double r2 = 1.0 / std::sqrt(2.0);
  for (int leg = 0; leg < k; ++leg) {
    bool flip = h_leg[leg];
    if (vd.kind == VertexKind::X) flip = !flip;
    if (!flip) continue;
    size_t bit = size_t(1) << leg;
    for (size_t i = 0; i < t.size(); ++i) {
      if (i & bit) continue;
      C a = t[i], b = t[i | bit];
      t[i] = (a + b) * r2;
      t[i | bit] = (a - b) * r2;
    }
  }
  return t;
}

}  // namespace

Unitary diagram_unitary(const ZxDiagram& input) {
  ZxDiagram d = input;
  // Split bare boundary-to-boundary wires so every leg ends at a spider.
  for (VertexId b : d.vertex_ids()) {
    if (!d.has_vertex(b) || !d.is_boundary(b)) continue;
    if (d.degree(b) != 1)
      throw std::invalid_argument("diagram_unitary: boundary degree != 1");
    VertexId c = d.neighbors(b).begin()->first;
    if (c <= b || !d.is_boundary(c)) continue;
    EdgeType t = d.edge_type(b, c);
    d.remove_edge(b, c);
    VertexId s = d.add_vertex(VertexKind::Z);
    d.add_edge(b, s, EdgeType::Plain);
    d.add_edge(s, c, t);
  }

  std::vector<VertexId> pending;
  for (VertexId v : d.vertex_ids())
    if (d.is_spider(v)) pending.push_back(v);

  std::vector<LegKey> open;
  std::vector<C> amp{C{1}};
  std::vector<char> processed(d.next_vertex_id(), 0);

  auto open_pos = [&open](const LegKey& k) -> int {
    for (size_t i = 0; i < open.size(); ++i)
      if (open[i] == k) return static_cast<int>(i);
    return -1;
  };

  while (!pending.empty()) {
    // Greedy: contract the spider leaving the fewest open legs.
    size_t best = 0;
    int best_width = 1 << 30;
    for (size_t i = 0; i < pending.size(); ++i) {
      VertexId v = pending[i];
      int consumed = 0;
      for (auto& [w, t] : d.neighbors(v))
        if (d.is_spider(w) && processed[w]) ++consumed;
      int width = static_cast<int>(open.size()) - consumed +
                  (d.degree(v) - consumed);
      if (width < best_width) {
        best_width = width;
        best = i;
      }
    }
    if (best_width > kMaxOpenLegs)
      throw std::runtime_error("diagram_unitary: contraction too wide");
    VertexId v = pending[best];
    pending.erase(pending.begin() + best);

    // Legs of v: consumed (already open) first, then fresh ones.
    std::vector<int> consumed_pos;
    std::vector<LegKey> fresh;
    std::vector<bool> h_leg;
    std::vector<bool> h_fresh;
    for (auto& [w, t] : d.neighbors(v)) {
      bool spider_w = d.is_spider(w);
      bool had = t == EdgeType::Hadamard;
      if (spider_w && processed[w]) {
        consumed_pos.push_back(open_pos(leg_key(v, w)));
        // v is the second endpoint reached, so it absorbs the Hadamard.
        h_leg.push_back(had);
      } else {
        fresh.push_back(leg_key(v, w));
        // Boundary legs are never processed from the far side.
        h_fresh.push_back(spider_w ? false : had);
      }
    }
    std::vector<bool> h_all = h_leg;
    h_all.insert(h_all.end(), h_fresh.begin(), h_fresh.end());
    std::vector<C> tens = vertex_tensor(d.vertex(v), h_all);

    std::vector<char> is_consumed(open.size(), 0);
    for (int p : consumed_pos) is_consumed[p] = 1;
    std::vector<LegKey> kept;
    std::vector<int> kept_pos;
    for (size_t i = 0; i < open.size(); ++i)
      if (!is_consumed[i]) {
        kept.push_back(open[i]);
        kept_pos.push_back(static_cast<int>(i));
      }

    int nk = static_cast<int>(kept.size());
    int nc = static_cast<int>(consumed_pos.size());
    int nf = static_cast<int>(fresh.size());
    std::vector<C> next(size_t(1) << (nk + nf), C{0});
    for (size_t o = 0; o < amp.size(); ++o) {
      if (amp[o] == C{0}) continue;
      size_t keep_idx = 0;
      for (int i = 0; i < nk; ++i)
        if (o & (size_t(1) << kept_pos[i])) keep_idx |= size_t(1) << i;
      size_t cons_idx = 0;
      for (int i = 0; i < nc; ++i)
        if (o & (size_t(1) << consumed_pos[i])) cons_idx |= size_t(1) << i;
      for (size_t f = 0; f < (size_t(1) << nf); ++f) {
        C w = tens[cons_idx | (f << nc)];
        if (w == C{0}) continue;
        next[keep_idx | (f << nk)] += amp[o] * w;
      }
    }
    amp = std::move(next);
    open = kept;
    open.insert(open.end(), fresh.begin(), fresh.end());
    processed[v] = 1;
  }

  // Remaining open legs are exactly the boundary wires.
  int m_in = static_cast<int>(d.inputs().size());
  int m_out = static_cast<int>(d.outputs().size());
  if (static_cast<int>(open.size()) != m_in + m_out)
    throw std::logic_error("diagram_unitary: stray open legs");
  auto leg_of_boundary = [&](VertexId b) {
    VertexId w = d.neighbors(b).begin()->first;
    int p = open_pos(leg_key(b, w));
    if (p < 0) throw std::logic_error("diagram_unitary: boundary leg missing");
    return p;
  };
  std::vector<int> in_pos(m_in), out_pos(m_out);
  for (int q = 0; q < m_in; ++q) in_pos[q] = leg_of_boundary(d.inputs()[q]);
  for (int q = 0; q < m_out; ++q) out_pos[q] = leg_of_boundary(d.outputs()[q]);

  Eigen::Index rows = Eigen::Index(1) << m_out;
  Eigen::Index cols = Eigen::Index(1) << m_in;
  Unitary mat(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y)
    for (Eigen::Index x = 0; x < cols; ++x) {
      size_t idx = 0;
      for (int q = 0; q < m_in; ++q)
        if (x & (Eigen::Index(1) << q)) idx |= size_t(1) << in_pos[q];
      for (int q = 0; q < m_out; ++q)
        if (y & (Eigen::Index(1) << q)) idx |= size_t(1) << out_pos[q];
      mat(y, x) = amp[idx];
    }

  double fro = mat.norm();
  if (fro < 1e-12)
    throw std::runtime_error("diagram_unitary: zero map");
  mat *= std::sqrt(double(rows)) / fro;
  if (rows == cols) {
    Unitary err = mat.adjoint() * mat - Unitary::Identity(cols, cols);
    if (err.cwiseAbs().maxCoeff() > 1e-8)
      throw std::runtime_error("diagram_unitary: map is not unitary");
  }
  return mat;
}

}  // namespace gms
