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

#include "gms/gflow.hpp"

#include <algorithm>

#include "gms/gf2.hpp"

namespace gms {

LabelledOpenGraph open_graph_of(const ZxDiagram& d) {
  // A phase-gadget pair collapses to a single YZ-labelled vertex: the axle
  // keeps the legs and takes the pendant's angle, the pendant disappears.
  auto pendant = [&d](VertexId v) {
    return d.is_spider(v) && d.vertex(v).plane == Plane::YZ &&
           d.degree(v) == 1 && d.is_spider(d.neighbors(v).begin()->first);
  };
  LabelledOpenGraph g;
  std::map<VertexId, Phase> gadget_angle;
  for (VertexId v : d.vertex_ids()) {
    if (!d.is_spider(v) || pendant(v)) continue;
    g.vertices.push_back(v);
    auto& nb = g.adj[v];
    for (auto& [w, t] : d.neighbors(v)) {
      if (!d.is_spider(w)) continue;
      if (pendant(w))
        gadget_angle.emplace(v, d.vertex(w).phase);
      else
        nb.insert(w);
    }
  }
  for (VertexId b : d.inputs()) {
    VertexId s = d.neighbors(b).begin()->first;
    g.inputs.push_back(s);
    g.input_set.insert(s);
  }
  for (VertexId b : d.outputs()) {
    VertexId s = d.neighbors(b).begin()->first;
    g.outputs.push_back(s);
    g.output_set.insert(s);
  }
  for (VertexId v : g.vertices) {
    if (g.is_output(v)) continue;
    auto it = gadget_angle.find(v);
    if (it != gadget_angle.end()) {
      g.label[v] = Plane::YZ;
      g.angle[v] = it->second;
    } else {
      g.label[v] = d.vertex(v).plane;
      g.angle[v] = d.vertex(v).phase;
    }
  }
  return g;
}

std::set<VertexId> odd_neighbourhood(const LabelledOpenGraph& g,
                                     const std::set<VertexId>& k) {
  std::map<VertexId, int> count;
  for (VertexId v : k) {
    auto it = g.adj.find(v);
    if (it == g.adj.end()) continue;
    for (VertexId w : it->second) ++count[w];
  }
  std::set<VertexId> odd;
  for (auto& [w, c] : count)
    if (c % 2) odd.insert(w);
  return odd;
}

bool verify_gflow(const LabelledOpenGraph& graph, const GflowCert& cert) {
  // Layers must cover every vertex; correction sets exactly the non-outputs.
  for (VertexId v : graph.vertices)
    if (!cert.layer.count(v)) return false;
  for (auto& [v, s] : cert.g)
    if (graph.is_output(v)) return false;
  // v comes before w in the order iff layer(v) > layer(w).
  auto before = [&cert](VertexId v, VertexId w) {
    return cert.layer.at(v) > cert.layer.at(w);
  };
  for (VertexId v : graph.vertices) {
    if (graph.is_output(v)) continue;
    auto it = cert.g.find(v);
    if (it == cert.g.end()) return false;
    const std::set<VertexId>& gv = it->second;
    for (VertexId w : gv) {
      if (graph.is_input(w)) return false;
      if (w != v && !before(v, w)) return false;
    }
    std::set<VertexId> odd = odd_neighbourhood(graph, gv);
    for (VertexId w : odd)
      if (w != v && !before(v, w)) return false;
    bool in_g = gv.count(v) > 0;
    bool in_odd = odd.count(v) > 0;
    switch (graph.label.at(v)) {
      case Plane::XY:
        if (in_g || !in_odd) return false;
        break;
      case Plane::XZ:
        if (!in_g || !in_odd) return false;
        break;
      case Plane::YZ:
        if (!in_g || in_odd) return false;
        break;
    }
  }
  return true;
}

namespace {

// RREF restricted to the first `ncols` columns of an augmented matrix.
struct Elim {
  Gf2Matrix m;
  std::vector<int> pivot_col_of_row;
  int rank = 0;
};

Elim eliminate(Gf2Matrix m, int ncols) {
  Elim e;
  e.pivot_col_of_row.assign(m.rows(), -1);
  int pr = 0;
  for (int c = 0; c < ncols && pr < m.rows(); ++c) {
    int pivot = -1;
    for (int r = pr; r < m.rows(); ++r)
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != pr) {
      m.row_add(pr, pivot);
      m.row_add(pivot, pr);
      m.row_add(pr, pivot);
    }
    for (int r = 0; r < m.rows(); ++r)
      if (r != pr && m.get(r, c)) m.row_add(r, pr);
    e.pivot_col_of_row[pr] = c;
    ++pr;
  }
  e.rank = pr;
  e.m = std::move(m);
  return e;
}

}  // namespace

std::optional<GflowCert> find_maximally_delayed_gflow(
    const LabelledOpenGraph& graph) {
  GflowCert cert;
  std::set<VertexId> corrected;
  for (VertexId o : graph.outputs) {
    corrected.insert(o);
    cert.layer[o] = 0;
  }
  int layer = 1;
  for (;;) {
    std::vector<VertexId> uncorrected;
    for (VertexId v : graph.vertices)
      if (!corrected.count(v)) uncorrected.push_back(v);
    if (uncorrected.empty()) return cert;

    // Correction-set candidates: already-corrected non-inputs.
    std::vector<VertexId> cand;
    for (VertexId v : corrected)
      if (!graph.is_input(v)) cand.push_back(v);
    std::sort(cand.begin(), cand.end());
    int nc = static_cast<int>(cand.size());
    int nu = static_cast<int>(uncorrected.size());
    std::map<VertexId, int> urow;
    for (int i = 0; i < nu; ++i) urow[uncorrected[i]] = i;

    // One GF(2) system per uncorrected vertex, all sharing the coefficient
    // matrix A[w][c] = edge(w, c) over rows w in U, columns c in cand.
    // The rhs column for u encodes its plane's odd-neighbourhood demand.
    Gf2Matrix aug(nu, nc + nu);
    for (int r = 0; r < nu; ++r) {
      auto& nb = graph.adj.at(uncorrected[r]);
      for (int c = 0; c < nc; ++c)
        if (nb.count(cand[c])) aug.set(r, c, true);
    }
    for (int j = 0; j < nu; ++j) {
      VertexId u = uncorrected[j];
      Plane plane = graph.label.at(u);
      bool self_in_g = plane != Plane::XY;
      if (self_in_g && graph.is_input(u)) continue;  // u in g(u) needs u not in I
      // XY: Odd(K) ∩ U = {u}.
      // YZ: Odd(K ∪ {u}) ∩ U = {} so Odd(K) ∩ U = N(u) ∩ U.
      // XZ: Odd(K ∪ {u}) ∩ U = {u} so Odd(K) ∩ U = (N(u) ∩ U) xor {u}.
      auto& nb = graph.adj.at(u);
      for (int r = 0; r < nu; ++r) {
        bool bit = false;
        if (plane != Plane::XY && nb.count(uncorrected[r])) bit = !bit;
        if (plane != Plane::YZ && r == j) bit = !bit;
        aug.set(r, nc + j, bit);
      }
    }
    Elim e = eliminate(std::move(aug), nc);

    std::vector<VertexId> found;
    for (int j = 0; j < nu; ++j) {
      VertexId u = uncorrected[j];
      Plane plane = graph.label.at(u);
      if (plane != Plane::XY && graph.is_input(u)) continue;
      bool consistent = true;
      for (int r = e.rank; r < nu; ++r)
        if (e.m.get(r, nc + j)) {
          consistent = false;
          break;
        }
      if (!consistent) continue;
      std::set<VertexId> k;
      for (int r = 0; r < e.rank; ++r)
        if (e.m.get(r, nc + j)) k.insert(cand[e.pivot_col_of_row[r]]);
      if (plane != Plane::XY) k.insert(u);
      cert.g[u] = std::move(k);
      cert.layer[u] = layer;
      found.push_back(u);
    }
    if (found.empty()) return std::nullopt;
    for (VertexId u : found) corrected.insert(u);
    ++layer;
  }
}

bool gflow_exists(const ZxDiagram& d) {
  return find_maximally_delayed_gflow(open_graph_of(d)).has_value();
}

}  // namespace gms
