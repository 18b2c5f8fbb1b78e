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

#include "gms/simplify.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace gms {

bool is_rewrite_interior(const ZxDiagram& d, VertexId v) {
  return d.has_vertex(v) && d.is_spider(v) && d.is_interior(v);
}

bool is_gadget_pendant(const ZxDiagram& d, VertexId v) {
  return d.has_vertex(v) && d.is_spider(v) &&
         d.vertex(v).plane == Plane::YZ && d.degree(v) == 1;
}

bool is_gadget_axle(const ZxDiagram& d, VertexId v) {
  if (!d.has_vertex(v) || !d.is_spider(v)) return false;
  for (auto& [w, t] : d.neighbors(v))
    if (is_gadget_pendant(d, w)) return true;
  return false;
}

namespace {

std::vector<VertexId> spider_neighbors(const ZxDiagram& d, VertexId v) {
  std::vector<VertexId> out;
  for (auto& [w, t] : d.neighbors(v)) out.push_back(w);
  return out;
}

void toggle_pairs(ZxDiagram& d, const std::vector<VertexId>& as,
                  const std::vector<VertexId>& bs) {
  for (VertexId a : as)
    for (VertexId b : bs)
      if (a != b) d.toggle_hadamard_edge(a, b);
}

}  // namespace

void local_complement_at(ZxDiagram& d, VertexId v) {
  if (!is_rewrite_interior(d, v) || d.vertex(v).plane != Plane::XY ||
      !d.vertex(v).phase.is_proper_clifford())
    throw std::invalid_argument(
        "local_complement_at: needs an interior XY spider with phase +-pi/2");
  Phase alpha = d.vertex(v).phase;
  std::vector<VertexId> nb = spider_neighbors(d, v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      d.toggle_hadamard_edge(nb[i], nb[j]);
  for (VertexId w : nb) d.vertex(w).phase += -alpha;
  d.remove_vertex(v);
}

void pivot_at(ZxDiagram& d, VertexId u, VertexId v) {
  for (VertexId x : {u, v})
    if (!is_rewrite_interior(d, x) || d.vertex(x).plane != Plane::XY ||
        !d.vertex(x).phase.is_pauli())
      throw std::invalid_argument(
          "pivot_at: needs interior XY spiders with Pauli phases");
  if (!d.has_edge(u, v) || d.edge_type(u, v) != EdgeType::Hadamard)
    throw std::invalid_argument("pivot_at: vertices must be Hadamard-adjacent");
  Phase pu = d.vertex(u).phase;
  Phase pv = d.vertex(v).phase;
  std::set<VertexId> nu, nv;
  for (auto& [w, t] : d.neighbors(u))
    if (w != v) nu.insert(w);
  for (auto& [w, t] : d.neighbors(v))
    if (w != u) nv.insert(w);
  std::vector<VertexId> only_u, only_v, shared;
  for (VertexId w : nu) (nv.count(w) ? shared : only_u).push_back(w);
  for (VertexId w : nv)
    if (!nu.count(w)) only_v.push_back(w);
  toggle_pairs(d, only_u, only_v);
  toggle_pairs(d, only_u, shared);
  toggle_pairs(d, only_v, shared);
  for (VertexId w : only_u) d.vertex(w).phase += pv;
  for (VertexId w : only_v) d.vertex(w).phase += pu;
  for (VertexId w : shared) d.vertex(w).phase += pu + pv + Phase::pi();
  d.remove_vertex(u);
  d.remove_vertex(v);
}

bool pivot_gadget(ZxDiagram& d, VertexId u, VertexId v) {
  if (!is_rewrite_interior(d, u) || d.vertex(u).plane != Plane::XY ||
      !d.vertex(u).phase.is_pauli())
    throw std::invalid_argument(
        "pivot_gadget: u must be an interior XY spider with a Pauli phase");
  if (!is_rewrite_interior(d, v) || d.vertex(v).plane != Plane::XY)
    throw std::invalid_argument("pivot_gadget: v must be an interior XY spider");
  if (!d.has_edge(u, v))
    throw std::invalid_argument("pivot_gadget: vertices must be adjacent");
  if (d.degree(v) == 1) return false;
  Phase alpha = d.vertex(v).phase;
  d.vertex(v).phase = Phase::zero();
  VertexId connector = d.add_vertex(VertexKind::Z);
  VertexId pendant = d.add_vertex(VertexKind::Z, alpha, Plane::YZ);
  d.add_edge(connector, pendant, EdgeType::Hadamard);
  d.add_edge(v, connector, EdgeType::Hadamard);
  pivot_at(d, u, v);
  return true;
}

namespace {

// Phase-0 degree-2 interior spider: drop it and fuse its two neighbours
// (their double Hadamard edge composes to a plain wire).
bool apply_one_identity(ZxDiagram& d) {
  for (VertexId v : d.vertex_ids()) {
    if (!is_rewrite_interior(d, v) || d.vertex(v).plane != Plane::XY) continue;
    if (!d.vertex(v).phase.is_zero() || !d.vertex(v).phase.is_exact()) continue;
    if (d.degree(v) != 2) continue;
    std::vector<VertexId> nb = spider_neighbors(d, v);
    VertexId a = nb[0], b = nb[1];
    if (d.boundary_adjacent(a) && d.boundary_adjacent(b)) continue;
    if (d.degree(a) == 1 && d.degree(b) == 1) continue;
    if (is_gadget_axle(d, a) && is_gadget_axle(d, b)) continue;
    VertexId s = d.boundary_adjacent(a)   ? a
                 : d.boundary_adjacent(b) ? b
                                          : std::min(a, b);
    VertexId t = s == a ? b : a;
    d.remove_vertex(v);
    if (d.has_edge(s, t)) {
      // Fusing across an extra Hadamard edge leaves a pi self-loop.
      d.remove_edge(s, t);
      d.vertex(s).phase += Phase::pi();
    }
    d.vertex(s).phase += d.vertex(t).phase;
    for (VertexId w : spider_neighbors(d, t)) {
      if (d.is_boundary(w))
        d.add_edge(s, w, EdgeType::Plain);
      else
        d.toggle_hadamard_edge(s, w);
    }
    d.remove_vertex(t);
    return true;
  }
  return false;
}

bool apply_one_gadget_fusion(ZxDiagram& d, SimplifyStats& s) {
  // Key: the connector's leg set. Two gadgets hitting the same legs compose
  // by adding their pendant phases.
  std::map<std::set<VertexId>, VertexId> seen;  // legs -> surviving pendant
  for (VertexId p : d.vertex_ids()) {
    if (!d.has_vertex(p) || !is_gadget_pendant(d, p)) continue;
    VertexId c = spider_neighbors(d, p)[0];
    if (!d.is_spider(c) || d.vertex(c).plane != Plane::XY) continue;
    if (d.vertex(c).phase.is_pi()) {
      // A pi on the axle flips the gadget angle (up to a global scalar).
      d.vertex(c).phase = Phase::zero();
      d.vertex(p).phase = -d.vertex(p).phase;
    }
    if (d.vertex(p).phase.is_exact() && d.vertex(p).phase.is_zero()) {
      // A zero-phase gadget is a global scalar; drop connector and pendant.
      bool other_pendant = false;
      for (VertexId w : spider_neighbors(d, c))
        if (w != p && is_gadget_pendant(d, w)) other_pendant = true;
      if (!other_pendant && !d.boundary_adjacent(c)) {
        d.remove_vertex(p);
        d.remove_vertex(c);
        ++s.gadget_fusions;
        return true;
      }
    }
    if (!d.vertex(c).phase.is_zero() || !d.vertex(c).phase.is_exact()) continue;
    std::set<VertexId> legs;
    for (VertexId w : spider_neighbors(d, c))
      if (w != p) legs.insert(w);
    if (legs.empty()) continue;
    auto [it, fresh] = seen.emplace(std::move(legs), p);
    if (!fresh) {
      d.vertex(it->second).phase += d.vertex(p).phase;
      d.remove_vertex(p);
      d.remove_vertex(c);
      ++s.gadget_fusions;
      return true;
    }
  }
  return false;
}

bool apply_one_pivot(ZxDiagram& d) {
  for (VertexId u : d.vertex_ids()) {
    if (!is_rewrite_interior(d, u) || d.vertex(u).plane != Plane::XY ||
        !d.vertex(u).phase.is_pauli() || is_gadget_axle(d, u))
      continue;
    for (VertexId w : spider_neighbors(d, u)) {
      if (w < u) continue;  // each edge once
      if (is_rewrite_interior(d, w) && d.vertex(w).plane == Plane::XY &&
          d.vertex(w).phase.is_pauli() && !is_gadget_axle(d, w)) {
        pivot_at(d, u, w);
        return true;
      }
    }
  }
  return false;
}

bool apply_one_lcomp(ZxDiagram& d) {
  for (VertexId v : d.vertex_ids()) {
    if (!is_rewrite_interior(d, v) || d.vertex(v).plane != Plane::XY ||
        !d.vertex(v).phase.is_proper_clifford() || is_gadget_axle(d, v))
      continue;
    // A +-pi/2 donated to an axle would push that gadget out of the YZ plane.
    bool axle_neighbor = false;
    for (auto& [w, t] : d.neighbors(v))
      if (is_gadget_axle(d, w)) axle_neighbor = true;
    if (axle_neighbor) continue;
    local_complement_at(d, v);
    return true;
  }
  return false;
}

bool apply_one_gadget_pivot(ZxDiagram& d) {
  for (VertexId u : d.vertex_ids()) {
    if (!is_rewrite_interior(d, u) || d.vertex(u).plane != Plane::XY ||
        !d.vertex(u).phase.is_pauli() || is_gadget_axle(d, u))
      continue;
    for (VertexId v : spider_neighbors(d, u)) {
      if (!is_rewrite_interior(d, v) || d.vertex(v).plane != Plane::XY ||
          is_gadget_axle(d, v))
        continue;
      if (d.vertex(v).phase.is_clifford()) continue;  // other rules apply
      if (pivot_gadget(d, u, v)) return true;
    }
  }
  return false;
}

}  // namespace

ZxDiagram full_simplify(ZxDiagram d, SimplifyStats* stats) {
  SimplifyStats local;
  SimplifyStats& s = stats ? *stats : local;
  s = SimplifyStats{};
  const int cap = 20 * d.vertex_count() + 100;
  while (s.total() < cap) {
    if (apply_one_identity(d)) {
      ++s.identity_removals;
      continue;
    }
    if (apply_one_gadget_fusion(d, s)) continue;
    if (apply_one_pivot(d)) {
      ++s.pivots;
      continue;
    }
    if (apply_one_lcomp(d)) {
      ++s.local_complementations;
      continue;
    }
    if (apply_one_gadget_pivot(d)) {
      ++s.gadget_pivots;
      continue;
    }
    break;
  }
  return d;
}

}  // namespace gms
