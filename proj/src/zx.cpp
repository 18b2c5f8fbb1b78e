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

#include "gms/zx.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gms {

VertexId ZxDiagram::add_vertex(VertexKind kind, Phase phase, Plane plane) {
  VertexId v = static_cast<VertexId>(verts_.size());
  verts_.push_back(VertexData{kind, phase, plane});
  adj_.emplace_back();
  return v;
}

void ZxDiagram::remove_vertex(VertexId v) {
  if (!has_vertex(v)) throw std::out_of_range("remove_vertex: no such vertex");
  for (auto& [w, t] : adj_[v]) adj_[w].erase(v);
  adj_[v].clear();
  verts_[v].reset();
}

bool ZxDiagram::has_vertex(VertexId v) const {
  return v >= 0 && v < static_cast<int>(verts_.size()) && verts_[v].has_value();
}

VertexData& ZxDiagram::vertex(VertexId v) {
  if (!has_vertex(v)) throw std::out_of_range("vertex: no such vertex");
  return *verts_[v];
}

const VertexData& ZxDiagram::vertex(VertexId v) const {
  if (!has_vertex(v)) throw std::out_of_range("vertex: no such vertex");
  return *verts_[v];
}

void ZxDiagram::add_edge(VertexId u, VertexId v, EdgeType t) {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::out_of_range("add_edge: no such vertex");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (adj_[u].count(v)) throw std::invalid_argument("add_edge: edge exists");
  adj_[u][v] = t;
  adj_[v][u] = t;
  // A phase-gadget tag only makes sense on a degree-1 vertex.
  for (VertexId x : {u, v})
    if (verts_[x]->plane == Plane::YZ && degree(x) > 1)
      verts_[x]->plane = Plane::XY;
}

void ZxDiagram::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: no edge");
  adj_[u].erase(v);
  adj_[v].erase(u);
}

bool ZxDiagram::has_edge(VertexId u, VertexId v) const {
  return has_vertex(u) && has_vertex(v) && adj_[u].count(v) > 0;
}

EdgeType ZxDiagram::edge_type(VertexId u, VertexId v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("edge_type: no edge");
  return adj_[u].at(v);
}

void ZxDiagram::set_edge_type(VertexId u, VertexId v, EdgeType t) {
  if (!has_edge(u, v)) throw std::invalid_argument("set_edge_type: no edge");
  adj_[u][v] = t;
  adj_[v][u] = t;
}

void ZxDiagram::toggle_hadamard_edge(VertexId u, VertexId v) {
  if (has_edge(u, v)) {
    if (edge_type(u, v) != EdgeType::Hadamard)
      throw std::invalid_argument("toggle_hadamard_edge: plain edge present");
    remove_edge(u, v);
  } else {
    add_edge(u, v, EdgeType::Hadamard);
  }
}

const std::map<VertexId, EdgeType>& ZxDiagram::neighbors(VertexId v) const {
  if (!has_vertex(v)) throw std::out_of_range("neighbors: no such vertex");
  return adj_[v];
}

int ZxDiagram::degree(VertexId v) const {
  return static_cast<int>(neighbors(v).size());
}

bool ZxDiagram::is_boundary(VertexId v) const {
  return vertex(v).kind == VertexKind::Boundary;
}

bool ZxDiagram::is_interior(VertexId v) const {
  return is_spider(v) && !boundary_adjacent(v);
}

bool ZxDiagram::boundary_adjacent(VertexId v) const {
  for (auto& [w, t] : neighbors(v))
    if (is_boundary(w)) return true;
  return false;
}

std::vector<VertexId> ZxDiagram::vertex_ids() const {
  std::vector<VertexId> ids;
  for (int v = 0; v < static_cast<int>(verts_.size()); ++v)
    if (verts_[v].has_value()) ids.push_back(v);
  return ids;
}

int ZxDiagram::vertex_count() const {
  return static_cast<int>(vertex_ids().size());
}

std::string ZxDiagram::dump() const {
  std::ostringstream os;
  os << "inputs:";
  for (VertexId v : inputs_) os << ' ' << v;
  os << "\noutputs:";
  for (VertexId v : outputs_) os << ' ' << v;
  os << '\n';
  for (VertexId v : vertex_ids()) {
    const VertexData& d = vertex(v);
    os << v << ": ";
    switch (d.kind) {
      case VertexKind::Boundary: os << 'B'; break;
      case VertexKind::Z: os << "Z(" << d.phase.str() << ')'; break;
      case VertexKind::X: os << "X(" << d.phase.str() << ')'; break;
    }
    if (d.plane == Plane::YZ) os << " YZ";
    if (d.plane == Plane::XZ) os << " XZ";
    os << " [";
    bool first = true;
    for (auto& [w, t] : neighbors(v)) {
      if (!first) os << ' ';
      first = false;
      os << w << (t == EdgeType::Hadamard ? 'H' : 'P');
    }
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Circuit translation.

namespace {

struct WireState {
  std::vector<VertexId> cur;
  std::vector<bool> pending_h;
};

void attach(ZxDiagram& d, WireState& w, int q, VertexId v) {
  d.add_edge(w.cur[q], v,
             w.pending_h[q] ? EdgeType::Hadamard : EdgeType::Plain);
  w.cur[q] = v;
  w.pending_h[q] = false;
}

VertexId wire_z(ZxDiagram& d, WireState& w, int q, Phase p) {
  VertexId v = d.add_vertex(VertexKind::Z, p);
  attach(d, w, q, v);
  return v;
}

void lower_gate(ZxDiagram& d, WireState& w, const Gate& g);

void lower_rz(ZxDiagram& d, WireState& w, int q, Phase p) {
  wire_z(d, w, q, p);
}

void lower_rx(ZxDiagram& d, WireState& w, int q, Phase p) {
  w.pending_h[q] = !w.pending_h[q];
  wire_z(d, w, q, p);
  w.pending_h[q] = !w.pending_h[q];
}

void lower_xx(ZxDiagram& d, WireState& w, int a, int b, Phase alpha) {
  // XX(alpha) = (H x H) ZZ(alpha) (H x H); ZZ is a phase gadget.
  w.pending_h[a] = !w.pending_h[a];
  w.pending_h[b] = !w.pending_h[b];
  VertexId za = wire_z(d, w, a, Phase::zero());
  VertexId zb = wire_z(d, w, b, Phase::zero());
  VertexId c = d.add_vertex(VertexKind::X);
  VertexId p = d.add_vertex(VertexKind::Z, alpha, Plane::YZ);
  d.add_edge(c, za, EdgeType::Plain);
  d.add_edge(c, zb, EdgeType::Plain);
  d.add_edge(c, p, EdgeType::Plain);
  w.pending_h[a] = !w.pending_h[a];
  w.pending_h[b] = !w.pending_h[b];
}

void lower_gate(ZxDiagram& d, WireState& w, const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      w.pending_h[g.q0] = !w.pending_h[g.q0];
      break;
    case GateKind::RZ:
      lower_rz(d, w, g.q0, g.p0);
      break;
    case GateKind::RX:
      lower_rx(d, w, g.q0, g.p0);
      break;
    case GateKind::R:
      lower_rz(d, w, g.q0, -g.p1);
      lower_rx(d, w, g.q0, g.p0);
      lower_rz(d, w, g.q0, g.p1);
      break;
    case GateKind::Z:
      lower_rz(d, w, g.q0, Phase::pi());
      break;
    case GateKind::X:
      lower_rx(d, w, g.q0, Phase::pi());
      break;
    case GateKind::S:
      lower_rz(d, w, g.q0, Phase::half_pi());
      break;
    case GateKind::Sdg:
      lower_rz(d, w, g.q0, -Phase::half_pi());
      break;
    case GateKind::T:
      lower_rz(d, w, g.q0, Phase::rational(1, 4));
      break;
    case GateKind::Tdg:
      lower_rz(d, w, g.q0, Phase::rational(-1, 4));
      break;
    case GateKind::CNOT: {
      VertexId zc = wire_z(d, w, g.q0, Phase::zero());
      VertexId xt = d.add_vertex(VertexKind::X);
      attach(d, w, g.q1, xt);
      d.add_edge(zc, xt, EdgeType::Plain);
      break;
    }
    case GateKind::CZ: {
      VertexId za = wire_z(d, w, g.q0, Phase::zero());
      VertexId zb = wire_z(d, w, g.q1, Phase::zero());
      d.add_edge(za, zb, EdgeType::Hadamard);
      break;
    }
    case GateKind::XX:
      lower_xx(d, w, g.q0, g.q1, g.p0);
      break;
    case GateKind::SWAP:
      lower_gate(d, w, Gate::cnot(g.q0, g.q1));
      lower_gate(d, w, Gate::cnot(g.q1, g.q0));
      lower_gate(d, w, Gate::cnot(g.q0, g.q1));
      break;
    case GateKind::GMS:
      for (auto& pr : g.gms.pairs)
        lower_xx(d, w, pr.first, pr.second, g.gms.angle);
      break;
  }
}

}  // namespace

ZxDiagram circuit_to_diagram(const Circuit& c) {
  c.validate();
  ZxDiagram d;
  WireState w;
  w.cur.resize(c.qubit_count);
  w.pending_h.assign(c.qubit_count, false);
  for (int q = 0; q < c.qubit_count; ++q) {
    VertexId b = d.add_vertex(VertexKind::Boundary);
    d.inputs().push_back(b);
    w.cur[q] = b;
  }
  for (const Gate& g : c.gates) lower_gate(d, w, g);
  for (int q = 0; q < c.qubit_count; ++q) {
    VertexId b = d.add_vertex(VertexKind::Boundary);
    d.outputs().push_back(b);
    attach(d, w, q, b);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Graph-like normalization.

namespace {

struct EdgeCnt {
  int plain = 0;
  int had = 0;
};

// Multigraph scratch copy used only inside to_graph_like.
struct MultiGraph {
  std::vector<std::optional<VertexData>> vd;
  std::vector<std::map<int, EdgeCnt>> adj;
  std::vector<int> inputs, outputs;

  bool is_boundary(int v) const { return vd[v]->kind == VertexKind::Boundary; }

  // Adds edges, resolving self-loops immediately: a plain loop on a Z-spider
  // is dropped, a Hadamard loop adds pi to its phase.
  void add(int u, int v, int plain, int had) {
    if (u == v) {
      if (had % 2) vd[u]->phase = vd[u]->phase + Phase::pi();
      return;
    }
    adj[u][v].plain += plain;
    adj[u][v].had += had;
    adj[v][u] = adj[u][v];
  }
};

// Merge spider v into spider u: phases add, v's edges transfer.
void fuse_into(MultiGraph& g, int u, int v) {
  g.vd[u]->phase = g.vd[u]->phase + g.vd[v]->phase;
  g.vd[u]->plane = Plane::XY;
  EdgeCnt link = g.adj[u][v];
  g.adj[u].erase(v);
  g.adj[v].erase(u);
  // One plain edge is consumed by the fusion; the rest become loops.
  g.add(u, u, 0, link.had);
  for (auto& [w, cnt] : g.adj[v]) {
    g.adj[w].erase(v);
    g.add(u, w, cnt.plain, cnt.had);
  }
  g.adj[v].clear();
  g.vd[v].reset();
}

}  // namespace

ZxDiagram to_graph_like(const ZxDiagram& d) {
  MultiGraph g;
  int n0 = d.next_vertex_id();
  g.vd.resize(n0);
  g.adj.resize(n0);
  for (VertexId v : d.vertex_ids()) g.vd[v] = d.vertex(v);
  for (VertexId v : d.vertex_ids())
    for (auto& [w, t] : d.neighbors(v))
      if (v < w)
        g.add(v, w, t == EdgeType::Plain ? 1 : 0,
              t == EdgeType::Hadamard ? 1 : 0);
  g.inputs = d.inputs();
  g.outputs = d.outputs();

  // Color change: turn every X-spider into a Z-spider, toggling the type of
  // each incident edge. An edge with X-spiders at both ends is unchanged.
  for (int v = 0; v < n0; ++v) {
    if (!g.vd[v]) continue;
    bool vx = g.vd[v]->kind == VertexKind::X;
    for (auto& [w, cnt] : g.adj[v]) {
      if (w < v) continue;
      bool wx = g.vd[w]->kind == VertexKind::X;
      if (vx != wx) {
        std::swap(cnt.plain, cnt.had);
        g.adj[w][v] = cnt;
      }
    }
  }
  for (int v = 0; v < n0; ++v)
    if (g.vd[v] && g.vd[v]->kind == VertexKind::X) g.vd[v]->kind = VertexKind::Z;

  // Fuse along plain spider-spider edges until none remain.
  std::vector<int> work;
  for (int v = 0; v < n0; ++v)
    if (g.vd[v]) work.push_back(v);
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    if (!g.vd[u] || g.is_boundary(u)) continue;
    bool again = true;
    while (again) {
      again = false;
      for (auto& [w, cnt] : g.adj[u]) {
        if (cnt.plain > 0 && !g.is_boundary(w)) {
          int keep = std::min(u, w), gone = std::max(u, w);
          fuse_into(g, keep, gone);
          if (keep != u) work.push_back(keep);
          u = keep;
          again = true;
          break;
        }
      }
    }
  }

  // Parallel Hadamard edges between spiders cancel pairwise.
  for (int v = 0; v < static_cast<int>(g.vd.size()); ++v) {
    if (!g.vd[v] || g.is_boundary(v)) continue;
    std::vector<int> drop;
    for (auto& [w, cnt] : g.adj[v]) {
      if (g.is_boundary(w) || w < v) continue;
      cnt.had %= 2;
      g.adj[w][v].had = cnt.had;
      if (cnt.plain == 0 && cnt.had == 0) drop.push_back(w);
    }
    for (int w : drop) {
      g.adj[v].erase(w);
      g.adj[w].erase(v);
    }
  }

  // Emit a simple diagram. Ids are compacted in ascending order of the
  // surviving multigraph ids so repeated normalization is stable.
  ZxDiagram out;
  std::vector<int> remap(g.vd.size(), -1);
  for (int v = 0; v < static_cast<int>(g.vd.size()); ++v) {
    if (!g.vd[v]) continue;
    remap[v] = out.add_vertex(g.vd[v]->kind, g.vd[v]->phase, g.vd[v]->plane);
  }
  for (int v = 0; v < static_cast<int>(g.vd.size()); ++v) {
    if (!g.vd[v]) continue;
    for (auto& [w, cnt] : g.adj[v]) {
      if (w < v) continue;
      if (cnt.plain + cnt.had == 0) continue;
      if (cnt.plain > 0 && cnt.had > 0)
        throw std::logic_error("to_graph_like: mixed multi-edge survived");
      if (cnt.plain > 1 || cnt.had > 1)
        throw std::logic_error("to_graph_like: parallel edge survived");
      out.add_edge(remap[v], remap[w],
                   cnt.plain ? EdgeType::Plain : EdgeType::Hadamard);
    }
  }
  for (int b : g.inputs) out.inputs().push_back(remap[b]);
  for (int b : g.outputs) out.outputs().push_back(remap[b]);

  // Boundary repair. First split bare boundary-boundary wires.
  for (VertexId b : out.vertex_ids()) {
    if (!out.is_boundary(b)) continue;
    if (out.degree(b) != 1) continue;
    VertexId c = out.neighbors(b).begin()->first;
    if (c <= b || !out.is_boundary(c)) continue;
    EdgeType t = out.edge_type(b, c);
    out.remove_edge(b, c);
    VertexId s1 = out.add_vertex(VertexKind::Z);
    VertexId s2 = out.add_vertex(VertexKind::Z);
    out.add_edge(b, s1, EdgeType::Plain);
    out.add_edge(s1, s2, EdgeType::Hadamard);
    if (t == EdgeType::Plain) {
      VertexId s3 = out.add_vertex(VertexKind::Z);
      out.add_edge(s2, s3, EdgeType::Hadamard);
      out.add_edge(s3, c, EdgeType::Plain);
    } else {
      out.add_edge(s2, c, EdgeType::Plain);
    }
  }
  // Buffer any Hadamard boundary edge through a fresh spider.
  for (VertexId b : out.vertex_ids()) {
    if (!out.is_boundary(b)) continue;
    VertexId v = out.neighbors(b).begin()->first;
    if (out.edge_type(b, v) != EdgeType::Hadamard) continue;
    out.remove_edge(b, v);
    VertexId w = out.add_vertex(VertexKind::Z);
    out.add_edge(b, w, EdgeType::Plain);
    out.add_edge(w, v, EdgeType::Hadamard);
  }
  // Detach extra boundaries from spiders touching more than one.
  for (VertexId v : out.vertex_ids()) {
    if (!out.is_spider(v)) continue;
    std::vector<VertexId> bs;
    for (auto& [w, t] : out.neighbors(v))
      if (out.is_boundary(w)) bs.push_back(w);
    for (size_t i = 1; i < bs.size(); ++i) {
      VertexId b = bs[i];
      out.remove_edge(b, v);
      VertexId w1 = out.add_vertex(VertexKind::Z);
      VertexId w2 = out.add_vertex(VertexKind::Z);
      out.add_edge(b, w1, EdgeType::Plain);
      out.add_edge(w1, w2, EdgeType::Hadamard);
      out.add_edge(w2, v, EdgeType::Hadamard);
    }
  }

  // A phase-gadget tag survives only on degree-1 interior spiders.
  for (VertexId v : out.vertex_ids()) {
    VertexData& vd = out.vertex(v);
    if (vd.plane == Plane::YZ && !(out.is_spider(v) && out.degree(v) == 1))
      vd.plane = Plane::XY;
  }
  return out;
}

std::vector<std::string> validate_graph_like(const ZxDiagram& d) {
  std::vector<std::string> errs;
  auto err = [&errs](const std::string& s) { errs.push_back(s); };
  for (VertexId v : d.vertex_ids()) {
    const VertexData& vd = d.vertex(v);
    if (vd.kind == VertexKind::X)
      err("X-spider present: " + std::to_string(v));
    if (vd.plane == Plane::XZ)
      err("XZ-plane vertex present: " + std::to_string(v));
    if (vd.plane == Plane::YZ && d.degree(v) != 1)
      err("gadget tag on vertex of degree != 1: " + std::to_string(v));
    if (vd.kind == VertexKind::Boundary) {
      if (d.degree(v) != 1) {
        err("boundary with degree != 1: " + std::to_string(v));
        continue;
      }
      auto [w, t] = *d.neighbors(v).begin();
      if (d.is_boundary(w))
        err("boundary wired straight to boundary: " + std::to_string(v));
      if (t != EdgeType::Plain)
        err("boundary attached by Hadamard edge: " + std::to_string(v));
    } else {
      int nb = 0;
      for (auto& [w, t] : d.neighbors(v)) {
        if (d.is_boundary(w)) {
          ++nb;
          continue;
        }
        if (t != EdgeType::Plain) continue;
        if (v < w) err("plain edge between spiders: " + std::to_string(v) +
                       "-" + std::to_string(w));
      }
      if (nb > 1)
        err("spider touching multiple boundaries: " + std::to_string(v));
    }
  }
  std::vector<VertexId> io = d.inputs();
  io.insert(io.end(), d.outputs().begin(), d.outputs().end());
  std::vector<VertexId> io_sorted = io;
  std::sort(io_sorted.begin(), io_sorted.end());
  if (std::adjacent_find(io_sorted.begin(), io_sorted.end()) != io_sorted.end())
    err("vertex listed twice in inputs/outputs");
  for (VertexId v : io)
    if (!d.has_vertex(v) || !d.is_boundary(v))
      err("input/output entry is not a live boundary: " + std::to_string(v));
  int nbound = 0;
  for (VertexId v : d.vertex_ids())
    if (d.is_boundary(v)) ++nbound;
  if (nbound != static_cast<int>(io.size()))
    err("boundary vertex missing from inputs/outputs");
  return errs;
}

}  // namespace gms
