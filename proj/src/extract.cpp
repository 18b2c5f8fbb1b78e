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

#include "gms/extract.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "gms/frontier_lp.hpp"
#include "gms/simplify.hpp"

namespace gms {

GmsBuilder::GmsBuilder(int qubits)
    : qubits_(qubits), barrier_(qubits, false) {}

void GmsBuilder::push_merging_rx(std::vector<Gate>& seg, const Gate& g) {
  if (g.kind == GateKind::RX) {
    for (auto it = seg.rbegin(); it != seg.rend(); ++it) {
      if (!it->acts_on(g.q0)) continue;
      if (it->kind == GateKind::RX && it->q0 == g.q0) {
        it->p0 += g.p0;
        if (it->p0.is_zero()) seg.erase(std::next(it).base());
        return;
      }
      break;
    }
  }
  seg.push_back(g);
}

bool GmsBuilder::qubit_clear(int q) const {
  if (barrier_[q]) return false;
  for (auto& [a, b] : cur_.pairs)
    if (a == q || b == q) return false;
  return true;
}

void GmsBuilder::route_single(const Gate& g) {
  if (g.kind != GateKind::H && g.p0.is_zero()) return;
  if (!cur_.open) {
    push_merging_rx(cur_.mid, g);
    return;
  }
  int q = g.q0;
  bool xx_commuting = g.kind == GateKind::RX;
  bool movable = xx_commuting ? !barrier_[q] : qubit_clear(q);
  if (movable) {
    push_merging_rx(cur_.mid, g);
  } else {
    push_merging_rx(cur_.left, g);
    if (!xx_commuting) barrier_[q] = true;
  }
}

void GmsBuilder::close_round() {
  closed_.push_back(std::move(cur_));
  cur_ = Round{};
  std::fill(barrier_.begin(), barrier_.end(), false);
}

void GmsBuilder::route_xx(int a, int b) {
  if (a > b) std::swap(a, b);
  std::pair<int, int> pr{a, b};
  if (cur_.open && (barrier_[a] || barrier_[b] || cur_.pairs.count(pr)))
    close_round();
  cur_.pairs.insert(pr);
  cur_.open = true;
}

void GmsBuilder::place_block_output_side(const std::vector<Gate>& block) {
  for (auto it = block.rbegin(); it != block.rend(); ++it)
    cur_.mid.push_back(*it);
}

void GmsBuilder::place_block_input_side(const std::vector<Gate>& block) {
  for (auto it = block.rbegin(); it != block.rend(); ++it) {
    cur_.left.push_back(*it);
    for (int q : it->qubits())
      if (q < qubits_) barrier_[q] = true;
  }
}

Circuit GmsBuilder::finish(int qubit_count) const {
  Circuit c(qubit_count);
  auto emit_round = [&c](const Round& r) {
    for (auto it = r.left.rbegin(); it != r.left.rend(); ++it) c.add(*it);
    if (r.open && !r.pairs.empty())
      c.add(Gate::global_ms(GmsLayer(
          Phase::half_pi(),
          std::vector<std::pair<int, int>>(r.pairs.begin(), r.pairs.end()))));
    for (auto it = r.mid.rbegin(); it != r.mid.rend(); ++it) c.add(*it);
  };
  emit_round(cur_);
  for (auto it = closed_.rbegin(); it != closed_.rend(); ++it) emit_round(*it);
  return c;
}

void extract_cnot_layer(const std::vector<Gate>& cnots, GmsBuilder& builder) {
  int k = static_cast<int>(cnots.size());
  auto control_of_prev_on = [&](int l, int q) {
    for (int p = l - 1; p >= 0; --p)
      if (cnots[p].acts_on(q)) return cnots[p].q0 == q;
    return false;
  };
  auto control_of_next_on = [&](int l, int q) {
    for (int p = l + 1; p < k; ++p)
      if (cnots[p].acts_on(q)) return cnots[p].q0 == q;
    return false;
  };
  Phase mhp = -Phase::half_pi();
  for (int l = k - 1; l >= 0; --l) {
    if (cnots[l].kind != GateKind::CNOT)
      throw std::invalid_argument("extract_cnot_layer: non-CNOT gate");
    int i = cnots[l].q0, j = cnots[l].q1;
    if (!control_of_next_on(l, i)) builder.route_single(Gate::h(i));
    builder.route_single(Gate::rx(j, mhp));
    builder.route_single(Gate::rx(i, mhp));
    builder.route_xx(i, j);
    if (!control_of_prev_on(l, i)) builder.route_single(Gate::h(i));
  }
}

namespace {

/// CZ layer over qubit pairs, lowered to one GMS with Hadamard conjugation
/// and RX corrections of -(degree)*pi/2 per touched qubit.
std::vector<Gate> cz_layer_block(
    const std::vector<std::pair<int, int>>& edges) {
  std::map<int, int> deg;
  for (auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  std::vector<Gate> block;
  for (auto& [q, c] : deg) block.push_back(Gate::h(q));
  block.push_back(Gate::global_ms(GmsLayer(Phase::half_pi(), edges)));
  for (auto& [q, c] : deg) {
    Phase corr = Phase::rational(-c, 2);
    if (!corr.is_zero()) block.push_back(Gate::rx(q, corr));
  }
  for (auto& [q, c] : deg) block.push_back(Gate::h(q));
  return block;
}

class Extractor {
 public:
  Extractor(const ZxDiagram& d, const ExtractOptions& opts)
      : d_(d),
        opts_(opts),
        n_(static_cast<int>(d.outputs().size())),
        builder_(n_),
        pending_h_(n_, false) {}

  Circuit run() {
    frontier_.resize(n_);
    for (int q = 0; q < n_; ++q) {
      VertexId o = d_.outputs()[q];
      if (d_.degree(o) != 1)
        throw std::invalid_argument("extract: malformed output boundary");
      frontier_[q] = d_.neighbors(o).begin()->first;
      d_.vertex(frontier_[q]).plane = Plane::XY;
    }
    long max_iters = 10L * d_.vertex_count() + 50;
    for (long iter = 0;; ++iter) {
      if (iter > max_iters)
        throw std::runtime_error("extract: iteration bound exceeded");
      pad_inputs();
      bool a = step_phases_and_czs();
      bool b = step_advance();
      if (a || b) continue;
      if (all_terminal()) break;
      std::vector<Gate> cnots;
      Gf2Matrix m2;
      std::vector<int> rows;
      std::vector<VertexId> cols;
      if (!reduce_frontier(cnots, m2, rows, cols)) {
        if (handle_gadgets()) continue;
        throw std::runtime_error(
            "extract: frontier stuck with no reduction (gflow violation)");
      }
      for (const Gate& g : cnots) {
        flush(g.q0);
        flush(g.q1);
      }
      extract_cnot_layer(cnots, builder_);
      rewire(m2, rows, cols);
    }
    for (int q = 0; q < n_; ++q) flush(q);
    finalize_permutation();
    return builder_.finish(n_);
  }

 private:
  bool is_frontier(VertexId v) const {
    return std::find(frontier_.begin(), frontier_.end(), v) !=
           frontier_.end();
  }

  /// Neighbors of the frontier vertex of qubit q other than its output.
  std::vector<std::pair<VertexId, EdgeType>> left_neighbors(int q) const {
    std::vector<std::pair<VertexId, EdgeType>> out;
    for (auto& [w, t] : d_.neighbors(frontier_[q]))
      if (w != d_.outputs()[q]) out.push_back({w, t});
    return out;
  }

  void flush(int q) {
    if (!pending_h_[q]) return;
    pending_h_[q] = false;
    builder_.route_single(Gate::h(q));
  }

  void pad_inputs() {
    for (int q = 0; q < n_; ++q) {
      VertexId v = frontier_[q];
      VertexId in = -1;
      bool has_spider = false;
      for (auto& [w, t] : left_neighbors(q)) {
        if (d_.is_boundary(w))
          in = w;
        else
          has_spider = true;
      }
      if (in < 0 || !has_spider) continue;
      // Buffer the input wire so the frontier vertex becomes interior and
      // the input never shows up as a biadjacency column. The two inserted
      // Hadamard edges cancel.
      d_.remove_edge(in, v);
      VertexId s1 = d_.add_vertex(VertexKind::Z);
      VertexId s2 = d_.add_vertex(VertexKind::Z);
      d_.add_edge(in, s1, EdgeType::Plain);
      d_.add_edge(s1, s2, EdgeType::Hadamard);
      d_.add_edge(s2, v, EdgeType::Hadamard);
    }
  }

  bool step_phases_and_czs() {
    bool progress = false;
    for (int q = 0; q < n_; ++q) {
      Phase& ph = d_.vertex(frontier_[q]).phase;
      if (ph.is_zero()) continue;
      flush(q);
      builder_.route_single(Gate::rz(q, ph));
      ph = Phase::zero();
      progress = true;
    }
    std::vector<std::pair<int, int>> edges;
    for (int q1 = 0; q1 < n_; ++q1)
      for (int q2 = q1 + 1; q2 < n_; ++q2)
        if (d_.has_edge(frontier_[q1], frontier_[q2])) {
          edges.push_back({q1, q2});
          d_.remove_edge(frontier_[q1], frontier_[q2]);
        }
    if (edges.empty()) return progress;
    for (auto& [a, b] : edges) {
      flush(a);
      flush(b);
    }
    std::vector<std::pair<int, int>> out_edges, in_edges;
    for (auto& [a, b] : edges) {
      if (builder_.qubit_clear(a) && builder_.qubit_clear(b))
        out_edges.push_back({a, b});
      else
        in_edges.push_back({a, b});
    }
    if (!out_edges.empty())
      builder_.place_block_output_side(cz_layer_block(out_edges));
    if (!in_edges.empty())
      builder_.place_block_input_side(cz_layer_block(in_edges));
    return true;
  }

  bool step_advance() {
    bool progress = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int q = 0; q < n_; ++q) {
        VertexId v = frontier_[q];
        if (!d_.vertex(v).phase.is_zero()) continue;
        auto ln = left_neighbors(q);
        if (ln.size() != 1) continue;
        auto [w, t] = ln[0];
        if (d_.is_boundary(w) || is_frontier(w)) continue;
        if (t != EdgeType::Hadamard) continue;
        d_.remove_vertex(v);
        d_.add_edge(d_.outputs()[q], w, EdgeType::Plain);
        frontier_[q] = w;
        d_.vertex(w).plane = Plane::XY;
        pending_h_[q] = !pending_h_[q];
        changed = progress = true;
      }
    }
    return progress;
  }

  bool all_terminal() const {
    for (int q = 0; q < n_; ++q) {
      auto ln = left_neighbors(q);
      if (ln.size() != 1 || !d_.is_boundary(ln[0].first)) return false;
    }
    return true;
  }

  bool reduce_frontier(std::vector<Gate>& cnots, Gf2Matrix& m2,
                       std::vector<int>& rows, std::vector<VertexId>& cols) {
    std::vector<char> seen(d_.next_vertex_id(), false);
    for (int q = 0; q < n_; ++q)
      for (auto& [w, t] : left_neighbors(q)) {
        if (d_.is_boundary(w)) continue;
        if (!seen[w]) {
          seen[w] = true;
          cols.push_back(w);
        }
      }
    std::sort(cols.begin(), cols.end());
    std::map<VertexId, int> col_of;
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
      col_of[cols[c]] = c;
    for (int q = 0; q < n_; ++q) {
      bool active = false;
      for (auto& [w, t] : left_neighbors(q))
        if (!d_.is_boundary(w)) active = true;
      if (active) rows.push_back(q);
    }
    if (rows.empty()) return false;
    Gf2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int r = 0; r < m.rows(); ++r)
      for (auto& [w, t] : left_neighbors(rows[r]))
        if (!d_.is_boundary(w)) m.set(r, col_of[w], true);
    if (opts_.strategy == Strategy::Patel) {
      int block = std::max(
          1, static_cast<int>(std::log2(std::max(2, m.cols()))) / 2);
      GaussResult gr = gauss_reduce_blocked(m, block);
      bool any_unit = false;
      for (int r = 0; r < gr.reduced.rows(); ++r)
        if (gr.reduced.row_weight(r) == 1) any_unit = true;
      if (!any_unit || gr.ops.empty()) return false;
      for (auto it = gr.ops.rbegin(); it != gr.ops.rend(); ++it)
        cnots.push_back(Gate::cnot(rows[it->first], rows[it->second]));
      m2 = std::move(gr.reduced);
      // Only frontiers that a round actually reduced are traced; gadget
      // rounds see the same frontier again after rewriting.
      if (opts_.frontier_trace) opts_.frontier_trace->push_back(m);
      return true;
    }

    FrontierReduction red;
    try {
      bool solved = false;
      if (opts_.strategy == Strategy::Lp && m.rows() <= opts_.lp_max_size) {
        auto r = solve_exact(encode(m), opts_.lp_node_budget);
        if (r) {
          red = std::move(*r);
          solved = true;
        }
      }
      if (!solved) red = fanout_fallback(m);
    } catch (const std::runtime_error&) {
      return false;
    }
    for (const Gate& g : reduction_to_cnots(red))
      cnots.push_back(Gate::cnot(rows[g.q0], rows[g.q1]));
    m2 = red.g.multiply(m);
    if (opts_.frontier_trace) opts_.frontier_trace->push_back(m);
    return true;
  }

  void rewire(const Gf2Matrix& m2, const std::vector<int>& rows,
              const std::vector<VertexId>& cols) {
    for (int r = 0; r < m2.rows(); ++r) {
      VertexId f = frontier_[rows[r]];
      for (int c = 0; c < m2.cols(); ++c) {
        bool want = m2.get(r, c);
        bool have = d_.has_edge(f, cols[c]);
        if (want == have) continue;
        if (want)
          d_.add_edge(f, cols[c], EdgeType::Hadamard);
        else
          d_.remove_edge(f, cols[c]);
      }
    }
    for (VertexId c : cols) {
      if (d_.degree(c) == 0) {
        d_.remove_vertex(c);  // fully disconnected spider, a global scalar
        continue;
      }
      VertexData& vd = d_.vertex(c);
      if (vd.plane == Plane::YZ && d_.degree(c) != 1) vd.plane = Plane::XY;
    }
  }

  bool handle_gadgets() {
    for (int q = 0; q < n_; ++q) {
      VertexId v = frontier_[q];
      if (!d_.vertex(v).phase.is_zero()) continue;
      for (auto& [w, t] : left_neighbors(q)) {
        if (d_.is_boundary(w) || !d_.vertex(w).phase.is_pauli()) continue;
        bool is_axle = false;
        for (auto& [p, tp] : d_.neighbors(w))
          if (d_.is_spider(p) && d_.vertex(p).plane == Plane::YZ &&
              d_.degree(p) == 1)
            is_axle = true;
        if (!is_axle) continue;
        flush(q);
        // Unfuse the frontier vertex behind a cancelling Hadamard-edge
        // pair so it becomes interior, then pivot it with the gadget's
        // connector; the pendant phase becomes extractable.
        d_.remove_edge(d_.outputs()[q], v);
        VertexId s2 = d_.add_vertex(VertexKind::Z);
        VertexId s1 = d_.add_vertex(VertexKind::Z);
        d_.add_edge(d_.outputs()[q], s2, EdgeType::Plain);
        d_.add_edge(s2, s1, EdgeType::Hadamard);
        d_.add_edge(s1, v, EdgeType::Hadamard);
        frontier_[q] = s2;
        pivot_at(d_, v, w);
        for (VertexId x : d_.vertex_ids()) {
          VertexData& vd = d_.vertex(x);
          if (vd.plane == Plane::YZ && !(d_.is_spider(x) && d_.degree(x) == 1))
            vd.plane = Plane::XY;
        }
        return true;
      }
    }
    return false;
  }

  void finalize_permutation() {
    Gf2Matrix perm(n_, n_);
    std::map<VertexId, int> input_index;
    for (int p = 0; p < static_cast<int>(d_.inputs().size()); ++p)
      input_index[d_.inputs()[p]] = p;
    for (int q = 0; q < n_; ++q) {
      auto ln = left_neighbors(q);
      if (ln.size() != 1 || !input_index.count(ln[0].first))
        throw std::runtime_error("extract: residual map is not a wiring");
      perm.set(q, input_index[ln[0].first], true);
    }
    if (perm == Gf2Matrix::identity(n_)) return;
    std::vector<std::pair<int, int>> ops = patel_markov_hayes(perm);
    std::vector<Gate> cnots;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
      cnots.push_back(Gate::cnot(it->second, it->first));
    extract_cnot_layer(cnots, builder_);
  }

  ZxDiagram d_;
  ExtractOptions opts_;
  int n_;
  GmsBuilder builder_;
  std::vector<char> pending_h_;
  std::vector<VertexId> frontier_;
};

}  // namespace

Circuit extract_circuit(const ZxDiagram& d, const ExtractOptions& opts) {
  if (opts.strategy == Strategy::Naive)
    throw std::invalid_argument("extract_circuit: naive bypasses extraction");
  Extractor ex(d, opts);
  return ex.run();
}

}  // namespace gms
