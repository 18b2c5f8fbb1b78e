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

#include "gms/frontier_lp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gms {

namespace {

Gf2Matrix multiply_gm(const Gf2Matrix& g, const Gf2Matrix& m) {
  return g.multiply(m);
}

std::vector<int> unit_rows(const Gf2Matrix& x) {
  std::vector<int> out;
  for (int r = 0; r < x.rows(); ++r)
    if (x.row_weight(r) == 1) out.push_back(r);
  return out;
}

int offdiag_count(const Gf2Matrix& g) {
  int c = 0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (i != j && g.get(i, j)) ++c;
  return c;
}

FrontierReduction make_reduction(Gf2Matrix g, const Gf2Matrix& m) {
  FrontierReduction r;
  Gf2Matrix x = multiply_gm(g, m);
  r.extractable_rows = unit_rows(x);
  r.cnot_count = offdiag_count(g);
  r.objective =
      m.rows() * static_cast<int>(r.extractable_rows.size()) - r.cnot_count;
  r.g = std::move(g);
  return r;
}

}  // namespace

LpInstance encode(const Gf2Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw std::invalid_argument("encode: empty frontier matrix");
  LpInstance inst;
  inst.m = m;
  inst.n = m.rows();
  inst.cols = m.cols();
  return inst;
}

std::optional<int> LpInstance::evaluate(const Gf2Matrix& g) const {
  if (g.rows() != n || g.cols() != n) return std::nullopt;
  // (10): unit diagonal.
  for (int i = 0; i < n; ++i)
    if (!g.get(i, i)) return std::nullopt;
  // x = GM via the integer sums of (9), with t in the range of (5)-(6)
  // and x binary per (7)-(8).
  std::vector<std::vector<int>> x(n, std::vector<int>(cols));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols; ++j) {
      int sum = 0;
      for (int l = 0; l < n; ++l)
        if (g.get(i, l) && m.get(l, j)) ++sum;
      int xij = sum % 2;
      int tij = (sum - xij) / 2;
      if (tij < 0 || tij > n / 2) return std::nullopt;
      x[i][j] = xij;
    }
  // (2)-(4): y_i = 0 iff row i of X has weight exactly 1; z = 1 - y.
  // A zero row admits no valid y and makes the instance infeasible.
  std::vector<int> z(n);
  int zsum = 0;
  for (int i = 0; i < n; ++i) {
    int w = 0;
    for (int j = 0; j < cols; ++j) w += x[i][j];
    if (w == 0) return std::nullopt;
    z[i] = w == 1 ? 1 : 0;
    int y = 1 - z[i];
    if (!(w - 1 >= y && w - 1 <= cols * y)) return std::nullopt;
    zsum += z[i];
  }
  // (1): at least one extractable row.
  if (zsum < 1) return std::nullopt;
  // (11)-(13): k[l] = 1 iff row l of G has no off-diagonal entries, and
  // G[i][l] = 1 for i != l forces k[l] = 1 (row-exclusion).
  for (int l = 0; l < n; ++l) {
    int clean = 1;
    for (int p = 0; p < n; ++p)
      if (p != l && g.get(l, p)) clean = 0;
    for (int i = 0; i < n; ++i)
      if (i != l && g.get(i, l) && !clean) return std::nullopt;
  }
  return n * zsum - offdiag_count(g);
}

std::string LpInstance::dump() const {
  std::ostringstream os;
  os << "maximize sum_i " << n << "*z_i - c\n";
  os << "s.t. sum_i z_i >= 1\n";
  for (int i = 0; i < n; ++i) {
    os << "  sum_j x_" << i << "j - 1 >= y_" << i << "\n";
    os << "  sum_j x_" << i << "j - 1 <= " << cols << "*y_" << i << "\n";
    os << "  y_" << i << " + z_" << i << " = 1\n";
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols; ++j) {
      os << "  x_" << i << "_" << j << " = ";
      bool first = true;
      for (int l = 0; l < n; ++l)
        if (m.get(l, j)) {
          os << (first ? "" : " + ") << "G_" << i << "_" << l;
          first = false;
        }
      if (first) os << "0";
      os << " - 2*t_" << i << "_" << j << ",  0 <= t <= " << n / 2
         << ", x in {0,1}\n";
    }
  for (int i = 0; i < n; ++i) os << "  G_" << i << "_" << i << " = 1\n";
  for (int l = 0; l < n; ++l) {
    os << "  k_" << l << " <= 1 - G_" << l << "_p  (p != " << l << ")\n";
    os << "  k_" << l << " >= sum_{p != " << l << "} (1 - G_" << l
       << "_p) - " << n - 2 << "\n";
  }
  os << "  (1 - G_i_l) + k_l >= 1  (i != l)\n";
  os << "  c = sum_{i != l} G_i_l\n";
  return os.str();
}

bool reduction_is_valid(const FrontierReduction& r, const Gf2Matrix& m) {
  const Gf2Matrix& g = r.g;
  if (g.rows() != m.rows() || g.cols() != m.rows()) return false;
  for (int i = 0; i < g.rows(); ++i)
    if (!g.get(i, i)) return false;
  for (int l = 0; l < g.rows(); ++l) {
    bool clean = true;
    for (int p = 0; p < g.cols(); ++p)
      if (p != l && g.get(l, p)) clean = false;
    if (clean) continue;
    for (int i = 0; i < g.rows(); ++i)
      if (i != l && g.get(i, l)) return false;
  }
  if (r.cnot_count != offdiag_count(g)) return false;
  Gf2Matrix x = g.multiply(m);
  if (r.extractable_rows != unit_rows(x)) return false;
  if (r.objective !=
      m.rows() * static_cast<int>(r.extractable_rows.size()) - r.cnot_count)
    return false;
  return !r.extractable_rows.empty();
}

namespace {

struct SearchState {
  const Gf2Matrix* m;
  int n;
  long nodes = 0;
  long budget;
  bool exhausted = false;
  bool found = false;
  FrontierReduction best;

  bool better(const FrontierReduction& a, const FrontierReduction& b) const {
    if (a.objective != b.objective) return a.objective > b.objective;
    if (a.cnot_count != b.cnot_count) return a.cnot_count < b.cnot_count;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.g.get(i, j) != b.g.get(i, j)) return !a.g.get(i, j);
    return false;
  }

  // Off-diagonal positions in ascending row-major order.
  int pos_count() const { return n * (n - 1); }
  std::pair<int, int> pos(int k) const {
    int i = k / (n - 1);
    int j = k % (n - 1);
    if (j >= i) ++j;
    return {i, j};
  }

  void dfs(Gf2Matrix& g, std::vector<bool>& dirty, std::vector<bool>& added,
           int k, int c) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    // Everything still open could stay 0, so the objective can reach at
    // most n * n - c from here.
    if (found && n * n - c < best.objective) return;
    if (k == pos_count()) {
      FrontierReduction cand = make_reduction(g, *m);
      if (cand.extractable_rows.empty()) return;
      if (!found || better(cand, best)) {
        best = std::move(cand);
        found = true;
      }
      return;
    }
    auto [i, j] = pos(k);
    // 1-branch first: G[i][j] = 1 needs row i usable as a modified row
    // (nobody adds row i elsewhere) and row j clean of off-diagonals.
    if (!added[i] && !dirty[j]) {
      bool was_added_j = added[j];
      g.set(i, j, true);
      dirty[i] = true;
      added[j] = true;
      dfs(g, dirty, added, k + 1, c + 1);
      g.set(i, j, false);
      added[j] = was_added_j;
      // dirty[i] may still hold from earlier entries of row i.
      bool still_dirty = false;
      for (int l = 0; l < n; ++l)
        if (l != i && g.get(i, l)) still_dirty = true;
      dirty[i] = still_dirty;
    }
    dfs(g, dirty, added, k + 1, c);
  }
};

}  // namespace

std::optional<FrontierReduction> solve_exact(const LpInstance& inst,
                                             long node_budget) {
  SearchState st;
  st.m = &inst.m;
  st.n = inst.n;
  st.budget = node_budget;
  Gf2Matrix g = Gf2Matrix::identity(inst.n);
  std::vector<bool> dirty(inst.n, false), added(inst.n, false);
  st.dfs(g, dirty, added, 0, 0);
  if (st.exhausted) return std::nullopt;
  if (!st.found)
    throw std::runtime_error(
        "solve_exact: no feasible commuting-CNOT layer (degenerate frontier)");
  return st.best;
}

FrontierReduction fanout_fallback(const Gf2Matrix& m) {
  // One candidate per reachable column: the lowest row of the solving set
  // receives the xor of the others (a fanout controlled by that row).
  // The best candidate by objective wins; ties go to fewer CNOTs, then to
  // the lowest column index.
  std::optional<FrontierReduction> best;
  for (int col = 0; col < m.cols(); ++col) {
    auto s = solve_unit_vector(m, col);
    if (!s) continue;
    int target = *s->begin();
    Gf2Matrix g = Gf2Matrix::identity(m.rows());
    for (int row : *s)
      if (row != target) g.set(target, row, true);
    FrontierReduction cand = make_reduction(std::move(g), m);
    if (cand.extractable_rows.empty()) continue;
    if (!best || cand.objective > best->objective ||
        (cand.objective == best->objective &&
         cand.cnot_count < best->cnot_count))
      best = std::move(cand);
  }
  if (!best)
    throw std::runtime_error(
        "fanout_fallback: no frontier row combination yields a unit vector "
        "(gflow violation)");
  return *best;
}

std::vector<Gate> reduction_to_cnots(const FrontierReduction& r) {
  const Gf2Matrix& g = r.g;
  std::vector<bool> control(g.rows(), false), target(g.rows(), false);
  std::vector<Gate> out;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (i != j && g.get(i, j)) {
        control[i] = true;
        target[j] = true;
        out.push_back(Gate::cnot(i, j));
      }
  for (int q = 0; q < g.rows(); ++q)
    if (control[q] && target[q])
      throw std::runtime_error(
          "reduction_to_cnots: non-commuting layer (qubit is both control "
          "and target)");
  return out;
}

}  // namespace gms
