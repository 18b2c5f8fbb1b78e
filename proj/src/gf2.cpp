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

#include "gms/gf2.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gms {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Gf2Matrix: bad shape");
  bits_.assign(static_cast<size_t>(rows_) * words_per_row_, 0);
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Gf2Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Gf2Matrix: ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

bool Gf2Matrix::get(int r, int c) const {
  return (bits_[static_cast<size_t>(r) * words_per_row_ + c / 64] >>
          (c % 64)) & 1;
}

void Gf2Matrix::set(int r, int c, bool v) {
  auto& w = bits_[static_cast<size_t>(r) * words_per_row_ + c / 64];
  std::uint64_t mask = std::uint64_t(1) << (c % 64);
  if (v)
    w |= mask;
  else
    w &= ~mask;
}

void Gf2Matrix::row_add(int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= rows_ || j >= rows_)
    throw std::out_of_range("row_add: bad row index");
  auto* ri = &bits_[static_cast<size_t>(i) * words_per_row_];
  auto* rj = &bits_[static_cast<size_t>(j) * words_per_row_];
  for (int w = 0; w < words_per_row_; ++w) ri[w] ^= rj[w];
}

int Gf2Matrix::row_weight(int r) const {
  int n = 0;
  const auto* row = &bits_[static_cast<size_t>(r) * words_per_row_];
  for (int w = 0; w < words_per_row_; ++w) n += std::popcount(row[w]);
  return n;
}

bool Gf2Matrix::row_is_zero(int r) const { return row_weight(r) == 0; }

int Gf2Matrix::row_unit_column(int r) const {
  if (row_weight(r) != 1) return -1;
  for (int c = 0; c < cols_; ++c)
    if (get(r, c)) return c;
  return -1;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("Gf2Matrix: shape mismatch");
  Gf2Matrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    auto* dst = &out.bits_[static_cast<size_t>(i) * out.words_per_row_];
    for (int k = 0; k < cols_; ++k) {
      if (!get(i, k)) continue;
      const auto* src = &other.bits_[static_cast<size_t>(k) * other.words_per_row_];
      for (int w = 0; w < other.words_per_row_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

bool Gf2Matrix::operator==(const Gf2Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

std::string Gf2Matrix::str() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

namespace {

// Swap rows i and j using only row additions.
void swap_rows(Gf2Matrix& m, std::vector<std::pair<int, int>>& ops, int i,
               int j) {
  m.row_add(i, j);
  ops.emplace_back(i, j);
  m.row_add(j, i);
  ops.emplace_back(j, i);
  m.row_add(i, j);
  ops.emplace_back(i, j);
}

std::uint64_t section_pattern(const Gf2Matrix& m, int row, int c0, int c1) {
  std::uint64_t p = 0;
  for (int c = c0; c < c1; ++c) p = (p << 1) | (m.get(row, c) ? 1 : 0);
  return p;
}

GaussResult rref_impl(Gf2Matrix m, int block) {
  GaussResult res;
  std::vector<std::pair<int, int>>& ops = res.ops;
  int pivot_row = 0;
  for (int c0 = 0; c0 < m.cols() && pivot_row < m.rows(); c0 += block) {
    int c1 = std::min(c0 + block, m.cols());
    if (block > 1) {
      // Merge rows with identical patterns in this column section.
      std::map<std::uint64_t, int> seen;
      for (int r = pivot_row; r < m.rows(); ++r) {
        std::uint64_t p = section_pattern(m, r, c0, c1);
        if (p == 0) continue;
        auto [it, fresh] = seen.emplace(p, r);
        if (!fresh) {
          m.row_add(r, it->second);
          ops.emplace_back(r, it->second);
        }
      }
    }
    for (int c = c0; c < c1 && pivot_row < m.rows(); ++c) {
      int pivot = -1;
      for (int r = pivot_row; r < m.rows(); ++r) {
        if (m.get(r, c)) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      if (pivot != pivot_row) swap_rows(m, ops, pivot_row, pivot);
      for (int r = 0; r < m.rows(); ++r) {
        if (r != pivot_row && m.get(r, c)) {
          m.row_add(r, pivot_row);
          ops.emplace_back(r, pivot_row);
        }
      }
      ++pivot_row;
    }
  }
  res.rank = pivot_row;
  res.reduced = std::move(m);
  return res;
}

// Blocked lower elimination of an invertible square matrix to upper
// triangular form with unit diagonal. Appends the ops performed.
void lower_eliminate(Gf2Matrix& m, std::vector<std::pair<int, int>>& ops,
                     int block) {
  int n = m.rows();
  for (int c0 = 0; c0 < n; c0 += block) {
    int c1 = std::min(c0 + block, n);
    std::map<std::uint64_t, int> seen;
    for (int r = c0; r < n; ++r) {
      std::uint64_t p = section_pattern(m, r, c0, c1);
      if (p == 0) continue;
      auto [it, fresh] = seen.emplace(p, r);
      if (!fresh) {
        m.row_add(r, it->second);
        ops.emplace_back(r, it->second);
      }
    }
    for (int c = c0; c < c1; ++c) {
      if (!m.get(c, c)) {
        int pivot = -1;
        for (int r = c + 1; r < n; ++r) {
          if (m.get(r, c)) {
            pivot = r;
            break;
          }
        }
        if (pivot < 0) throw std::invalid_argument("patel_markov_hayes: singular");
        m.row_add(c, pivot);
        ops.emplace_back(c, pivot);
      }
      for (int r = c + 1; r < n; ++r) {
        if (m.get(r, c)) {
          m.row_add(r, c);
          ops.emplace_back(r, c);
        }
      }
    }
  }
}

Gf2Matrix transpose(const Gf2Matrix& m) {
  Gf2Matrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.get(i, j)) t.set(j, i, true);
  return t;
}

}  // namespace

GaussResult gauss_reduce(const Gf2Matrix& m) { return rref_impl(m, 1); }

GaussResult gauss_reduce_blocked(const Gf2Matrix& m, int block) {
  return rref_impl(m, std::max(1, block));
}

std::vector<std::pair<int, int>> patel_markov_hayes(const Gf2Matrix& m,
                                                    int block) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("patel_markov_hayes: not square");
  int n = m.rows();
  if (block <= 0)
    block = std::max(1, static_cast<int>(std::log2(std::max(2, n)) / 2));
  std::vector<std::pair<int, int>> ops;
  Gf2Matrix work = m;
  lower_eliminate(work, ops, block);  // work is now upper triangular
  Gf2Matrix tr = transpose(work);
  std::vector<std::pair<int, int>> upper_ops;
  lower_eliminate(tr, upper_ops, block);
  // Transposed ops in reverse order clear the upper triangle of `work`.
  for (auto it = upper_ops.rbegin(); it != upper_ops.rend(); ++it)
    ops.emplace_back(it->second, it->first);
  return ops;
}

std::optional<std::set<int>> solve_unit_vector(const Gf2Matrix& m, int col) {
  if (col < 0 || col >= m.cols()) return std::nullopt;
  // Solve chi^T M = e_col^T, i.e. M^T chi = e_col, augmented elimination.
  int n = m.cols();   // equations
  int k = m.rows();   // unknowns
  Gf2Matrix aug(n, k + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) aug.set(i, j, m.get(j, i));
    aug.set(i, k, i == col);
  }
  int pivot_row = 0;
  std::vector<int> pivot_col_of_row(n, -1);
  for (int c = 0; c < k && pivot_row < n; ++c) {
    int pivot = -1;
    for (int r = pivot_row; r < n; ++r)
      if (aug.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != pivot_row) {
      aug.row_add(pivot_row, pivot);
      aug.row_add(pivot, pivot_row);
      aug.row_add(pivot_row, pivot);
    }
    for (int r = 0; r < n; ++r)
      if (r != pivot_row && aug.get(r, c)) aug.row_add(r, pivot_row);
    pivot_col_of_row[pivot_row] = c;
    ++pivot_row;
  }
  // Inconsistent if a zero row has rhs 1.
  for (int r = pivot_row; r < n; ++r)
    if (aug.get(r, k)) return std::nullopt;
  std::set<int> sol;
  for (int r = 0; r < pivot_row; ++r)
    if (aug.get(r, k)) sol.insert(pivot_col_of_row[r]);
  if (sol.empty()) return std::nullopt;  // e_col cannot be the zero combination
  return sol;
}

}  // namespace gms
