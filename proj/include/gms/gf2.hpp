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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gms {

/// Dense bit matrix over GF(2), packed 64 bits per word, row-major.
class Gf2Matrix {
 public:
  Gf2Matrix() : rows_(0), cols_(0), words_per_row_(0) {}
  Gf2Matrix(int rows, int cols);
  static Gf2Matrix identity(int n);
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);

  /// r_i <- r_i xor r_j. An involution: applying twice restores the matrix.
  void row_add(int i, int j);

  int row_weight(int r) const;
  bool row_is_zero(int r) const;
  /// Column index of the single 1 if row weight is exactly 1, else -1.
  int row_unit_column(int r) const;

  Gf2Matrix multiply(const Gf2Matrix& other) const;
  bool operator==(const Gf2Matrix& o) const;
  bool operator!=(const Gf2Matrix& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int rows_, cols_, words_per_row_;
  std::vector<std::uint64_t> bits_;
};

struct GaussResult {
  Gf2Matrix reduced;
  std::vector<std::pair<int, int>> ops;  // row_add(i, j) replay list
  int rank = 0;
};

/// Reduced row echelon form; replaying ops on the input reproduces `reduced`.
GaussResult gauss_reduce(const Gf2Matrix& m);

/// Block variant of full elimination: same contract as gauss_reduce but the
/// op list is shortened by eliminating `block`-wide column sections at once.
GaussResult gauss_reduce_blocked(const Gf2Matrix& m, int block);

/// Linear reversible circuit synthesis for an invertible square matrix:
/// replaying the returned row ops on m yields the identity.
/// block <= 0 picks the default max(1, floor(log2(n) / 2)).
/// Throws std::invalid_argument if m is singular or not square.
std::vector<std::pair<int, int>> patel_markov_hayes(const Gf2Matrix& m,
                                                    int block = 0);

/// A nonempty row set S with xor of the rows equal to the unit vector e_col,
/// or nullopt if no such combination exists.
std::optional<std::set<int>> solve_unit_vector(const Gf2Matrix& m, int col);

}  // namespace gms
