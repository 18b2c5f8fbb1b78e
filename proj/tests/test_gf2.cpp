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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gms/gf2.hpp"

using gms::GaussResult;
using gms::Gf2Matrix;

namespace {

Gf2Matrix random_matrix(int r, int c, std::mt19937_64& rng) {
  Gf2Matrix m(r, c);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, bit(rng));
  return m;
}

Gf2Matrix random_invertible(int n, std::mt19937_64& rng) {
  for (;;) {
    Gf2Matrix m = random_matrix(n, n, rng);
    if (gms::gauss_reduce(m).rank == n) return m;
  }
}

Gf2Matrix replay(Gf2Matrix m, const std::vector<std::pair<int, int>>& ops) {
  for (auto& [i, j] : ops) m.row_add(i, j);
  return m;
}

}  // namespace

TEST_CASE("row_add is an involution") {
  std::mt19937_64 rng(7);
  Gf2Matrix m = random_matrix(5, 9, rng);
  Gf2Matrix orig = m;
  m.row_add(2, 4);
  m.row_add(2, 4);
  CHECK(m == orig);
}

TEST_CASE("gauss_reduce produces RREF and a faithful op replay") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Gf2Matrix m = random_matrix(6, 8, rng);
    GaussResult res = gms::gauss_reduce(m);
    CHECK(replay(m, res.ops) == res.reduced);
    // RREF shape: pivot columns strictly increase, pivots alone in column.
    int last_pivot = -1;
    for (int r = 0; r < res.rank; ++r) {
      int p = 0;
      while (p < 8 && !res.reduced.get(r, p)) ++p;
      CHECK(p < 8);
      CHECK(p > last_pivot);
      last_pivot = p;
      for (int rr = 0; rr < 6; ++rr)
        if (rr != r) CHECK_FALSE(res.reduced.get(rr, p));
    }
    for (int r = res.rank; r < 6; ++r) CHECK(res.reduced.row_is_zero(r));
  }
}

TEST_CASE("blocked elimination agrees with plain elimination") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Gf2Matrix m = random_matrix(7, 7, rng);
    GaussResult plain = gms::gauss_reduce(m);
    for (int block = 2; block <= 4; ++block) {
      GaussResult b = gms::gauss_reduce_blocked(m, block);
      CHECK(b.rank == plain.rank);
      CHECK(b.reduced == plain.reduced);
      CHECK(replay(m, b.ops) == b.reduced);
    }
  }
}

TEST_CASE("patel_markov_hayes replay reaches the identity") {
  std::mt19937_64 rng(17);
  for (int n : {1, 2, 3, 5, 8, 16}) {
    for (int trial = 0; trial < 10; ++trial) {
      Gf2Matrix m = random_invertible(n, rng);
      auto ops = gms::patel_markov_hayes(m);
      CHECK(replay(m, ops) == Gf2Matrix::identity(n));
    }
  }
}

TEST_CASE("patel_markov_hayes beats row count n^2 on moderate sizes") {
  std::mt19937_64 rng(19);
  Gf2Matrix m = random_invertible(24, rng);
  auto ops = gms::patel_markov_hayes(m);
  CHECK(static_cast<int>(ops.size()) < 24 * 24);
}

TEST_CASE("patel_markov_hayes rejects bad input") {
  CHECK_THROWS_AS(gms::patel_markov_hayes(Gf2Matrix(2, 3)),
                  std::invalid_argument);
  Gf2Matrix singular(3, 3);
  singular.set(0, 0, true);
  singular.set(1, 0, true);
  CHECK_THROWS_AS(gms::patel_markov_hayes(singular), std::invalid_argument);
}

TEST_CASE("solve_unit_vector results always XOR-verify") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int rows = 2 + trial % 5, cols = 2 + (trial / 5) % 5;
    Gf2Matrix m = random_matrix(rows, cols, rng);
    for (int col = 0; col < cols; ++col) {
      auto sol = gms::solve_unit_vector(m, col);
      if (!sol) continue;
      CHECK_FALSE(sol->empty());
      for (int c = 0; c < cols; ++c) {
        int parity = 0;
        for (int r : *sol) parity ^= m.get(r, c) ? 1 : 0;
        CHECK(parity == (c == col ? 1 : 0));
      }
    }
  }
}

TEST_CASE("solve_unit_vector finds a hit on full-row-rank matrices") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    Gf2Matrix m = random_invertible(5, rng);
    for (int col = 0; col < 5; ++col)
      CHECK(gms::solve_unit_vector(m, col).has_value());
  }
}

TEST_CASE("matrix product and identity") {
  std::mt19937_64 rng(31);
  Gf2Matrix m = random_matrix(4, 6, rng);
  CHECK(Gf2Matrix::identity(4).multiply(m) == m);
  Gf2Matrix a = Gf2Matrix::from_rows({{1, 1}, {0, 1}});
  Gf2Matrix sq = a.multiply(a);
  CHECK(sq == Gf2Matrix::identity(2));
}
