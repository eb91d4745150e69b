/*
 * Copyright 2026 The blowup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Dense matrix of polynomials over one ring, stored row-major.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows);
  static PolyMatrix parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  /// Square with zero diagonal and M[i][j] == -M[j][i].
  bool is_alternating() const;
  PolyMatrix transposed() const;
  PolyMatrix negated() const;
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  /// Principal submatrix with row and column i removed.
  PolyMatrix without(std::size_t i) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// 1 x n matrix holding `v`.
PolyMatrix row_vector(RingPtr ring, std::span<const Polynomial> v);

/// Pfaffians of the principal submatrices of an alternating matrix, keyed by
/// the bitmask of kept indices and memoized across calls.
class PfaffianTable {
 public:
  /// Throws ValidationError when `m` is not alternating.
  explicit PfaffianTable(const PolyMatrix& m);
  const Polynomial& of(std::uint32_t keep);
  /// Pfaffian with the indices in `removed` deleted.
  const Polynomial& without(std::span<const std::size_t> removed);

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

/// k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Pfaffian by first-row expansion; zero for odd size. Throws ValidationError
/// when M is not alternating.
Polynomial pfaffian(const PolyMatrix& m);

/// F_i = (-1)^(offset - i) Pf(M with row and column i removed), i = 1..m.
/// M must be alternating of odd size; even size throws DegenerateEven.
std::vector<Polynomial> signed_submax_pfaffians(const PolyMatrix& m, int offset);

Polynomial determinant(const PolyMatrix& m);

/// All maximal minors of a matrix with rows <= cols, column subsets in
/// lexicographic order.
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

/// Determinant of the columns `columns` (in the given order), with row
/// `drop_row` removed when set.
Polynomial delta_J(const PolyMatrix& m, std::span<const std::size_t> columns,
                   std::optional<std::size_t> drop_row = std::nullopt);

}  // namespace blowup
