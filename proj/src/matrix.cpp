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

#include "blowup/matrix.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "blowup/errors.hpp"

namespace blowup {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  PolyMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ValidationError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!same_ring(rows[i][j].ring(), ring)) throw RingMismatch();
      m(i, j) = rows[i][j].with_order(ring->grevlex());
    }
  }
  return m;
}

PolyMatrix PolyMatrix::parse(RingPtr ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& row : rows) {
    auto& out = polys.emplace_back();
    for (const auto& text : row) out.push_back(Polynomial::parse(ring, text));
  }
  return from_rows(std::move(ring), std::move(polys));
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool PolyMatrix::is_alternating() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
  }
  return true;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::negated() const {
  PolyMatrix n = *this;
  for (auto& e : n.entries_) e = -e;
  return n;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix s(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  }
  return s;
}

PolyMatrix PolyMatrix::without(std::size_t i) const {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < rows_; ++k) {
    if (k != i) keep.push_back(k);
  }
  return submatrix(keep, keep);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  if (a.cols_ != b.rows_) throw ValidationError("matrix shapes do not compose");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial sum(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        sum += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(sum);
    }
  }
  return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix row_vector(RingPtr ring, std::span<const Polynomial> v) {
  PolyMatrix m(ring, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

namespace {

void require_alternating(const PolyMatrix& m) {
  if (!m.is_alternating()) throw ValidationError("matrix is not alternating");
  if (m.rows() > 32) throw ValidationError("Pfaffians are limited to 32 x 32 matrices");
}

std::uint32_t full_mask(std::size_t n) {
  return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

// Laplace expansion along the last used row, memoized on the column subset.
class MinorMemo {
 public:
  explicit MinorMemo(const PolyMatrix& m) : m_(m) {}

  const Polynomial& of(std::uint32_t cols) {
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    Polynomial result(m_.ring());
    const int k = std::popcount(cols);
    if (k == 0) {
      result = Polynomial::constant(m_.ring(), 1);
    } else {
      const std::size_t row = static_cast<std::size_t>(k - 1);
      int pos = 0;
      for (std::uint32_t s = cols; s; s &= s - 1, ++pos) {
        const std::size_t c = static_cast<std::size_t>(std::countr_zero(s));
        const Polynomial& a = m_(row, c);
        if (a.is_zero()) continue;
        const Polynomial& sub = of(cols & ~(std::uint32_t{1} << c));
        if (sub.is_zero()) continue;
        if ((static_cast<int>(row) + pos) % 2 == 0) {
          result += a * sub;
        } else {
          result -= a * sub;
        }
      }
    }
    return memo_.emplace(cols, std::move(result)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace

PfaffianTable::PfaffianTable(const PolyMatrix& m) : m_(m) { require_alternating(m); }

const Polynomial& PfaffianTable::of(std::uint32_t subset) {
  if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
  Polynomial result(m_.ring());
  if (subset == 0) {
    result = Polynomial::constant(m_.ring(), 1);
  } else if (std::popcount(subset) % 2 == 0) {
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(subset));
    const std::uint32_t rest = subset & (subset - 1);
    bool positive = true;
    for (std::uint32_t s = rest; s; s &= s - 1) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(s));
      const Polynomial& a = m_(i, j);
      if (!a.is_zero()) {
        const Polynomial& sub = of(rest & ~(std::uint32_t{1} << j));
        if (!sub.is_zero()) {
          if (positive) {
            result += a * sub;
          } else {
            result -= a * sub;
          }
        }
      }
      positive = !positive;
    }
  }
  return memo_.emplace(subset, std::move(result)).first->second;
}

const Polynomial& PfaffianTable::without(std::span<const std::size_t> removed) {
  std::uint32_t keep = full_mask(m_.rows());
  for (auto i : removed) keep &= ~(std::uint32_t{1} << i);
  return of(keep);
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == n - k + j - 1) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t i = j; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return out;
}

Polynomial pfaffian(const PolyMatrix& m) {
  PfaffianTable memo(m);
  if (m.rows() % 2) return Polynomial(m.ring());
  return memo.of(full_mask(m.rows()));
}

std::vector<Polynomial> signed_submax_pfaffians(const PolyMatrix& m, int offset) {
  PfaffianTable memo(m);
  if (m.rows() % 2 == 0) throw DegenerateEven("submaximal Pfaffians of an even-size alternating matrix vanish");
  const std::uint32_t full = full_mask(m.rows());
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Polynomial p = memo.of(full & ~(std::uint32_t{1} << i));
    const int exponent = offset - static_cast<int>(i + 1);
    out.push_back(exponent % 2 == 0 ? p : -p);
  }
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  if (m.cols() > 32) throw ValidationError("determinants are limited to 32 columns");
  MinorMemo memo(m);
  return memo.of(full_mask(m.cols()));
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (r > c) throw ValidationError("maximal minors need rows <= cols");
  if (c > 32) throw ValidationError("maximal minors are limited to 32 columns");
  MinorMemo memo(m);
  std::vector<Polynomial> out;
  for (const auto& pick : combinations(c, r)) {
    std::uint32_t mask = 0;
    for (auto j : pick) mask |= std::uint32_t{1} << j;
    out.push_back(memo.of(mask));
  }
  return out;
}

Polynomial delta_J(const PolyMatrix& m, std::span<const std::size_t> columns, std::optional<std::size_t> drop_row) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!drop_row || i != *drop_row) rows.push_back(i);
  }
  if (drop_row && *drop_row >= m.rows()) throw ValidationError("dropped row out of range");
  if (columns.size() != rows.size()) throw ValidationError("column set size does not match the row count");
  std::uint32_t seen = 0;
  for (auto j : columns) {
    if (j >= m.cols()) throw ValidationError("column index out of range");
    if (seen & (std::uint32_t{1} << j)) throw ValidationError("repeated column index");
    seen |= std::uint32_t{1} << j;
  }
  return determinant(m.submatrix(rows, columns));
}

}  // namespace blowup
