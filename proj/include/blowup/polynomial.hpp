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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blowup/ring.hpp"

namespace blowup {

struct Term {
  Monomial monomial;
  Coeff coeff;
};

/// Sparse polynomial over GF(p). Terms are nonzero and strictly descending
/// under the polynomial's order; zero is the empty term list.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, OrderPtr order);

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, OrderPtr order, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);

  /// Parses the canonical text form, e.g. `3*x1^2*T2 - T1 + 1`.
  static Polynomial parse(RingPtr ring, std::string_view text);
  std::string to_string() const;

  const RingPtr& ring() const { return ring_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  /// Highest total degree of a term; -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;
  /// True when no term involves variable `i`.
  bool free_of(std::size_t i) const;
  /// Coefficient of `m`, zero if absent.
  Coeff coefficient(const Monomial& m) const;

  Polynomial with_order(OrderPtr order) const;
  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p) { return p.scaled(p.ring_->field().neg(1)); }

  /// Same ring and same terms (compared under this polynomial's order).
  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  void check_ring(const Polynomial& q) const;
  Polynomial aligned(const Polynomial& q) const;
  Polynomial combine(const Polynomial& q, bool subtract) const;

  RingPtr ring_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

/// Returns r with r*q == p; throws NotDivisible otherwise.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

/// Common bidegree (dx, dT) of all terms; nullopt when not bihomogeneous.
/// The zero polynomial reports (0, 0).
std::optional<std::pair<int, int>> bidegree_of(const Polynomial& p);

/// Regroups p by the monomials in the variables of `block`. Returns pairs of
/// (block monomial, coefficient free of the block), ordered by the block
/// monomial descending; empty for p == 0.
std::vector<std::pair<Monomial, Polynomial>> content_by_block(const Polynomial& p,
                                                              std::string_view block);

/// Coefficients of p viewed as a polynomial in the x-block with coefficients
/// in the other variables.
std::vector<Polynomial> content_in_T(const Polynomial& p);

/// Maps p into `target`, sending variable i to variable var_map[i]; var_map[i]
/// of -1 requires variable i to be absent.
Polynomial map_variables(const Polynomial& p, RingPtr target, std::span<const int> var_map);

/// Maps p into a ring whose variables are matched by name.
Polynomial map_by_name(const Polynomial& p, RingPtr target);

/// Substitutes polynomials of a common ring for each variable of p's ring.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

}  // namespace blowup
