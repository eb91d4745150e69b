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

#include "blowup/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace blowup {

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)), order_(ring_->grevlex()) {}

Polynomial::Polynomial(RingPtr ring, OrderPtr order) : ring_(std::move(ring)), order_(std::move(order)) {
  if (!order_) order_ = ring_->grevlex();
  if (order_->nvars() != ring_->nvars()) throw ValidationError("order does not match the ring");
}

Polynomial Polynomial::from_terms(RingPtr ring, OrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(ring), std::move(order));
  const auto& ord = *p.order_;
  const auto& field = p.ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(t);
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial p(ring);
  Coeff v = ring->field().from_int(c);
  if (v) p.terms_.push_back({Monomial{}, v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw ValidationError("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->var_index(name);
  if (!idx) throw ValidationError("unknown variable " + std::string(name));
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  c %= p.ring_->characteristic();
  if (c) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, static_cast<int>(t.monomial.degree()));
  return deg;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

bool Polynomial::free_of(std::size_t i) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[i] == 0; });
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return 0;
}

Polynomial Polynomial::with_order(OrderPtr order) const {
  if (*order == *order_) {
    Polynomial p = *this;
    p.order_ = std::move(order);
    return p;
  }
  return from_terms(ring_, std::move(order), terms_);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial p(ring_, order_);
  if (c == 0) return p;
  const auto& field = ring_->field();
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, field.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  Polynomial p(ring_, order_);
  if (c == 0) return p;
  const auto& field = ring_->field();
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, field.mul(t.coeff, c)});
  return p;
}

void Polynomial::check_ring(const Polynomial& q) const {
  if (!same_ring(ring_, q.ring_)) throw RingMismatch();
}

Polynomial Polynomial::aligned(const Polynomial& q) const {
  if (*q.order_ == *order_) return q;
  return q.with_order(order_);
}

Polynomial Polynomial::combine(const Polynomial& q_in, bool subtract) const {
  check_ring(q_in);
  const Polynomial q = aligned(q_in);
  const auto& field = ring_->field();
  const auto& ord = *order_;
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    int c = a == terms_.end() ? -1 : b == q.terms_.end() ? 1 : ord.compare(a->monomial, b->monomial);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back({b->monomial, subtract ? field.neg(b->coeff) : b->coeff});
      ++b;
    } else {
      Coeff s = subtract ? field.sub(a->coeff, b->coeff) : field.add(a->coeff, b->coeff);
      if (s) r.terms_.push_back({a->monomial, s});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) { return *this = combine(q, false); }
Polynomial& Polynomial::operator-=(const Polynomial& q) { return *this = combine(q, true); }

Polynomial operator*(const Polynomial& p, const Polynomial& q_in) {
  p.check_ring(q_in);
  if (p.is_zero() || q_in.is_zero()) return Polynomial(p.ring_, p.order_);
  const Polynomial q = p.aligned(q_in);
  if (q.size() == 1) return p.times_term(q.leading_monomial(), q.leading_coeff());
  if (p.size() == 1) return q.times_term(p.leading_monomial(), p.leading_coeff());
  std::vector<Term> prod;
  prod.reserve(p.size() * q.size());
  const auto& field = p.ring_->field();
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) prod.push_back({a.monomial * b.monomial, field.mul(a.coeff, b.coeff)});
  }
  return Polynomial::from_terms(p.ring_, p.order_, std::move(prod));
}

bool operator==(const Polynomial& p, const Polynomial& q_in) {
  if (!same_ring(p.ring_, q_in.ring_)) return false;
  const Polynomial q = p.aligned(q_in);
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (!(p.terms_[i].monomial == q.terms_[i].monomial) || p.terms_[i].coeff != q.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& field = ring_->field();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::int64_t c = field.to_signed(terms_[i].coeff);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Monomial& m = terms_[i].monomial;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      out += std::to_string(mag);
      wrote = true;
    }
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      unsigned e = m[v];
      if (e == 0) continue;
      if (wrote) out += "*";
      out += ring_->var_name(v);
      if (e > 1) out += "^" + std::to_string(e);
      wrote = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == text_.size()) fail("empty input");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(negative));
      first = false;
    }
    return Polynomial::from_terms(ring_, ring_->grevlex(), std::move(terms));
  }

 private:
  Term term(bool negative) {
    const auto& field = ring_->field();
    Coeff coeff = 1;
    Monomial m;
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = field.mul(coeff, field.from_int(static_cast<std::int64_t>(number() % ring_->characteristic())));
      } else if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto idx = ring_->var_index(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'");
        unsigned e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<unsigned>(number());
        }
        m.set(*idx, m[*idx] + e);
      } else {
        fail("expected a number or a variable");
      }
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {m, negative ? field.neg(coeff) : coeff};
  }

  std::uint64_t number() {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("bad integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) { return Parser(ring, text).run(); }

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch();
  const auto& field = p.ring()->field();
  Polynomial divisor = q.with_order(p.order());
  Polynomial rem = p;
  std::vector<Term> quotient;
  Coeff inv_lc = field.inv(divisor.leading_coeff());
  const Monomial& lm = divisor.leading_monomial();
  while (!rem.is_zero()) {
    const Term& lead = rem.leading();
    if (!lm.divides(lead.monomial)) throw NotDivisible("exact division left a remainder");
    Monomial m = lm.quotient_of(lead.monomial);
    Coeff c = field.mul(lead.coeff, inv_lc);
    quotient.push_back({m, c});
    rem -= divisor.times_term(m, c);
  }
  return Polynomial::from_terms(p.ring(), p.order(), std::move(quotient));
}

std::optional<std::pair<int, int>> bidegree_of(const Polynomial& p) {
  const Ring& ring = *p.ring();
  std::optional<std::pair<int, int>> common;
  for (const auto& t : p.terms()) {
    std::pair<int, int> bd{0, 0};
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      auto [dx, dt] = ring.var_bidegree(v);
      bd.first += dx * static_cast<int>(t.monomial[v]);
      bd.second += dt * static_cast<int>(t.monomial[v]);
    }
    if (common && *common != bd) return std::nullopt;
    common = bd;
  }
  return common.value_or(std::pair<int, int>{0, 0});
}

std::vector<std::pair<Monomial, Polynomial>> content_by_block(const Polynomial& p, std::string_view block) {
  const auto vars = p.ring()->block_vars(block);
  const auto& order = *p.ring()->grevlex();
  auto cmp = [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };
  std::map<Monomial, std::vector<Term>, decltype(cmp)> groups(cmp);
  for (const auto& t : p.terms()) {
    Monomial key, rest = t.monomial;
    for (std::size_t v : vars) {
      key.set(v, t.monomial[v]);
      rest.set(v, 0);
    }
    groups[key].push_back({rest, t.coeff});
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  for (auto& [key, terms] : groups) {
    out.emplace_back(key, Polynomial::from_terms(p.ring(), p.order(), std::move(terms)));
  }
  return out;
}

std::vector<Polynomial> content_in_T(const Polynomial& p) {
  std::vector<Polynomial> out;
  for (auto& [m, c] : content_by_block(p, "x")) out.push_back(std::move(c));
  return out;
}

Polynomial map_variables(const Polynomial& p, RingPtr target, std::span<const int> var_map) {
  if (var_map.size() != p.ring()->nvars()) throw ValidationError("variable map has the wrong length");
  if (p.ring()->characteristic() != target->characteristic()) throw RingMismatch("characteristics differ");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < var_map.size(); ++v) {
      unsigned e = t.monomial[v];
      if (e == 0) continue;
      if (var_map[v] < 0) throw ValidationError("polynomial involves an unmapped variable " + p.ring()->var_name(v));
      auto dst = static_cast<std::size_t>(var_map[v]);
      if (dst >= target->nvars()) throw ValidationError("variable map target out of range");
      m.set(dst, m[dst] + e);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, target->grevlex(), std::move(terms));
}

Polynomial map_by_name(const Polynomial& p, RingPtr target) {
  std::vector<int> var_map(p.ring()->nvars(), -1);
  for (std::size_t v = 0; v < var_map.size(); ++v) {
    if (auto idx = target->var_index(p.ring()->var_name(v))) var_map[v] = static_cast<int>(*idx);
  }
  return map_variables(p, std::move(target), var_map);
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.ring()->nvars()) throw ValidationError("one image per variable is required");
  if (images.empty()) throw ValidationError("cannot substitute into a ring without variables");
  RingPtr target = images.front().ring();
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      for (unsigned e = 0; e < t.monomial[v]; ++e) term = term * images[v];
    }
    result += term;
  }
  return result;
}

}  // namespace blowup
