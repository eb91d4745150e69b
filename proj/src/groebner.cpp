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

#include "blowup/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace blowup {

namespace {

std::atomic<bool> g_posthoc{false};
std::atomic<std::uint64_t> g_posthoc_count{0};

struct Element {
  Polynomial poly;
  Monomial lm;
  std::uint32_t divmask;
  unsigned sugar;
  bool active;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

// Heap-and-hash division: the heap yields monomials in descending order and
// the hash table accumulates their coefficients.
class Accumulator {
 public:
  Accumulator(const MonomialOrder& order, const PrimeField& field) : order_(order), field_(field) {}

  void add(const Monomial& m, Coeff c) {
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (inserted) {
      heap_.push_back(m);
      std::push_heap(heap_.begin(), heap_.end(), cmp());
    } else {
      it->second = field_.add(it->second, c);
    }
  }

  /// Next monomial with nonzero coefficient, in descending order.
  bool pop(Term& out) {
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), cmp());
      Monomial m = heap_.back();
      heap_.pop_back();
      auto it = coeffs_.find(m);
      Coeff c = it->second;
      coeffs_.erase(it);
      if (c) {
        out = {m, c};
        return true;
      }
    }
    return false;
  }

 private:
  struct Less {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) < 0; }
  };
  Less cmp() const { return Less{&order_}; }

  const MonomialOrder& order_;
  const PrimeField& field_;
  std::vector<Monomial> heap_;
  std::unordered_map<Monomial, Coeff, MonomialHash> coeffs_;
};

template <typename Range, typename Get>
Polynomial reduce_with(const Polynomial& f, const Range& basis, Get get_poly) {
  const auto& order = *f.order();
  const auto& field = f.ring()->field();
  Accumulator acc(order, field);
  for (const auto& t : f.terms()) acc.add(t.monomial, t.coeff);
  std::vector<Term> out;
  Term t;
  while (acc.pop(t)) {
    const std::uint32_t mask = t.monomial.support();
    const Polynomial* reducer = nullptr;
    for (const auto& b : basis) {
      const Polynomial* g = get_poly(b);
      if (!g) continue;
      const Monomial& lm = g->leading_monomial();
      if ((lm.support() & ~mask) == 0 && lm.divides(t.monomial)) {
        reducer = g;
        break;
      }
    }
    if (!reducer) {
      out.push_back(t);
      continue;
    }
    const Monomial q = reducer->leading_monomial().quotient_of(t.monomial);
    const Coeff factor = field.neg(field.mul(t.coeff, field.inv(reducer->leading_coeff())));
    const auto& rt = reducer->terms();
    for (std::size_t k = 1; k < rt.size(); ++k) acc.add(rt[k].monomial * q, field.mul(rt[k].coeff, factor));
  }
  return Polynomial::from_terms(f.ring(), f.order(), std::move(out));
}

Polynomial reduce_by_elements(const Polynomial& f, const std::vector<Element>& basis) {
  return reduce_with(f, basis, [](const Element& e) { return e.active ? &e.poly : nullptr; });
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  const auto& field = a.ring()->field();
  Polynomial sa = a.times_term(a.leading_monomial().quotient_of(l), field.inv(a.leading_coeff()));
  Polynomial sb = b.times_term(b.leading_monomial().quotient_of(l), field.inv(b.leading_coeff()));
  return sa - sb;
}

thread_local GroebnerStats t_last_stats;

class Buchberger {
 public:
  Buchberger(const OrderPtr& order, const Budget& budget) : order_(order), budget_(budget) {}

  std::vector<Polynomial> run(std::span<const Polynomial> generators) {
    std::vector<Polynomial> inputs;
    for (const auto& g : generators) {
      if (!g.is_zero()) inputs.push_back(g.with_order(order_));
    }
    std::sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (const auto& f : inputs) {
      Polynomial h = reduce_by_elements(f, basis_);
      if (!h.is_zero()) insert(h.monic(), static_cast<unsigned>(f.total_degree()));
    }
    while (!pairs_.empty()) {
      check_budget();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_reduced;
      Polynomial h = reduce_by_elements(s_polynomial(basis_[p.i].poly, basis_[p.j].poly), basis_);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic(), p.sugar);
    }
    return finish();
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (int c = order_->compare(a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  void check_budget() {
    if (budget_.max_pairs && stats_.pairs_reduced >= budget_.max_pairs) {
      throw Timeout("Groebner pair budget exhausted (" + std::to_string(budget_.max_pairs) + " pairs)");
    }
    if (budget_.max_terms && total_terms_ > budget_.max_terms) {
      throw Timeout("Groebner term budget exhausted (" + std::to_string(budget_.max_terms) + " terms)");
    }
    if (budget_.deadline && std::chrono::steady_clock::now() > *budget_.deadline) {
      throw Timeout("Groebner wall-clock budget exhausted");
    }
  }

  // Gebauer-Moeller update.
  void insert(Polynomial h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    const Monomial lm_h = h.leading_monomial();
    total_terms_ += h.size();

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!basis_[g].active) continue;
      const Element& e = basis_[g];
      Monomial l = lcm(e.lm, lm_h);
      unsigned s = std::max(e.sugar + l.degree() - e.lm.degree(), sugar + l.degree() - lm_h.degree());
      fresh.push_back({g, hi, l, s});
    }
    stats_.pairs_considered += fresh.size();

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Pair& p = fresh[k];
      if (coprime(basis_[p.i].lm, lm_h)) {
        kept.push_back(p);
        continue;
      }
      auto divides_p = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      bool dominated = std::any_of(fresh.begin() + static_cast<std::ptrdiff_t>(k) + 1, fresh.end(), divides_p) ||
                       std::any_of(kept.begin(), kept.end(), divides_p);
      if (!dominated) kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) { return coprime(basis_[p.i].lm, lm_h); });

    std::erase_if(pairs_, [&](const Pair& p) {
      return lm_h.divides(p.lcm) && !(lcm(basis_[p.i].lm, lm_h) == p.lcm) && !(lcm(basis_[p.j].lm, lm_h) == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    for (auto& e : basis_) {
      if (e.active && lm_h.divides(e.lm)) e.active = false;
    }
    basis_.push_back({std::move(h), lm_h, lm_h.support(), sugar, true});
  }

  std::vector<Polynomial> finish() {
    std::vector<Polynomial> minimal;
    for (const auto& e : basis_) {
      if (e.active) minimal.push_back(e.poly);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      const Polynomial& g = minimal[k];
      Polynomial tail = g - Polynomial::from_terms(g.ring(), g.order(), {g.leading()});
      std::vector<const Polynomial*> others;
      for (std::size_t m = 0; m < minimal.size(); ++m) {
        if (m != k) others.push_back(&minimal[m]);
      }
      Polynomial r = reduce_with(tail, others, [](const Polynomial* p) { return p; });
      reduced.push_back((Polynomial::from_terms(g.ring(), g.order(), {g.leading()}) + r).monic());
    }
    stats_.basis_size = reduced.size();
    return reduced;
  }

  OrderPtr order_;
  const Budget& budget_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::uint64_t total_terms_ = 0;
  GroebnerStats stats_;
};

Polynomial lift(const Polynomial& p, const RingPtr& target) {
  std::vector<int> identity(p.ring()->nvars());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  return map_variables(p, target, identity);
}

Polynomial drop_last(const Polynomial& p, const RingPtr& target) {
  std::vector<int> map(p.ring()->nvars(), -1);
  for (std::size_t i = 0; i < target->nvars(); ++i) map[i] = static_cast<int>(i);
  return map_variables(p, target, map);
}

}  // namespace

Budget Budget::from_environment() {
  Budget b;
  if (const char* v = std::getenv("BLOWUP_BUDGET_PAIRS")) b.max_pairs = std::strtoull(v, nullptr, 10);
  if (const char* v = std::getenv("BLOWUP_BUDGET_TERMS")) b.max_terms = std::strtoull(v, nullptr, 10);
  return b;
}

void set_posthoc_check(bool enabled) { g_posthoc = enabled; }
bool posthoc_check_enabled() { return g_posthoc; }
std::uint64_t posthoc_checked_count() { return g_posthoc_count; }

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const OrderPtr& order,
                                   const Budget& budget, GroebnerStats* stats) {
  Buchberger engine(order, budget);
  auto basis = engine.run(generators);
  t_last_stats = engine.stats();
  if (stats) *stats = engine.stats();
  if (g_posthoc) {
    if (!satisfies_buchberger_criterion(basis)) {
      throw std::logic_error("computed basis fails Buchberger's criterion");
    }
    ++g_posthoc_count;
  }
  return basis;
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis) {
  return reduce_with(p, basis, [](const Polynomial& g) { return g.is_zero() ? nullptr : &g; });
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : state_(std::make_shared<State>()) {
  state_->ring = std::move(ring);
  for (auto& g : generators) {
    if (!same_ring(g.ring(), state_->ring)) throw RingMismatch();
    if (!g.is_zero()) state_->generators.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::parse(RingPtr ring, std::span<const std::string> generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(Polynomial::parse(ring, g));
  return Ideal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner_basis(const OrderPtr& order_in, const Budget& budget) const {
  const OrderPtr& order = order_in ? order_in : ring()->grevlex();
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->cache.find(order->key());
    if (it != state_->cache.end()) return *it->second;
  }
  auto basis = std::make_shared<const std::vector<Polynomial>>(buchberger(state_->generators, order, budget));
  std::lock_guard lock(state_->mutex);
  auto [it, inserted] = state_->cache.try_emplace(order->key(), std::move(basis));
  return *it->second;
}

bool Ideal::is_zero() const { return state_->generators.empty(); }

bool Ideal::is_unit(const Budget& budget) const {
  const auto& gb = groebner_basis(nullptr, budget);
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::contains(const Polynomial& p, const Budget& budget) const {
  return normal_form(p, *this, nullptr, budget).is_zero();
}

bool Ideal::contains(const Ideal& other, const Budget& budget) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Polynomial& g) { return contains(g, budget); });
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal Ideal::mapped_to(RingPtr target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators()) gens.push_back(map_by_name(g, target));
  return Ideal(std::move(target), std::move(gens));
}

Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const OrderPtr& order_in, const Budget& budget) {
  if (!same_ring(p.ring(), ideal.ring())) throw RingMismatch();
  const OrderPtr& order = order_in ? order_in : ideal.ring()->grevlex();
  const auto& gb = ideal.groebner_basis(order, budget);
  return reduce(p.with_order(order), gb).with_order(ideal.ring()->grevlex());
}

RingPtr with_auxiliary(const RingPtr& ring, const std::string& name) {
  std::string fresh = name;
  for (int k = 1; ring->var_index(fresh) || ring->has_block(fresh); ++k) fresh = name + "_" + std::to_string(k);
  return ring->extended({fresh, {fresh}, 0, 0});
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> eliminated, const Budget& budget) {
  if (eliminated.empty()) return ideal;
  const auto& ring = ideal.ring();
  auto order = MonomialOrder::elimination(ring->nvars(), eliminated);
  const auto& gb = ideal.groebner_basis(order, budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool free = std::all_of(eliminated.begin(), eliminated.end(), [&](std::size_t v) { return g.free_of(v); });
    if (free) kept.push_back(g.with_order(ring->grevlex()));
  }
  return Ideal(ring, std::move(kept));
}

Ideal eliminate_block(const Ideal& ideal, std::string_view block, const Budget& budget) {
  auto vars = ideal.ring()->block_vars(block);
  return eliminate(ideal, vars, budget);
}

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  const RingPtr ext = with_auxiliary(a.ring(), "w");
  const std::size_t w = ext->nvars() - 1;
  const Polynomial wv = Polynomial::variable(ext, w);
  const Polynomial one_minus_w = Polynomial::constant(ext, 1) - wv;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(wv * lift(f, ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * lift(g, ext));
  const std::size_t elim[] = {w};
  Ideal cut = eliminate(Ideal(ext, std::move(gens)), elim, budget);
  std::vector<Polynomial> out;
  for (const auto& g : cut.generators()) out.push_back(drop_last(g, a.ring()));
  return Ideal(a.ring(), std::move(out));
}

Ideal colon(const Ideal& ideal, const Polynomial& f, const Budget& budget) {
  if (f.is_zero()) return Ideal::unit(ideal.ring());
  if (ideal.is_zero()) return ideal;
  Ideal cut = intersect(ideal, Ideal(ideal.ring(), {f}), budget);
  std::vector<Polynomial> out;
  for (const auto& g : cut.generators()) out.push_back(exact_div(g, f));
  return Ideal(ideal.ring(), std::move(out));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by, const Budget& budget) {
  if (!same_ring(ideal.ring(), by.ring())) throw RingMismatch();
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  std::optional<Ideal> result;
  for (const auto& f : by.generators()) {
    Ideal part = colon(ideal, f, budget);
    if (!result) {
      result = part;
    } else if (part.contains(*result, budget)) {
      continue;
    } else if (result->contains(part, budget)) {
      result = part;
    } else {
      result = intersect(*result, part, budget);
    }
  }
  return Ideal(ideal.ring(), result->groebner_basis(nullptr, budget));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, const Budget& budget) {
  if (f.is_zero()) throw std::domain_error("saturation by zero");
  const RingPtr ext = with_auxiliary(ideal.ring(), "w");
  const std::size_t w = ext->nvars() - 1;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(lift(g, ext));
  gens.push_back(Polynomial::variable(ext, w) * lift(f, ext) - Polynomial::constant(ext, 1));
  const std::size_t elim[] = {w};
  Ideal cut = eliminate(Ideal(ext, std::move(gens)), elim, budget);
  std::vector<Polynomial> out;
  for (const auto& g : cut.generators()) out.push_back(drop_last(g, ideal.ring()));
  return Ideal(ideal.ring(), std::move(out));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, const Budget& budget) {
  if (f.is_zero()) return true;
  if (ideal.contains(f, budget)) return true;
  const RingPtr ext = with_auxiliary(ideal.ring(), "w");
  const std::size_t w = ext->nvars() - 1;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(lift(g, ext));
  gens.push_back(Polynomial::variable(ext, w) * lift(f, ext) - Polynomial::constant(ext, 1));
  return Ideal(ext, std::move(gens)).is_unit(budget);
}

DimHeight dim_height(const Ideal& ideal, const Budget& budget) {
  const auto& gb = ideal.groebner_basis(nullptr, budget);
  std::vector<Monomial> lms;
  for (const auto& g : gb) lms.push_back(g.leading_monomial());
  const int n = static_cast<int>(ideal.ring()->nvars());
  const int height = monomial_height(lms, ideal.ring()->nvars());
  return {n - height, height};
}

HilbertData hilbert(const Ideal& ideal, const Budget& budget) {
  for (const auto& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw ValidationError("Hilbert series needs a homogeneous ideal");
  }
  const auto& gb = ideal.groebner_basis(nullptr, budget);
  std::vector<Monomial> lms;
  for (const auto& g : gb) lms.push_back(g.leading_monomial());
  return monomial_hilbert(lms, ideal.ring()->nvars());
}

bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  const auto& ga = a.groebner_basis(nullptr, budget);
  const auto& gb = b.groebner_basis(nullptr, budget);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (!(ga[i] == gb[i])) return false;
  }
  return true;
}

}  // namespace blowup
