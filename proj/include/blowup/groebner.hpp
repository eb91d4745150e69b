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

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blowup/hilbert.hpp"
#include "blowup/polynomial.hpp"

namespace blowup {

/// Ceilings for a single Groebner computation. Zero means unlimited.
struct Budget {
  std::uint64_t max_pairs = 0;
  std::uint64_t max_terms = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Reads BLOWUP_BUDGET_PAIRS / BLOWUP_BUDGET_TERMS when set.
  static Budget from_environment();
};

/// Counters from the most recent computation on the calling thread.
struct GroebnerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t basis_size = 0;
};

/// Debug switch: when on, every computed basis is re-checked against
/// Buchberger's criterion and a failure throws std::logic_error.
void set_posthoc_check(bool enabled);
bool posthoc_check_enabled();
/// Number of bases verified by the post-hoc check since process start.
std::uint64_t posthoc_checked_count();

/// Reduced Groebner basis of `generators` under `order` (ascending by leading
/// monomial). Throws Timeout when `budget` is exhausted.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const OrderPtr& order,
                                   const Budget& budget = {}, GroebnerStats* stats = nullptr);

/// Remainder of full division of p by `basis`; basis must share p's order.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis);

/// Every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis);

/// An ideal of a polynomial ring: generators plus write-once cached bases per order.
/// Copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal parse(RingPtr ring, std::span<const std::string> generators);

  const RingPtr& ring() const { return state_->ring; }
  const std::vector<Polynomial>& generators() const { return state_->generators; }

  /// Reduced basis under `order` (grevlex when null); cached.
  const std::vector<Polynomial>& groebner_basis(const OrderPtr& order = nullptr, const Budget& budget = {}) const;

  bool is_zero() const;
  bool is_unit(const Budget& budget = {}) const;
  bool contains(const Polynomial& p, const Budget& budget = {}) const;
  bool contains(const Ideal& other, const Budget& budget = {}) const;

  friend Ideal operator+(const Ideal& a, const Ideal& b);
  friend Ideal operator*(const Ideal& a, const Ideal& b);

  /// Same ideal in `target`, mapping variables by name.
  Ideal mapped_to(RingPtr target) const;

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial> generators;
    mutable std::mutex mutex;
    mutable std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> cache;
  };
  std::shared_ptr<State> state_;
};

Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const OrderPtr& order = nullptr,
                       const Budget& budget = {});

/// I ∩ k[variables not in `eliminated`], generated inside the same ring.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> eliminated, const Budget& budget = {});
Ideal eliminate_block(const Ideal& ideal, std::string_view block, const Budget& budget = {});

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = {});
/// I : (f)
Ideal colon(const Ideal& ideal, const Polynomial& f, const Budget& budget = {});
/// I : J as the intersection of I : (f) over the generators f of J.
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by, const Budget& budget = {});
/// I : f^∞
Ideal saturate(const Ideal& ideal, const Polynomial& f, const Budget& budget = {});
bool radical_membership(const Polynomial& f, const Ideal& ideal, const Budget& budget = {});

struct DimHeight {
  int dim;
  int height;
};
/// Krull dimension of R/I and height of I; I must be proper.
DimHeight dim_height(const Ideal& ideal, const Budget& budget = {});

/// Hilbert series of R/I for homogeneous I (standard grading).
HilbertData hilbert(const Ideal& ideal, const Budget& budget = {});

bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget = {});

/// Ring with one extra variable `name` appended in its own block.
RingPtr with_auxiliary(const RingPtr& ring, const std::string& name);

}  // namespace blowup
