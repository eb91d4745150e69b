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

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/field.hpp"

namespace blowup {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr unsigned kMaxDegree = 127;

namespace detail {
inline constexpr std::uint64_t kHigh = 0x8080808080808080ull;
inline constexpr std::uint64_t kLow7 = 0x7f7f7f7f7f7f7f7full;
inline constexpr std::uint64_t kOnes = 0x0101010101010101ull;

// Byte-lane helpers; every lane holds a value below 128.
constexpr std::uint64_t nonzero_lanes(std::uint64_t x) { return (x + kLow7) & kHigh; }
constexpr unsigned lane_sum(std::uint64_t x) { return static_cast<unsigned>((x * kOnes) >> 56); }
}  // namespace detail

/// Exponent vector packed one byte per variable. Total degree is at most
/// kMaxDegree, so every lane and every lane sum stays below 128.
class Monomial {
 public:
  using Words = std::array<std::uint64_t, kMaxVars / 8>;

  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exps) {
    if (exps.size() > kMaxVars) throw DegreeOverflow("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }

  constexpr unsigned operator[](std::size_t i) const {
    return static_cast<unsigned>((words_[i >> 3] >> ((i & 7) * 8)) & 0xff);
  }

  void set(std::size_t i, unsigned e) {
    unsigned old = (*this)[i];
    if (degree_ - old + e > kMaxDegree) throw DegreeOverflow("monomial degree exceeds 127");
    std::uint64_t shift = (i & 7) * 8;
    words_[i >> 3] = (words_[i >> 3] & ~(0xffull << shift)) | (std::uint64_t{e} << shift);
    degree_ = degree_ - old + e;
  }

  constexpr unsigned degree() const { return degree_; }
  constexpr const Words& words() const { return words_; }
  constexpr bool is_one() const { return degree_ == 0; }

  constexpr bool divides(const Monomial& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((((other.words_[k] | detail::kHigh) - words_[k]) & detail::kHigh) != detail::kHigh) {
        return false;
      }
    }
    return true;
  }

  /// other / *this; caller guarantees divisibility.
  constexpr Monomial quotient_of(const Monomial& other) const {
    Monomial q;
    for (std::size_t k = 0; k < words_.size(); ++k) q.words_[k] = other.words_[k] - words_[k];
    q.degree_ = other.degree_ - degree_;
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.degree_ + b.degree_ > kMaxDegree) throw DegreeOverflow("monomial degree exceeds 127");
    Monomial m;
    for (std::size_t k = 0; k < a.words_.size(); ++k) m.words_[k] = a.words_[k] + b.words_[k];
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    unsigned deg = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      std::uint64_t sel = (((a.words_[k] | detail::kHigh) - b.words_[k]) & detail::kHigh) >> 7;
      sel *= 0xff;
      m.words_[k] = (a.words_[k] & sel) | (b.words_[k] & ~sel);
      deg += detail::lane_sum(m.words_[k]);
    }
    if (deg > kMaxDegree) throw DegreeOverflow("monomial degree exceeds 127");
    m.degree_ = deg;
    return m;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    unsigned deg = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      std::uint64_t sel = (((a.words_[k] | detail::kHigh) - b.words_[k]) & detail::kHigh) >> 7;
      sel *= 0xff;
      m.words_[k] = (b.words_[k] & sel) | (a.words_[k] & ~sel);
      deg += detail::lane_sum(m.words_[k]);
    }
    m.degree_ = deg;
    return m;
  }

  friend constexpr bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      if (detail::nonzero_lanes(a.words_[k]) & detail::nonzero_lanes(b.words_[k])) return false;
    }
    return true;
  }

  /// Bit i set iff variable i occurs.
  constexpr std::uint32_t support() const {
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t nz = detail::nonzero_lanes(words_[k]) >> 7;
      // gather one bit per lane
      std::uint32_t bits = static_cast<std::uint32_t>((nz * 0x0102040810204080ull) >> 56);
      s |= bits << (8 * k);
    }
    return s;
  }

  friend constexpr bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

 private:
  Words words_{};
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A product of graded reverse-lexicographic orders on consecutive variable
/// groups: monomials are compared group by group, first by degree in the group
/// and then reverse-lexicographically inside it. One group covering all
/// variables is grevlex; one group per variable is lex; a group of eliminated
/// variables followed by the rest is a block elimination order.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  /// groups: each entry lists the variable indices of one group (any order;
  /// reverse-lex treats the highest index in a group as smallest).
  MonomialOrder(std::size_t nvars, std::vector<std::vector<std::size_t>> groups, Kind kind);

  static std::shared_ptr<const MonomialOrder> grevlex(std::size_t nvars);
  static std::shared_ptr<const MonomialOrder> lex(std::size_t nvars);
  /// Eliminated variables form the front group; the remaining variables follow in grevlex.
  static std::shared_ptr<const MonomialOrder> elimination(std::size_t nvars,
                                                          std::span<const std::size_t> eliminated);

  int compare(const Monomial& a, const Monomial& b) const {
    if (single_) return compare_group(a, b, masks_[0], true);
    for (const auto& mask : masks_) {
      if (int c = compare_group(a, b, mask, false)) return c;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::size_t nvars() const { return nvars_; }
  Kind kind() const { return kind_; }
  /// Stable textual identity, used as a cache key.
  const std::string& key() const { return key_; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.key_ == b.key_; }

 private:
  static int compare_group(const Monomial& a, const Monomial& b, const Monomial::Words& mask, bool whole) {
    const auto& wa = a.words();
    const auto& wb = b.words();
    unsigned da = 0, db = 0;
    if (whole) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t k = 0; k < mask.size(); ++k) {
        da += detail::lane_sum(wa[k] & mask[k]);
        db += detail::lane_sum(wb[k] & mask[k]);
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = mask.size(); k-- > 0;) {
      std::uint64_t x = (wa[k] ^ wb[k]) & mask[k];
      if (x) {
        unsigned shift = (63 - std::countl_zero(x)) & ~7u;
        unsigned ea = (wa[k] >> shift) & 0xff;
        unsigned eb = (wb[k] >> shift) & 0xff;
        return ea < eb ? 1 : -1;
      }
    }
    return 0;
  }

  std::size_t nvars_;
  Kind kind_;
  bool single_ = false;
  std::vector<Monomial::Words> masks_;
  std::string key_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

/// A named group of variables sharing a bidegree.
struct VariableBlock {
  std::string name;
  std::vector<std::string> variables;
  int x_degree = 0;
  int t_degree = 0;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Immutable description of k[variables] over GF(p), organised in blocks.
class Ring {
 public:
  static RingPtr make(std::uint32_t characteristic, std::vector<VariableBlock> blocks);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::string& var_name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& var_names() const { return names_; }
  std::optional<std::size_t> var_index(std::string_view name) const;
  const std::vector<VariableBlock>& blocks() const { return blocks_; }
  /// Variable indices of the named block; throws if absent.
  std::vector<std::size_t> block_vars(std::string_view block) const;
  bool has_block(std::string_view block) const;
  /// Bidegree (dx, dT) contribution of variable i.
  std::pair<int, int> var_bidegree(std::size_t i) const { return var_bideg_.at(i); }

  const OrderPtr& grevlex() const { return grevlex_; }

  /// New ring with `block` appended after the existing variables; existing
  /// variable indices are unchanged.
  RingPtr extended(VariableBlock block) const;

  /// Same characteristic and the same variable names in the same blocks.
  bool same_as(const Ring& other) const;

  std::string describe() const;

 private:
  Ring(std::uint32_t characteristic, std::vector<VariableBlock> blocks);

  PrimeField field_;
  std::vector<VariableBlock> blocks_;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> var_bideg_;
  OrderPtr grevlex_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || a->same_as(*b); }

/// Three-way comparison of two monomials of `ring` under `order`.
std::strong_ordering order_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace blowup
