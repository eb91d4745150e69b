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

#include "blowup/errors.hpp"

namespace blowup {

using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

constexpr bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

/// GF(p) with p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  explicit constexpr PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
      throw ValidationError("characteristic must be a prime below 2^31");
    }
  }

  constexpr std::uint32_t characteristic() const { return p_; }

  constexpr Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  constexpr Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  constexpr Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  constexpr Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }

  constexpr Coeff inv(Coeff a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return static_cast<Coeff>(t < 0 ? t + p_ : t);
  }

  constexpr Coeff from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  /// Symmetric representative in (-p/2, p/2].
  constexpr std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend constexpr bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace blowup
