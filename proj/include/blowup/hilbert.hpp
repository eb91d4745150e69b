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
#include <span>
#include <string>
#include <vector>

#include "blowup/ring.hpp"

namespace blowup {

/// Dense univariate integer polynomial, coefficient i of z^i.
using IntPoly = std::vector<std::int64_t>;

/// Hilbert series N(z) / (1 - z)^dim with N(1) != 0.
struct HilbertData {
  IntPoly numerator;
  int dim = 0;
  std::int64_t multiplicity = 0;

  /// Coefficients of the series in degrees 0..max_degree.
  std::vector<std::int64_t> series(int max_degree) const;
  std::string numerator_string() const;
};

/// K-polynomial of k[x_1..x_n]/(gens): the numerator over (1 - z)^n.
IntPoly monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// Reduces a numerator over (1 - z)^nvars to lowest terms.
HilbertData hilbert_from_numerator(IntPoly numerator, std::size_t nvars);

HilbertData monomial_hilbert(std::span<const Monomial> gens, std::size_t nvars);

/// Smallest set of variables meeting the support of every generator; its
/// size is the height of the monomial ideal.
int monomial_height(std::span<const Monomial> gens, std::size_t nvars);

/// Drops generators divisible by another; deterministic output order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

}  // namespace blowup
