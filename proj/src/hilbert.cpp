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

#include "blowup/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace blowup {

namespace {

void add_shifted(IntPoly& acc, const IntPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    std::uint32_t s = g.support();
    if (seen & s) return false;
    seen |= s;
  }
  return true;
}

// Pivot recursion: K(M) = K(M + (p)) + z^deg(p) K(M : p) with p a pure power.
IntPoly numerator_rec(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  if (pairwise_coprime(gens)) {
    IntPoly prod{1};
    for (const auto& g : gens) {
      IntPoly next(prod.size() + g.degree(), 0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i] += prod[i];
        next[i + g.degree()] -= prod[i];
      }
      prod = std::move(next);
    }
    return prod;
  }

  // Most frequent variable among generators with at least two variables.
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens) {
    std::uint32_t s = g.support();
    if (std::popcount(s) < 2) continue;
    for (; s; s &= s - 1) ++count[static_cast<std::size_t>(std::countr_zero(s))];
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<unsigned> exps;
  for (const auto& g : gens) {
    if (std::popcount(g.support()) >= 2 && g[var] > 0) exps.push_back(g[var]);
  }
  std::nth_element(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(exps.size() / 2), exps.end());
  unsigned e = exps[exps.size() / 2];
  Monomial pivot;
  pivot.set(var, e);

  std::vector<Monomial> sum{pivot};
  for (const auto& g : gens) {
    if (!pivot.divides(g)) sum.push_back(g);
  }
  std::vector<Monomial> quot;
  quot.reserve(gens.size());
  for (const auto& g : gens) quot.push_back(gcd(g, pivot).quotient_of(g));

  IntPoly result = numerator_rec(minimalize(std::move(sum)));
  add_shifted(result, numerator_rec(minimalize(std::move(quot))), e);
  trim(result);
  return result;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.words() < b.words();
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

IntPoly monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  (void)nvars;
  IntPoly n = numerator_rec(minimalize(std::move(gens)));
  trim(n);
  return n;
}

HilbertData hilbert_from_numerator(IntPoly numerator, std::size_t nvars) {
  trim(numerator);
  if (numerator.empty()) throw ValidationError("Hilbert series of the zero ring");
  int dim = static_cast<int>(nvars);
  auto value_at_one = [](const IntPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (dim > 0 && value_at_one(numerator) == 0) {
    IntPoly q(numerator.size() - 1);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < numerator.size(); ++i) {
      run += numerator[i];
      q[i] = run;
    }
    numerator = std::move(q);
    trim(numerator);
    --dim;
  }
  HilbertData h;
  h.multiplicity = value_at_one(numerator);
  h.numerator = std::move(numerator);
  h.dim = dim;
  return h;
}

HilbertData monomial_hilbert(std::span<const Monomial> gens, std::size_t nvars) {
  return hilbert_from_numerator(monomial_ideal_numerator({gens.begin(), gens.end()}, nvars), nvars);
}

std::vector<std::int64_t> HilbertData::series(int max_degree) const {
  std::vector<std::int64_t> s(static_cast<std::size_t>(max_degree + 1), 0);
  for (std::size_t i = 0; i < numerator.size() && i < s.size(); ++i) s[i] = numerator[i];
  for (int k = 0; k < dim; ++k) {
    for (std::size_t i = 1; i < s.size(); ++i) s[i] += s[i - 1];
  }
  return s;
}

std::string HilbertData::numerator_string() const {
  std::string out;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    std::int64_t c = numerator[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += i == 1 ? std::string("z") : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

int monomial_height(std::span<const Monomial> gens, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    if (g.is_one()) throw ValidationError("height of the unit ideal");
    supports.push_back(g.support());
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  int best = static_cast<int>(nvars);
  // Branch on the variables of the first support not yet hit.
  std::function<void(std::uint32_t, int)> search = [&](std::uint32_t chosen, int size) {
    if (size >= best) return;
    auto unhit = std::find_if(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & chosen) == 0; });
    if (unhit == supports.end()) {
      best = size;
      return;
    }
    for (std::uint32_t s = *unhit; s; s &= s - 1) search(chosen | (s & (~s + 1)), size + 1);
  };
  search(0, 0);
  return supports.empty() ? 0 : best;
}

}  // namespace blowup
