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
#include <random>
#include <string>
#include <vector>

#include "blowup/groebner.hpp"
#include "blowup/matrix.hpp"

namespace blowup {

/// Uniform elements of GF(p) from a seeded Mersenne Twister, drawn by
/// rejection so the stream is identical on every standard library.
class CoefficientStream {
 public:
  CoefficientStream(std::uint64_t seed, std::uint32_t subseed, std::uint32_t tag = 0x626c6f77u);
  Coeff next(std::uint32_t p);

 private:
  std::mt19937_64 engine_;
};

/// R = k[x1..xd].
RingPtr make_x_ring(std::size_t d, std::uint32_t p);
/// T = k[T1..Tn].
RingPtr make_t_ring(std::size_t n, std::uint32_t p);
/// S = k[x1..xd, T1..Tn] with blocks "x" and "T".
RingPtr make_s_ring(std::size_t d, std::size_t n, std::uint32_t p);

/// An n x n alternating matrix of linear forms in d variables, stored as the
/// coefficient vectors of the entries strictly above the diagonal.
struct AlternatingPresentation {
  std::size_t d = 0;
  std::size_t n = 0;
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::uint64_t seed = 0;
  std::uint32_t resamples = 0;
  /// entries[k] for the k-th pair (i, j), i < j, row-major; each of length d.
  std::vector<std::vector<Coeff>> entries;

  /// Index of (i, j), i < j, into `entries`.
  std::size_t entry_index(std::size_t i, std::size_t j) const;
  PolyMatrix phi(const RingPtr& r) const;
  /// Checks shapes, ranges and the (d, n) constraints.
  void validate() const;
  /// "d3-n5-p32003-s42"
  std::string id() const;

  std::string to_json() const;
  /// Accepts the upper-triangle layout or a full square matrix of
  /// coefficient vectors; the latter must be alternating.
  static AlternatingPresentation from_json(std::string_view text);

  friend bool operator==(const AlternatingPresentation&, const AlternatingPresentation&) = default;
};

/// Seeded draw of a presentation whose generators have height three and
/// satisfy G_d. Degenerate draws are redrawn with the next sub-seed.
AlternatingPresentation random_presentation(std::size_t d, std::size_t n,
                                            std::uint32_t characteristic = kDefaultCharacteristic,
                                            std::uint64_t seed = 0);

/// The same presentation without the genericity checks (sub-seed fixed).
AlternatingPresentation draw_presentation(std::size_t d, std::size_t n, std::uint32_t characteristic,
                                          std::uint64_t seed, std::uint32_t subseed);

/// Signed submaximal Pfaffians g_i = (-1)^(i+1) Pf(phi without i). Checks
/// phi * g^t = 0 and throws DegenerateInstance when ht(g) < 3.
std::vector<Polynomial> be_generators(const PolyMatrix& phi, const Budget& budget = {});

/// Heights of I_{n-i}(phi) for i = 1..d-1.
std::vector<int> fitting_heights(const PolyMatrix& phi, const Budget& budget = {});
bool satisfies_gd(const std::vector<int>& heights);

/// B with T * phi = x * B; entries of phi must be linear forms in the ring of x.
PolyMatrix jacobian_dual(const PolyMatrix& phi, const RingPtr& t_ring);

/// [[phi, -B^t], [B, 0]] over `s_ring`.
PolyMatrix bordered_matrix(const PolyMatrix& phi, const PolyMatrix& b, const RingPtr& s_ring);

/// Entries of T * phi as an ideal of `s_ring`.
Ideal symmetric_ideal(const PolyMatrix& phi, const RingPtr& s_ring);

struct FVector {
  std::vector<Polynomial> f;
  Polynomial h;
};
/// F_i = (-1)^(n+d-i) Pf(bordered without i) and h = -F_{n+d} / x_d. Throws
/// std::logic_error when F != h * (T, -x).
FVector f_vector(const PolyMatrix& bordered, std::size_t d, std::size_t n);

/// Monomials of the given degree in the first `nvars` variables, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

enum class ContentMethod { content, fM, hM };

class BlowupInstance {
 public:
  /// Builds every derived object and asserts the structural identities;
  /// throws DegenerateInstance when the generators have height below three.
  explicit BlowupInstance(AlternatingPresentation presentation, const Budget& budget = {});

  const AlternatingPresentation& presentation() const { return pres_; }
  std::size_t d() const { return pres_.d; }
  std::size_t n() const { return pres_.n; }
  std::string id() const;

  const RingPtr& r_ring() const { return r_; }
  const RingPtr& t_ring() const { return t_; }
  const RingPtr& s_ring() const { return s_; }

  const PolyMatrix& phi() const { return phi_; }
  const std::vector<Polynomial>& g() const { return g_; }
  const PolyMatrix& b() const { return b_; }
  const PolyMatrix& bordered() const { return bordered_; }
  const std::vector<Polynomial>& f() const { return fv_.f; }
  const Polynomial& h() const { return fv_.h; }

  /// x-variables and T-variables as elements of S.
  std::vector<Polynomial> x_in_s() const;
  std::vector<Polynomial> t_in_s() const;

  const Ideal& c_phi() const { return c_phi_; }
  const Ideal& l() const { return l_; }
  const Ideal& id_b() const { return id_b_; }
  const Ideal& candidate_rees() const { return candidate_rees_; }
  const Ideal& candidate_fiber() const { return candidate_fiber_; }

  /// C(phi) by one of three constructions; `index` is 1-based (i for fM, j
  /// for hM) and ignored for the content method.
  Ideal content_ideal(ContentMethod method, std::size_t index = 1) const;

  /// Content list of F_k (1-based) as an ideal of T.
  Ideal content_of_f(std::size_t k) const;

 private:
  AlternatingPresentation pres_;
  RingPtr r_, t_, s_;
  PolyMatrix phi_;
  std::vector<Polynomial> g_;
  PolyMatrix b_;
  PolyMatrix bordered_;
  FVector fv_;
  Ideal c_phi_, l_, id_b_, candidate_rees_, candidate_fiber_;
};

}  // namespace blowup
