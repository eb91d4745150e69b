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

#include "blowup/instance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("instance invariant violated: " + what);
}

bool all_zero(const PolyMatrix& m) { return m.is_zero(); }

PolyMatrix mapped(const PolyMatrix& m, const RingPtr& target) {
  PolyMatrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = map_by_name(m(i, j), target);
  }
  return out;
}

PolyMatrix column(const RingPtr& ring, std::span<const Polynomial> v) { return row_vector(ring, v).transposed(); }

}  // namespace

CoefficientStream::CoefficientStream(std::uint64_t seed, std::uint32_t subseed, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), subseed, tag};
  engine_.seed(seq);
}

Coeff CoefficientStream::next(std::uint32_t p) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % p + 1) % p;
  while (true) {
    std::uint64_t v = engine_();
    if (v <= limit) return static_cast<Coeff>(v % p);
  }
}

RingPtr make_x_ring(std::size_t d, std::uint32_t p) { return Ring::make(p, {{"x", numbered("x", d), 1, 0}}); }

RingPtr make_t_ring(std::size_t n, std::uint32_t p) { return Ring::make(p, {{"T", numbered("T", n), 0, 1}}); }

RingPtr make_s_ring(std::size_t d, std::size_t n, std::uint32_t p) {
  return Ring::make(p, {{"x", numbered("x", d), 1, 0}, {"T", numbered("T", n), 0, 1}});
}

std::size_t AlternatingPresentation::entry_index(std::size_t i, std::size_t j) const {
  // Rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) entries.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void AlternatingPresentation::validate() const {
  if (!is_prime(characteristic)) throw ValidationError("characteristic " + std::to_string(characteristic) + " is not prime");
  if (n < 3 || n % 2 == 0) throw ValidationError("n must be odd and at least 3 (got " + std::to_string(n) + ")");
  if (d < 3) throw ValidationError("d must be at least 3 (got " + std::to_string(d) + ")");
  if (d + n + 2 > kMaxVars) throw ValidationError("d + n must be at most " + std::to_string(kMaxVars - 2));
  if (entries.size() != n * (n - 1) / 2) throw ValidationError("wrong number of matrix entries");
  for (const auto& e : entries) {
    if (e.size() != d) throw ValidationError("entry coefficient vector must have length d");
    for (auto c : e) {
      if (c >= characteristic) throw ValidationError("coefficient out of range");
    }
  }
}

PolyMatrix AlternatingPresentation::phi(const RingPtr& r) const {
  PolyMatrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Term> terms;
      const auto& e = entries[entry_index(i, j)];
      for (std::size_t k = 0; k < d; ++k) {
        Monomial mono;
        mono.set(k, 1);
        terms.push_back({mono, e[k]});
      }
      m(i, j) = Polynomial::from_terms(r, r->grevlex(), std::move(terms));
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

std::string AlternatingPresentation::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["char"] = characteristic;
  j["d"] = d;
  j["n"] = n;
  j["seed"] = seed;
  j["resamples"] = resamples;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = i + 1; k < n; ++k) row.push_back(entries[entry_index(i, k)]);
    rows.push_back(std::move(row));
  }
  j["phi"] = std::move(rows);
  return j.dump() + "\n";
}

AlternatingPresentation AlternatingPresentation::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw ValidationError(std::string("instance is missing \"") + key + "\"");
    return j.at(key);
  };
  AlternatingPresentation p;
  try {
    if (j.contains("format") && j.at("format").get<int>() != 1) throw ValidationError("unsupported instance format");
    p.characteristic = need("char").get<std::uint32_t>();
    p.d = need("d").get<std::size_t>();
    p.n = need("n").get<std::size_t>();
    p.seed = j.value("seed", std::uint64_t{0});
    p.resamples = j.value("resamples", std::uint32_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed instance header: ") + e.what());
  }
  if (!is_prime(p.characteristic)) throw ValidationError("characteristic is not prime");
  const auto& rows = need("phi");
  if (!rows.is_array() || rows.size() != p.n) throw ValidationError("phi must have n rows");

  const std::int64_t mod = p.characteristic;
  auto read_entry = [&](const nlohmann::json& e) {
    if (!e.is_array() || e.size() != p.d) throw ValidationError("each entry of phi must list d coefficients");
    std::vector<Coeff> out;
    for (const auto& c : e) {
      if (!c.is_number_integer()) throw ValidationError("coefficients must be integers");
      std::int64_t v = c.get<std::int64_t>() % mod;
      out.push_back(static_cast<Coeff>(v < 0 ? v + mod : v));
    }
    return out;
  };

  bool square = std::all_of(rows.begin(), rows.end(), [&](const nlohmann::json& r) { return r.is_array() && r.size() == p.n; });
  p.entries.assign(p.n * (p.n - 1) / 2, {});
  if (square) {
    std::vector<std::vector<std::vector<Coeff>>> full(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
      for (const auto& e : rows[i]) full[i].push_back(read_entry(e));
    }
    for (std::size_t i = 0; i < p.n; ++i) {
      if (std::any_of(full[i][i].begin(), full[i][i].end(), [](Coeff c) { return c != 0; })) {
        throw ValidationError("phi is not alternating: nonzero diagonal entry at row " + std::to_string(i + 1));
      }
      for (std::size_t k = i + 1; k < p.n; ++k) {
        for (std::size_t v = 0; v < p.d; ++v) {
          if ((full[i][k][v] + full[k][i][v]) % p.characteristic != 0) {
            throw ValidationError("phi is not alternating: entries (" + std::to_string(i + 1) + "," +
                                  std::to_string(k + 1) + ") and (" + std::to_string(k + 1) + "," +
                                  std::to_string(i + 1) + ") are not negatives");
          }
        }
        p.entries[p.entry_index(i, k)] = full[i][k];
      }
    }
  } else {
    for (std::size_t i = 0; i < p.n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != p.n - 1 - i) {
        throw ValidationError("row " + std::to_string(i + 1) + " of phi must hold " + std::to_string(p.n - 1 - i) +
                              " upper-triangle entries");
      }
      for (std::size_t k = i + 1; k < p.n; ++k) p.entries[p.entry_index(i, k)] = read_entry(rows[i][k - i - 1]);
    }
  }
  p.validate();
  return p;
}

AlternatingPresentation draw_presentation(std::size_t d, std::size_t n, std::uint32_t characteristic,
                                          std::uint64_t seed, std::uint32_t subseed) {
  AlternatingPresentation p;
  p.d = d;
  p.n = n;
  p.characteristic = characteristic;
  p.seed = seed;
  p.resamples = subseed;
  p.entries.assign(n * (n - 1) / 2, std::vector<Coeff>(d, 0));
  if (!is_prime(characteristic)) throw ValidationError("characteristic " + std::to_string(characteristic) + " is not prime");
  if (n < 3 || n % 2 == 0) throw ValidationError("n must be odd and at least 3 (got " + std::to_string(n) + ")");
  if (d < 3) throw ValidationError("d must be at least 3 (got " + std::to_string(d) + ")");
  CoefficientStream stream(seed, subseed);
  for (auto& e : p.entries) {
    for (auto& c : e) c = stream.next(characteristic);
  }
  p.validate();
  return p;
}

AlternatingPresentation random_presentation(std::size_t d, std::size_t n, std::uint32_t characteristic,
                                            std::uint64_t seed) {
  constexpr std::uint32_t kMaxDraws = 64;
  for (std::uint32_t sub = 0; sub < kMaxDraws; ++sub) {
    AlternatingPresentation p = draw_presentation(d, n, characteristic, seed, sub);
    const RingPtr r = make_x_ring(d, characteristic);
    const PolyMatrix phi = p.phi(r);
    try {
      be_generators(phi);
    } catch (const DegenerateInstance&) {
      continue;
    }
    if (satisfies_gd(fitting_heights(phi))) return p;
  }
  throw DegenerateInstance("no generic presentation found after " + std::to_string(kMaxDraws) + " draws");
}

std::vector<Polynomial> be_generators(const PolyMatrix& phi, const Budget& budget) {
  std::vector<Polynomial> g = signed_submax_pfaffians(phi, 1);
  require((phi * column(phi.ring(), g)).is_zero(), "phi * g^t = 0");
  Ideal ideal(phi.ring(), g);
  if (ideal.is_zero()) throw DegenerateInstance("all submaximal Pfaffians vanish");
  const int height = dim_height(ideal, budget).height;
  if (height != 3) throw DegenerateInstance("ideal of submaximal Pfaffians has height " + std::to_string(height));
  return g;
}

std::vector<int> fitting_heights(const PolyMatrix& phi, const Budget& budget) {
  const std::size_t n = phi.rows();
  const std::size_t d = phi.ring()->nvars();
  std::vector<int> heights;
  for (std::size_t i = 1; i < d; ++i) {
    if (i >= n) {
      heights.push_back(static_cast<int>(d));
      continue;
    }
    const std::size_t size = n - i;
    std::vector<std::size_t> all(n);
    for (std::size_t k = 0; k < n; ++k) all[k] = k;
    std::vector<Polynomial> minors;
    for (const auto& rows : combinations(n, size)) {
      for (auto& m : maximal_minors(phi.submatrix(rows, all))) {
        if (!m.is_zero()) minors.push_back(std::move(m));
      }
    }
    Ideal ideal(phi.ring(), std::move(minors));
    heights.push_back(ideal.is_zero() ? 0 : dim_height(ideal, budget).height);
  }
  return heights;
}

bool satisfies_gd(const std::vector<int>& heights) {
  for (std::size_t k = 0; k < heights.size(); ++k) {
    if (heights[k] < static_cast<int>(k) + 2) return false;
  }
  return true;
}

PolyMatrix jacobian_dual(const PolyMatrix& phi, const RingPtr& t_ring) {
  const std::size_t d = phi.ring()->nvars();
  if (t_ring->nvars() != phi.rows()) throw ValidationError("T ring must have one variable per row of phi");
  PolyMatrix b(t_ring, d, phi.cols());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    const Polynomial ti = Polynomial::variable(t_ring, i);
    for (std::size_t c = 0; c < phi.cols(); ++c) {
      const Polynomial& e = phi(i, c);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.total_degree() != 1) throw ValidationError("entries of phi must be linear forms");
      for (const auto& t : e.terms()) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(t.monomial.support()));
        b(j, c) += ti.scaled(t.coeff);
      }
    }
  }
  return b;
}

PolyMatrix bordered_matrix(const PolyMatrix& phi, const PolyMatrix& b, const RingPtr& s_ring) {
  const std::size_t n = phi.rows(), d = b.rows();
  if (phi.cols() != n || b.cols() != n) throw ValidationError("bordered matrix shapes do not match");
  PolyMatrix out(s_ring, n + d, n + d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = map_by_name(phi(i, j), s_ring);
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      Polynomial e = map_by_name(b(j, c), s_ring);
      out(c, n + j) = -e;
      out(n + j, c) = std::move(e);
    }
  }
  return out;
}

Ideal symmetric_ideal(const PolyMatrix& phi, const RingPtr& s_ring) {
  const auto t_vars = s_ring->block_vars("T");
  if (t_vars.size() != phi.rows()) throw ValidationError("the T-block must have one variable per row of phi");
  std::vector<Polynomial> ts;
  for (auto v : t_vars) ts.push_back(Polynomial::variable(s_ring, v));
  const PolyMatrix row = row_vector(s_ring, ts) * mapped(phi, s_ring);
  std::vector<Polynomial> gens;
  for (std::size_t c = 0; c < phi.cols(); ++c) gens.push_back(row(0, c));
  return Ideal(s_ring, std::move(gens));
}

FVector f_vector(const PolyMatrix& bordered, std::size_t d, std::size_t n) {
  const RingPtr& s = bordered.ring();
  if (bordered.rows() != n + d) throw ValidationError("bordered matrix has the wrong size");
  FVector out{{}, Polynomial(s)};
  if ((n + d) % 2 == 0) {
    out.f.assign(n + d, Polynomial(s));
    return out;
  }
  out.f = signed_submax_pfaffians(bordered, static_cast<int>(n + d));
  const Polynomial xd = Polynomial::variable(s, d - 1);
  try {
    out.h = exact_div(out.f[n + d - 1], -xd);
  } catch (const NotDivisible&) {
    throw std::logic_error("F_{n+d} is not divisible by x_d");
  }
  for (std::size_t i = 0; i < n; ++i) require(out.f[i] == out.h * Polynomial::variable(s, d + i), "F_i = h T_i");
  for (std::size_t j = 0; j < d; ++j) require(out.f[n + j] == -(out.h * Polynomial::variable(s, j)), "F_{n+j} = -h x_j");
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial m;
  // Recursive fill from the first variable down.
  auto rec = [&](auto& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      m.set(var, left);
      out.push_back(m);
      m.set(var, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(var, e);
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, degree);
  return out;
}

BlowupInstance::BlowupInstance(AlternatingPresentation presentation, const Budget& budget)
    : pres_(std::move(presentation)),
      r_(make_x_ring(pres_.d, pres_.characteristic)),
      t_(make_t_ring(pres_.n, pres_.characteristic)),
      s_(make_s_ring(pres_.d, pres_.n, pres_.characteristic)),
      phi_(r_, 0, 0),
      b_(t_, 0, 0),
      bordered_(s_, 0, 0),
      fv_{{}, Polynomial(s_)},
      c_phi_(Ideal::zero(t_)),
      l_(Ideal::zero(s_)),
      id_b_(Ideal::zero(t_)),
      candidate_rees_(Ideal::zero(s_)),
      candidate_fiber_(Ideal::zero(t_)) {
  pres_.validate();
  const std::size_t d = pres_.d, n = pres_.n;
  phi_ = pres_.phi(r_);
  g_ = be_generators(phi_, budget);
  b_ = jacobian_dual(phi_, t_);
  bordered_ = bordered_matrix(phi_, b_, s_);
  require(bordered_.is_alternating(), "bordered matrix is alternating");

  const auto xs = x_in_s();
  const auto ts = t_in_s();
  const PolyMatrix phi_s = mapped(phi_, s_);
  const PolyMatrix b_s = mapped(b_, s_);
  const PolyMatrix t_phi = row_vector(s_, ts) * phi_s;
  require(t_phi == row_vector(s_, xs) * b_s, "T * phi = x * B");
  std::vector<Polynomial> t_vars;
  for (std::size_t i = 0; i < n; ++i) t_vars.push_back(Polynomial::variable(t_, i));
  require(all_zero(b_ * column(t_, t_vars)), "B * T^t = 0");

  std::vector<Polynomial> tx = ts;
  for (const auto& x : xs) tx.push_back(-x);
  require(all_zero(row_vector(s_, tx) * bordered_), "(T, -x) * bordered = 0");

  fv_ = f_vector(bordered_, d, n);
  if (!fv_.h.is_zero()) {
    auto bideg = bidegree_of(fv_.h);
    require(bideg && bideg->first == static_cast<int>((n - d - 1) / 2) && bideg->second == static_cast<int>(d - 1),
            "bidegree of h is ((n-d-1)/2, d-1)");
  }

  c_phi_ = content_ideal(ContentMethod::content);
  for (const auto& c : c_phi_.generators()) {
    require(c.is_homogeneous() && c.total_degree() == static_cast<int>(d) - 1, "C(phi) is generated in degree d-1");
  }
  if (n <= d || (n + d) % 2 == 0) require(c_phi_.is_zero(), "C(phi) = 0 when n <= d or n + d is even");

  l_ = symmetric_ideal(phi_, s_);
  id_b_ = d <= n ? Ideal(t_, maximal_minors(b_)) : Ideal::zero(t_);
  candidate_fiber_ = id_b_ + c_phi_;
  candidate_rees_ = l_ + candidate_fiber_.mapped_to(s_);
}

std::string AlternatingPresentation::id() const {
  return "d" + std::to_string(d) + "-n" + std::to_string(n) + "-p" + std::to_string(characteristic) + "-s" +
         std::to_string(seed);
}

std::string BlowupInstance::id() const { return pres_.id(); }

std::vector<Polynomial> BlowupInstance::x_in_s() const {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < pres_.d; ++j) out.push_back(Polynomial::variable(s_, j));
  return out;
}

std::vector<Polynomial> BlowupInstance::t_in_s() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < pres_.n; ++i) out.push_back(Polynomial::variable(s_, pres_.d + i));
  return out;
}

Ideal BlowupInstance::content_of_f(std::size_t k) const {
  if (k < 1 || k > fv_.f.size()) throw std::out_of_range("F index out of range");
  std::vector<Polynomial> gens;
  for (const auto& c : content_in_T(fv_.f[k - 1])) gens.push_back(map_by_name(c, t_));
  return Ideal(t_, std::move(gens));
}

Ideal BlowupInstance::content_ideal(ContentMethod method, std::size_t index) const {
  const std::size_t d = pres_.d, n = pres_.n;
  if (method == ContentMethod::content) return content_of_f(n + d);
  if (n <= d || (n + d) % 2 == 0) return Ideal::zero(t_);
  PfaffianTable pf(phi_);
  std::vector<Polynomial> gens;

  if (method == ContentMethod::fM) {
    if (index < 1 || index > n) throw std::out_of_range("fM index must lie in 1..n");
    const std::size_t i = index - 1;
    struct Piece {
      const Polynomial* pf;
      Polynomial delta;
    };
    std::vector<Piece> pieces;
    for (auto js : combinations(n - 1, d)) {
      std::size_t s = 0, sum = 0;
      for (auto& j : js) {
        if (j >= i) ++j;
        if (j < i) ++s;
        sum += j + 1;
      }
      const bool negative = (sum - d + s) % 2 == 1;
      Polynomial delta = delta_J(b_, js);
      if (delta.is_zero()) continue;
      std::vector<std::size_t> removed = js;
      removed.push_back(i);
      pieces.push_back({&pf.without(removed), negative ? -delta : delta});
    }
    const Polynomial ti = Polynomial::variable(t_, i);
    for (const auto& m : monomials_of_degree(d, static_cast<unsigned>((n - d - 1) / 2))) {
      Polynomial sum(t_);
      for (const auto& piece : pieces) {
        if (Coeff c = piece.pf->coefficient(m)) sum += piece.delta.scaled(c);
      }
      gens.push_back(exact_div(sum, ti));
    }
  } else {
    if (index < 1 || index > d) throw std::out_of_range("hM index must lie in 1..d");
    const std::size_t j = index - 1;
    struct Piece {
      const Polynomial* pf;
      Polynomial delta;
    };
    std::vector<Piece> pieces;
    for (const auto& js : combinations(n, d - 1)) {
      std::size_t sum = 0;
      for (auto k : js) sum += k + 1;
      Polynomial delta = delta_J(b_, js, j);
      if (delta.is_zero()) continue;
      pieces.push_back({&pf.without(js), sum % 2 ? -delta : delta});
    }
    for (const auto& m : monomials_of_degree(d, static_cast<unsigned>((n - d + 1) / 2))) {
      if (m[j] == 0) continue;
      Polynomial sum(t_);
      for (const auto& piece : pieces) {
        if (Coeff c = piece.pf->coefficient(m)) sum += piece.delta.scaled(c);
      }
      gens.push_back(std::move(sum));
    }
  }
  return Ideal(t_, std::move(gens));
}

}  // namespace blowup
