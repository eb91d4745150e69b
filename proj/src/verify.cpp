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

#include "blowup/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b || a < 0) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (std::int64_t k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

const std::vector<std::string> kTheoremChecks{"main_a", "main_b",   "main_c",   "main_d", "multiplicity",
                                              "hilbert", "annihilator", "radical", "residual", "ladder"};

Ideal variables_ideal(const RingPtr& ring, std::size_t first, std::size_t count) {
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < count; ++k) gens.push_back(Polynomial::variable(ring, first + k));
  return Ideal(ring, std::move(gens));
}

/// First generator of `a` outside `b`, as a JSON witness; null when a ⊆ b.
nlohmann::ordered_json containment_witness(const Ideal& a, const Ideal& b, const Budget& budget) {
  for (const auto& g : a.generators()) {
    Polynomial nf = normal_form(g, b, nullptr, budget);
    if (!nf.is_zero()) {
      nlohmann::ordered_json w;
      w["element"] = g.to_string();
      w["normal_form"] = nf.to_string();
      return w;
    }
  }
  return nullptr;
}

/// Empty object on equality, otherwise which side has an element outside the other.
nlohmann::ordered_json equality_witness(const Ideal& lhs, const Ideal& rhs, const Budget& budget,
                                        const char* lhs_name, const char* rhs_name) {
  if (auto w = containment_witness(lhs, rhs, budget); !w.is_null()) {
    w["in"] = lhs_name;
    w["not_in"] = rhs_name;
    return w;
  }
  if (auto w = containment_witness(rhs, lhs, budget); !w.is_null()) {
    w["in"] = rhs_name;
    w["not_in"] = lhs_name;
    return w;
  }
  return nlohmann::ordered_json::object();
}

std::vector<int> degrees(const std::vector<Polynomial>& ps) {
  std::vector<int> out;
  for (const auto& p : ps) out.push_back(p.total_degree());
  std::sort(out.begin(), out.end());
  return out;
}

CheckRecord make(std::string name, bool ok, std::string detail = {}) {
  CheckRecord r;
  r.name = std::move(name);
  r.status = ok ? Status::pass : Status::fail;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::timeout: return "timeout";
    case Status::skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{"invariants", "gd",          "main_a",  "main_b",   "main_c",  "main_d",
                                              "multiplicity", "hilbert", "annihilator", "radical", "residual", "content",
                                              "ladder"};
  return names;
}

std::vector<std::string> parse_check_selection(std::string_view text) {
  std::vector<std::string> wanted;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item == "main") {
      for (const char* m : {"main_a", "main_b", "main_c", "main_d"}) wanted.emplace_back(m);
    } else if (item == "all") {
      return all_check_names();
    } else if (!item.empty()) {
      const auto& names = all_check_names();
      if (std::find(names.begin(), names.end(), item) == names.end()) throw ValidationError("unknown check \"" + item + "\"");
      wanted.push_back(item);
    }
    start = end + 1;
  }
  if (wanted.empty()) return all_check_names();
  std::vector<std::string> ordered;
  for (const auto& name : all_check_names()) {
    if (std::find(wanted.begin(), wanted.end(), name) != wanted.end()) ordered.push_back(name);
  }
  return ordered;
}

std::int64_t expected_multiplicity(std::size_t d, std::size_t n) {
  std::int64_t sum = 0;
  if (d > n) return 0;
  for (std::size_t i = 0; i <= (n - d) / 2; ++i) {
    sum += binomial(static_cast<std::int64_t>(n) - 2 - 2 * static_cast<std::int64_t>(i), static_cast<std::int64_t>(d) - 2);
  }
  return sum;
}

std::int64_t monomial_count_restatement(std::size_t d, std::size_t n) {
  std::int64_t count = 0;
  if (d > n || d < 2) return 0;
  for (std::size_t k = (n - d) % 2; k <= n - d; k += 2) {
    count += static_cast<std::int64_t>(monomials_of_degree(d - 1, static_cast<unsigned>(k)).size());
  }
  return count;
}

int annihilator_bound(std::size_t d, std::size_t n) {
  if (d % 2 == 1) return 1;
  return n + 1 >= d ? static_cast<int>((n - d + 1) / 2) : 0;
}

std::int64_t LaurentSeries::at(int degree) const {
  const int k = degree - lowest;
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(k)];
}

LaurentSeries closed_form_hilbert(std::size_t d_in, std::size_t n_in, int max_degree) {
  const int d = static_cast<int>(d_in), n = static_cast<int>(n_in);
  LaurentSeries out;
  out.lowest = std::min(0, 2 * d - n);
  out.coeffs.assign(static_cast<std::size_t>(max_degree - out.lowest + 1), 0);
  auto add = [&](int degree, std::int64_t c) {
    if (degree >= out.lowest && degree <= max_degree) out.coeffs[static_cast<std::size_t>(degree - out.lowest)] += c;
  };

  // Numerator of the rational part, as (exponent, coefficient) pairs.
  std::vector<std::pair<int, std::int64_t>> numerator;
  for (int l = 0; l <= d - 2; ++l) numerator.emplace_back(l, binomial(l + n - d - 1, n - d - 1));
  for (int l = 0; l <= n - d - 2; ++l) {
    const std::int64_t sign = (l + d + 1) % 2 == 0 ? 1 : -1;
    numerator.emplace_back(l + 2 * d - n, sign * binomial(l + d - 1, d - 1));
  }
  // 1/(1-z)^d contributes C(k + d - 1, d - 1) in degree k >= 0.
  for (const auto& [e, c] : numerator) {
    for (int k = 0; e + k <= max_degree; ++k) add(e + k, c * binomial(k + d - 1, d - 1));
  }

  const int top = n - d - 3 >= 0 ? (n - d - 3 + 1) / 2 : -((d + 3 - n) / 2);
  const std::int64_t sign = d % 2 == 0 ? 1 : -1;
  for (int j = 0; j <= top; ++j) add(2 * j + 2 * d - n, sign * binomial(j + d - 1, d - 1));
  return out;
}

Ideal residual_intersection(const BlowupInstance& inst, const std::vector<std::vector<Coeff>>& combos,
                            const Budget& budget) {
  const auto& g = inst.g();
  std::vector<Polynomial> fs;
  for (const auto& row : combos) {
    if (row.size() != g.size()) throw ValidationError("combination length must equal the number of generators");
    Polynomial f(inst.r_ring());
    for (std::size_t i = 0; i < g.size(); ++i) f += g[i].scaled(row[i]);
    fs.push_back(std::move(f));
  }
  return ideal_quotient(Ideal(inst.r_ring(), std::move(fs)), Ideal(inst.r_ring(), g), budget);
}

Ideal rees_by_elimination(std::span<const Polynomial> g, const RingPtr& s, const Budget& budget) {
  const auto t_vars = s->block_vars("T");
  if (t_vars.size() != g.size()) throw ValidationError("the T-block must have one variable per generator");
  const RingPtr st = with_auxiliary(s, "t");
  const Polynomial t = Polynomial::variable(st, st->nvars() - 1);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < g.size(); ++i) {
    gens.push_back(Polynomial::variable(st, t_vars[i]) - map_by_name(g[i], st) * t);
  }
  const std::size_t elim[] = {st->nvars() - 1};
  return eliminate(Ideal(st, std::move(gens)), elim, budget).mapped_to(s);
}

Ideal fiber_ideal(const Ideal& rees, const RingPtr& t_ring, const Budget& budget) {
  return eliminate_block(rees, "x", budget).mapped_to(t_ring);
}

Verifier::Verifier(const BlowupInstance& instance, Budget budget) : inst_(instance), budget_(std::move(budget)) {}

const Ideal& Verifier::rees() {
  if (!rees_) rees_ = rees_by_elimination(inst_.g(), inst_.s_ring(), budget_);
  return *rees_;
}

const Ideal& Verifier::fiber() {
  if (!fiber_) fiber_ = fiber_ideal(rees(), inst_.t_ring(), budget_);
  return *fiber_;
}

const Ideal& Verifier::l_colon_m() {
  if (!l_colon_m_) l_colon_m_ = ideal_quotient(inst_.l(), variables_ideal(inst_.s_ring(), 0, inst_.d()), budget_);
  return *l_colon_m_;
}

const Ideal& Verifier::idb_colon_t() {
  if (!idb_colon_t_) idb_colon_t_ = ideal_quotient(inst_.id_b(), variables_ideal(inst_.t_ring(), 0, inst_.n()), budget_);
  return *idb_colon_t_;
}

CheckRecord Verifier::check_invariants() {
  const auto& s = inst_.s_ring();
  const auto& t = inst_.t_ring();
  const auto xs = inst_.x_in_s();
  const auto ts = inst_.t_in_s();
  nlohmann::ordered_json cert;

  auto col = [](const RingPtr& ring, std::span<const Polynomial> v) { return row_vector(ring, v).transposed(); };
  cert["phi_g"] = (inst_.phi() * col(inst_.r_ring(), inst_.g())).is_zero();

  PolyMatrix phi_s(s, inst_.n(), inst_.n());
  for (std::size_t i = 0; i < inst_.n(); ++i) {
    for (std::size_t j = 0; j < inst_.n(); ++j) phi_s(i, j) = map_by_name(inst_.phi()(i, j), s);
  }
  PolyMatrix b_s(s, inst_.d(), inst_.n());
  for (std::size_t j = 0; j < inst_.d(); ++j) {
    for (std::size_t c = 0; c < inst_.n(); ++c) b_s(j, c) = map_by_name(inst_.b()(j, c), s);
  }
  cert["t_phi_equals_x_b"] = row_vector(s, ts) * phi_s == row_vector(s, xs) * b_s;

  std::vector<Polynomial> tv;
  for (std::size_t i = 0; i < inst_.n(); ++i) tv.push_back(Polynomial::variable(t, i));
  cert["b_t"] = (inst_.b() * col(t, tv)).is_zero();

  std::vector<Polynomial> tx = ts;
  for (const auto& x : xs) tx.push_back(-x);
  cert["t_minus_x_bordered"] = (row_vector(s, tx) * inst_.bordered()).is_zero();
  cert["bordered_alternating"] = inst_.bordered().is_alternating();

  bool factor = true;
  for (std::size_t k = 0; k < tx.size(); ++k) factor = factor && inst_.f()[k] == inst_.h() * tx[k];
  cert["f_equals_h_t_minus_x"] = factor;

  bool bideg_ok = true;
  if (!inst_.h().is_zero()) {
    auto bd = bidegree_of(inst_.h());
    bideg_ok = bd && bd->first == static_cast<int>((inst_.n() - inst_.d() - 1) / 2) &&
               bd->second == static_cast<int>(inst_.d()) - 1;
    if (bd) cert["h_bidegree"] = {bd->first, bd->second};
  } else {
    cert["h_bidegree"] = nullptr;
  }
  cert["h_bidegree_ok"] = bideg_ok;

  bool ok = true;
  std::string failed;
  for (const auto& [key, value] : cert.items()) {
    if (value.is_boolean() && !value.get<bool>()) {
      ok = false;
      failed += (failed.empty() ? "" : ", ") + key;
    }
  }
  auto r = make("invariants", ok, ok ? "structural identities hold" : "violated: " + failed);
  r.certificate = std::move(cert);
  return r;
}

CheckRecord Verifier::check_gd() {
  auto heights = fitting_heights(inst_.phi(), budget_);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  std::string violated;
  for (std::size_t k = 0; k < heights.size(); ++k) {
    const std::size_t i = k + 1;
    nlohmann::ordered_json e;
    e["i"] = i;
    e["minor_size"] = inst_.n() - i;
    e["height"] = heights[k];
    e["required"] = i + 1;
    list.push_back(e);
    if (heights[k] < static_cast<int>(i) + 1 && violated.empty()) violated = "i=" + std::to_string(i);
  }
  gd_ok_ = violated.empty();
  auto r = make("gd", *gd_ok_, *gd_ok_ ? "ht I_{n-i}(phi) > i for 0 < i < d" : "G_d fails at " + violated);
  r.certificate["fitting_heights"] = std::move(list);
  return r;
}

std::vector<CheckRecord> Verifier::check_main() {
  std::vector<CheckRecord> out;
  const Ideal& j = rees();
  const Ideal& ix = fiber();

  {
    bool eq = ideal_equal(j, inst_.candidate_rees(), budget_);
    auto r = make("main_a", eq, eq ? "Rees ideal equals L + I_d(B)S + C(phi)S" : "Rees ideal differs from the candidate");
    r.certificate["rees_generators"] = j.groebner_basis(nullptr, budget_).size();
    r.certificate["c_phi_zero"] = inst_.c_phi().is_zero();
    r.certificate["expected_form"] = inst_.c_phi().is_zero() && eq;
    if (!eq) r.certificate["witness"] = equality_witness(j, inst_.candidate_rees(), budget_, "rees", "candidate");
    out.push_back(std::move(r));
  }
  {
    bool eq = ideal_equal(ix, inst_.candidate_fiber(), budget_);
    auto r = make("main_b", eq, eq ? "I(X) equals I_d(B) + C(phi)" : "I(X) differs from the candidate");
    const auto& gb = ix.groebner_basis(nullptr, budget_);
    r.certificate["fiber_generators"] = gb.size();
    r.certificate["fiber_degrees"] = degrees(gb);
    if (!eq) r.certificate["witness"] = equality_witness(ix, inst_.candidate_fiber(), budget_, "fiber", "candidate");
    out.push_back(std::move(r));
  }
  {
    Ideal colon = ideal_quotient(l_colon_m(), variables_ideal(inst_.s_ring(), inst_.d(), inst_.n()), budget_);
    bool eq = ideal_equal(j, colon, budget_);
    auto r = make("main_c", eq, eq ? "Rees ideal equals (L : (x)) : (T)" : "Rees ideal differs from (L : (x)) : (T)");
    r.certificate["colon_generators"] = colon.groebner_basis(nullptr, budget_).size();
    if (!eq) r.certificate["witness"] = equality_witness(j, colon, budget_, "rees", "colon");
    out.push_back(std::move(r));
  }
  {
    const Ideal& colon = idb_colon_t();
    bool eq = ideal_equal(ix, colon, budget_);
    auto r = make("main_d", eq, eq ? "I(X) equals I_d(B) : (T)" : "I(X) differs from I_d(B) : (T)");
    r.certificate["colon_generators"] = colon.groebner_basis(nullptr, budget_).size();
    if (!eq) r.certificate["witness"] = equality_witness(ix, colon, budget_, "fiber", "colon");
    out.push_back(std::move(r));
  }
  return out;
}

CheckRecord Verifier::check_multiplicity() {
  const std::size_t d = inst_.d(), n = inst_.n();
  if (d > n) {
    CheckRecord r;
    r.name = "multiplicity";
    r.detail = "requires d <= n";
    return r;
  }
  HilbertData h = hilbert(fiber(), budget_);
  const std::int64_t expected = expected_multiplicity(d, n);
  const std::int64_t count = monomial_count_restatement(d, n);
  const bool ok = h.dim == static_cast<int>(d) && h.multiplicity == expected && count == expected;
  std::ostringstream detail;
  detail << "e(A) = " << h.multiplicity << " (expected " << expected << "), dim A = " << h.dim << " (expected " << d
         << ")";
  auto r = make("multiplicity", ok, detail.str());
  r.certificate["dim"] = h.dim;
  r.certificate["expected_dim"] = d;
  r.certificate["e_computed"] = h.multiplicity;
  r.certificate["e_expected"] = expected;
  r.certificate["monomial_count"] = count;
  r.certificate["numerator"] = h.numerator_string();
  return r;
}

CheckRecord Verifier::check_hilbert() {
  const std::size_t d = inst_.d(), n = inst_.n();
  if (d >= n) {
    CheckRecord r;
    r.name = "hilbert";
    r.detail = "requires d < n";
    return r;
  }
  const int height = dim_height(inst_.id_b(), budget_).height;
  const int top = static_cast<int>(2 * d);
  HilbertData h = hilbert(inst_.candidate_fiber(), budget_);
  const auto computed = h.series(top);
  const LaurentSeries closed = closed_form_hilbert(d, n, top);

  bool series_ok = true;
  std::vector<std::int64_t> closed_nonneg;
  for (int k = 0; k <= top; ++k) {
    closed_nonneg.push_back(closed.at(k));
    if (closed.at(k) != computed[static_cast<std::size_t>(k)]) series_ok = false;
  }
  bool negative_cancel = true;
  for (int k = closed.lowest; k < 0; ++k) negative_cancel = negative_cancel && closed.at(k) == 0;

  const std::int64_t expected = expected_multiplicity(d, n);
  const bool height_ok = height == static_cast<int>(n - d);
  const bool ok = series_ok && negative_cancel && height_ok && h.multiplicity == expected;
  std::string detail;
  if (ok) {
    detail = "series matches the closed form through degree " + std::to_string(top);
  } else if (!height_ok) {
    detail = "ht I_d(B) = " + std::to_string(height) + ", expected " + std::to_string(n - d);
  } else if (!series_ok || !negative_cancel) {
    detail = "series differs from the closed form";
  } else {
    detail = "multiplicity " + std::to_string(h.multiplicity) + " differs from " + std::to_string(expected);
  }
  auto r = make("hilbert", ok, detail);
  r.certificate["height_id_b"] = height;
  r.certificate["expected_height"] = n - d;
  r.certificate["numerator"] = h.numerator_string();
  r.certificate["dim"] = h.dim;
  r.certificate["series"] = computed;
  r.certificate["closed_form"] = closed_nonneg;
  r.certificate["negative_degrees_cancel"] = negative_cancel;
  r.certificate["multiplicity"] = h.multiplicity;
  return r;
}

CheckRecord Verifier::check_annihilator() {
  const std::size_t d = inst_.d(), n = inst_.n();
  const int bound = annihilator_bound(d, n);
  const auto& gens = rees().groebner_basis(nullptr, budget_);
  const Ideal& l = inst_.l();
  int minimal = -1;
  nlohmann::ordered_json witness;
  for (int e = 0; e <= bound && minimal < 0; ++e) {
    bool all = true;
    for (const auto& m : monomials_of_degree(d, static_cast<unsigned>(e))) {
      const Polynomial mono = Polynomial::monomial(inst_.s_ring(), m);
      for (const auto& q : gens) {
        Polynomial nf = normal_form(mono * q, l, nullptr, budget_);
        if (!nf.is_zero()) {
          all = false;
          witness["exponent"] = e;
          witness["monomial"] = mono.to_string();
          witness["generator"] = q.to_string();
          witness["normal_form"] = nf.to_string();
          break;
        }
      }
      if (!all) break;
    }
    if (all) minimal = e;
  }
  const bool ok = minimal >= 0;
  auto r = make("annihilator", ok,
                ok ? "m^" + std::to_string(minimal) + " J is contained in L (bound " + std::to_string(bound) + ")"
                   : "m^" + std::to_string(bound) + " J is not contained in L");
  r.certificate["bound"] = bound;
  r.certificate["minimal_exponent"] = ok ? nlohmann::ordered_json(minimal) : nlohmann::ordered_json(nullptr);
  if (!ok) r.certificate["witness"] = witness;
  return r;
}

CheckRecord Verifier::check_radical() {
  const Ideal& ix = fiber();
  const Ideal& idb = inst_.id_b();
  const Ideal& j = rees();
  const Ideal expected_s = inst_.l() + idb.mapped_to(inst_.s_ring());

  auto all_in_radical = [&](const Ideal& a, const Ideal& of) -> nlohmann::ordered_json {
    for (const auto& g : a.generators()) {
      if (!radical_membership(g, of, budget_)) return g.to_string();
    }
    return nullptr;
  };
  nlohmann::ordered_json cert;
  auto fiber_out = all_in_radical(ix, idb);
  auto idb_out = containment_witness(idb, ix, budget_);
  auto rees_out = all_in_radical(j, expected_s);
  auto expected_out = containment_witness(expected_s, j, budget_);
  cert["fiber_in_radical"] = fiber_out.is_null();
  cert["id_b_in_fiber"] = idb_out.is_null();
  cert["rees_in_radical"] = rees_out.is_null();
  cert["expected_in_rees"] = expected_out.is_null();
  const bool ok = fiber_out.is_null() && idb_out.is_null() && rees_out.is_null() && expected_out.is_null();
  if (!fiber_out.is_null()) cert["witness"] = fiber_out;
  if (!rees_out.is_null()) cert["witness"] = rees_out;
  if (!idb_out.is_null()) cert["witness"] = idb_out;
  if (!expected_out.is_null()) cert["witness"] = expected_out;
  auto r = make("radical", ok,
                ok ? "I(X) = rad I_d(B) and J = rad(L + I_d(B)S)" : "radical expected form fails");
  r.certificate = std::move(cert);
  return r;
}

CheckRecord Verifier::check_residual(int trials, std::uint64_t seed) {
  const std::size_t d = inst_.d(), n = inst_.n();
  if (d > n) {
    CheckRecord r;
    r.name = "residual";
    r.detail = "requires d <= n";
    return r;
  }
  const std::int64_t s = static_cast<std::int64_t>(d) - 1;
  const std::int64_t alpha = static_cast<std::int64_t>(n - d) + 1;
  std::int64_t expected = 0;
  for (std::int64_t i = 0; i <= (alpha - 1) / 2; ++i) expected += binomial(s + alpha - 2 - 2 * i, s - 1);

  nlohmann::ordered_json attempts = nlohmann::ordered_json::array();
  for (int trial = 0; trial < trials; ++trial) {
    CoefficientStream stream(seed ^ inst_.presentation().seed, static_cast<std::uint32_t>(trial), 0x72657369u);
    std::vector<std::vector<Coeff>> combos(static_cast<std::size_t>(s), std::vector<Coeff>(n));
    for (auto& row : combos) {
      for (auto& c : row) c = stream.next(inst_.presentation().characteristic);
    }
    Ideal jp = residual_intersection(inst_, combos, budget_);
    const int height = jp.is_zero() ? 0 : dim_height(jp, budget_).height;
    nlohmann::ordered_json a;
    a["trial"] = trial;
    a["height"] = height;
    if (height != s) {
      a["general"] = false;
      attempts.push_back(a);
      continue;
    }
    HilbertData h = hilbert(jp, budget_);
    a["general"] = true;
    a["dim"] = h.dim;
    a["multiplicity"] = h.multiplicity;
    attempts.push_back(a);
    const std::int64_t e_a = expected_multiplicity(d, n);
    const bool ok = h.dim == 1 && h.multiplicity == expected && expected == e_a;
    auto r = make("residual", ok,
                  "e(R/J') = " + std::to_string(h.multiplicity) + " (expected " + std::to_string(expected) +
                      "), dim R/J' = " + std::to_string(h.dim));
    r.certificate["s"] = s;
    r.certificate["alpha"] = alpha;
    r.certificate["e_expected"] = expected;
    r.certificate["e_A"] = e_a;
    r.certificate["attempts"] = std::move(attempts);
    return r;
  }
  auto r = make("residual", false, "all trials degenerate");
  r.certificate["attempts"] = std::move(attempts);
  return r;
}

CheckRecord Verifier::check_content() {
  const std::size_t d = inst_.d(), n = inst_.n();
  const Ideal& c = inst_.c_phi();
  const RingPtr& t = inst_.t_ring();
  nlohmann::ordered_json cert;
  std::vector<std::string> problems;

  bool methods = true;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!ideal_equal(inst_.content_ideal(ContentMethod::fM, i), c, budget_)) {
      methods = false;
      problems.push_back("fM(i=" + std::to_string(i) + ")");
    }
  }
  for (std::size_t j = 1; j <= d; ++j) {
    if (!ideal_equal(inst_.content_ideal(ContentMethod::hM, j), c, budget_)) {
      methods = false;
      problems.push_back("hM(j=" + std::to_string(j) + ")");
    }
  }
  cert["methods_agree"] = methods;

  bool contents = true;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Polynomial> scaled;
    const Polynomial ti = Polynomial::variable(t, i - 1);
    for (const auto& g : c.generators()) scaled.push_back(ti * g);
    if (!ideal_equal(inst_.content_of_f(i), Ideal(t, std::move(scaled)), budget_)) {
      contents = false;
      problems.push_back("c_T(F_" + std::to_string(i) + ")");
    }
  }
  for (std::size_t j = 1; j <= d; ++j) {
    if (!ideal_equal(inst_.content_of_f(n + j), c, budget_)) {
      contents = false;
      problems.push_back("c_T(F_{n+" + std::to_string(j) + "})");
    }
  }
  cert["contents_of_f"] = contents;

  bool degree_ok = std::all_of(c.generators().begin(), c.generators().end(), [&](const Polynomial& g) {
    return g.is_homogeneous() && g.total_degree() == static_cast<int>(d) - 1;
  });
  bool idb_degree_ok = std::all_of(inst_.id_b().generators().begin(), inst_.id_b().generators().end(),
                                   [&](const Polynomial& g) { return g.is_homogeneous() && g.total_degree() == static_cast<int>(d); });
  if (!degree_ok) problems.push_back("degree of C(phi)");
  if (!idb_degree_ok) problems.push_back("degree of I_d(B)");
  cert["c_phi_degree"] = static_cast<int>(d) - 1;
  cert["c_phi_generators"] = c.generators().size();
  cert["c_phi_zero"] = c.is_zero();

  bool socle = true;
  for (const auto& g : c.generators()) {
    for (std::size_t i = 0; i < n && socle; ++i) {
      socle = inst_.id_b().contains(Polynomial::variable(t, i) * g, budget_);
    }
  }
  if (!socle) problems.push_back("C(phi) outside I_d(B) : (T)");
  cert["in_socle"] = socle;

  bool vanishing = true;
  if (n <= d || (n + d) % 2 == 0) vanishing = c.is_zero();
  if (!vanishing) problems.push_back("C(phi) should vanish");

  bool principal = true;
  if (n == d + 1) {
    nlohmann::ordered_json signs = nlohmann::ordered_json::array();
    const RingPtr& s = inst_.s_ring();
    principal = c.groebner_basis(nullptr, budget_).size() == 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) cols.push_back(k);
      }
      Polynomial delta = delta_J(inst_.b(), cols);
      Polynomial q = exact_div(delta, Polynomial::variable(t, i));
      principal = principal && ideal_equal(Ideal(t, {q}), c, budget_);
      Polynomial ds = map_by_name(delta, s);
      const Polynomial& fi = inst_.f()[i];
      signs.push_back(fi == ds ? 1 : fi == -ds ? -1 : 0);
    }
    cert["f_i_over_delta_i"] = std::move(signs);
    if (!principal) problems.push_back("C(phi) != (Delta_i / T_i)");
  }
  cert["principal_delta_over_t"] = principal;

  const bool ok = problems.empty();
  std::string detail = !ok ? "" : c.is_zero() ? "C(phi) = 0 by every method" : "content, fM and hM agree; C(phi) in degree " + std::to_string(d - 1);
  for (const auto& p : problems) detail += (detail.empty() ? "failed: " : ", ") + p;
  auto r = make("content", ok, detail);
  r.certificate = std::move(cert);
  return r;
}

CheckRecord Verifier::check_ladder() {
  const Ideal& l = inst_.l();
  const Ideal l_idb = l + inst_.id_b().mapped_to(inst_.s_ring());
  const Ideal& lm = l_colon_m();
  const Ideal& j = rees();
  const Ideal& ix = fiber();
  const Ideal& colon_t = idb_colon_t();
  nlohmann::ordered_json cert;
  std::vector<std::string> problems;

  auto step = [&](const char* key, const Ideal& a, const Ideal& b) {
    auto w = containment_witness(a, b, budget_);
    cert[key] = w.is_null();
    if (!w.is_null()) {
      problems.push_back(key);
      cert[std::string(key) + "_witness"] = w;
    }
  };
  step("l_in_l_plus_idb", l, l_idb);
  step("l_plus_idb_in_l_colon_m", l_idb, lm);
  step("l_colon_m_in_rees", lm, j);
  step("candidate_fiber_in_idb_colon_t", inst_.candidate_fiber(), colon_t);
  step("idb_colon_t_in_fiber", colon_t, ix);

  const bool fiber_type = ideal_equal(j, l + ix.mapped_to(inst_.s_ring()), budget_);
  cert["fiber_type"] = fiber_type;
  if (!fiber_type) problems.push_back("fiber type");

  if (inst_.d() <= inst_.n()) {
    const int height = ix.is_zero() ? 0 : dim_height(ix, budget_).height;
    const int dim = static_cast<int>(inst_.n()) - height;
    cert["dim_a"] = dim;
    cert["height_fiber"] = height;
    if (dim != static_cast<int>(inst_.d())) problems.push_back("dim A != d");
    if (height != static_cast<int>(inst_.n() - inst_.d())) problems.push_back("ht I(X) != n - d");
  }
  const bool ok = problems.empty();
  std::string detail = ok ? "L in L + I_d(B)S in L : m in J; fiber type" : "";
  for (const auto& p : problems) detail += (detail.empty() ? "failed: " : ", ") + p;
  auto r = make("ladder", ok, detail);
  r.certificate = std::move(cert);
  return r;
}

std::vector<CheckRecord> Verifier::run(const VerifyOptions& options) {
  const auto& names = options.checks.empty() ? all_check_names() : options.checks;
  auto selected = [&](const std::string& name) { return std::find(names.begin(), names.end(), name) != names.end(); };
  std::vector<CheckRecord> out;

  auto timed = [&](const std::vector<std::string>& record_names, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckRecord> records;
    try {
      if (gd_ok_ == false && std::find(kTheoremChecks.begin(), kTheoremChecks.end(), record_names.front()) != kTheoremChecks.end()) {
        for (const auto& n : record_names) {
          CheckRecord r;
          r.name = n;
          r.detail = "skipped: G_d fails";
          records.push_back(std::move(r));
        }
      } else {
        records = body();
      }
    } catch (const Timeout& e) {
      records.clear();
      for (const auto& n : record_names) {
        CheckRecord r;
        r.name = n;
        r.status = Status::timeout;
        r.detail = e.what();
        records.push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      records.clear();
      for (const auto& n : record_names) {
        CheckRecord r;
        r.name = n;
        r.status = Status::fail;
        r.detail = std::string("error: ") + e.what();
        r.certificate["error"] = e.what();
        records.push_back(std::move(r));
      }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : records) {
      r.seconds = seconds / static_cast<double>(records.size());
      if (selected(r.name)) out.push_back(std::move(r));
    }
  };
  auto single = [](auto fn) { return [fn]() { return std::vector<CheckRecord>{fn()}; }; };

  if (selected("invariants")) timed({"invariants"}, single([&] { return check_invariants(); }));
  if (selected("gd")) timed({"gd"}, single([&] { return check_gd(); }));
  if (selected("main_a") || selected("main_b") || selected("main_c") || selected("main_d")) {
    timed({"main_a", "main_b", "main_c", "main_d"}, [&] { return check_main(); });
  }
  if (selected("multiplicity")) timed({"multiplicity"}, single([&] { return check_multiplicity(); }));
  if (selected("hilbert")) timed({"hilbert"}, single([&] { return check_hilbert(); }));
  if (selected("annihilator")) timed({"annihilator"}, single([&] { return check_annihilator(); }));
  if (selected("radical")) timed({"radical"}, single([&] { return check_radical(); }));
  if (selected("residual")) {
    timed({"residual"}, single([&] { return check_residual(options.residual_trials, options.residual_seed); }));
  }
  if (selected("content")) timed({"content"}, single([&] { return check_content(); }));
  if (selected("ladder")) timed({"ladder"}, single([&] { return check_ladder(); }));
  return out;
}

bool in_tier(std::size_t d, std::size_t n, std::string_view tier) {
  const bool required = (d == 3 && n == 5) || (d == 4 && n == 5) || (d == 5 && n == 5);
  if (tier == "required") return required;
  if (tier == "extended") return required || (d == 3 && n == 7) || (d == 4 && n == 7);
  throw ValidationError("unknown tier \"" + std::string(tier) + "\"");
}

bool VerificationReport::has_required_failure() const {
  if (!required) return false;
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckRecord& r) { return r.status == Status::fail || r.status == Status::timeout; });
}

VerificationReport verify_instance(const AlternatingPresentation& presentation, const VerifyOptions& options,
                                   std::string_view tier) {
  VerificationReport report;
  report.presentation = presentation;
  report.required = in_tier(presentation.d, presentation.n, tier);
  report.instance_id = presentation.id();
  auto setup_failed = [&](Status status, const std::string& detail) {
    for (const auto& name : options.checks.empty() ? all_check_names() : options.checks) {
      CheckRecord r;
      r.name = name;
      r.status = status;
      r.detail = "setup: " + detail;
      report.checks.push_back(std::move(r));
    }
  };
  std::unique_ptr<BlowupInstance> instance;
  try {
    instance = std::make_unique<BlowupInstance>(presentation, options.budget);
  } catch (const Timeout& e) {
    setup_failed(Status::timeout, e.what());
    return report;
  } catch (const DegenerateInstance& e) {
    setup_failed(Status::fail, e.what());
    return report;
  }
  Verifier verifier(*instance, options.budget);
  report.checks = verifier.run(options);
  return report;
}

}  // namespace blowup
