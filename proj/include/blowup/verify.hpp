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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowup/instance.hpp"

namespace blowup {

enum class Status { pass, fail, timeout, skipped };
std::string_view status_name(Status s);

struct CheckRecord {
  std::string name;
  Status status = Status::skipped;
  std::string detail;
  nlohmann::ordered_json certificate = nlohmann::ordered_json::object();
  double seconds = 0;
};

/// Names of every check in dependency order.
const std::vector<std::string>& all_check_names();
/// Expands a comma-separated selection ("main" stands for main_a..main_d);
/// empty selects everything. Throws ValidationError on unknown names.
std::vector<std::string> parse_check_selection(std::string_view text);

/// e(A) as the binomial sum over i = 0..floor((n-d)/2) of C(n-2-2i, d-2).
std::int64_t expected_multiplicity(std::size_t d, std::size_t n);
/// Number of monomials in d-1 variables of degree <= n-d and of the same
/// parity as n-d, counted one by one.
std::int64_t monomial_count_restatement(std::size_t d, std::size_t n);
/// Annihilator exponent bound: 1 for d odd, (n-d+1)/2 for d even.
int annihilator_bound(std::size_t d, std::size_t n);

/// Coefficients in degrees lo..hi of a Laurent expression.
struct LaurentSeries {
  int lowest = 0;
  std::vector<std::int64_t> coeffs;
  std::int64_t at(int degree) const;
};
/// Closed-form Hilbert series of T/(I_d(B) + C(phi)) expanded through
/// `max_degree`, correction sum taken over j >= 0.
LaurentSeries closed_form_hilbert(std::size_t d, std::size_t n, int max_degree);

/// Kernel of S -> R[t], T_i -> g_i t: (T_i - g_i t) in S[t] with t eliminated.
/// The g_i live in a ring whose variables appear by name in `s_ring`, whose
/// T-block has one variable per g_i.
Ideal rees_by_elimination(std::span<const Polynomial> g, const RingPtr& s_ring, const Budget& budget = {});
/// The Rees ideal with the x-block eliminated, moved into `t_ring`.
Ideal fiber_ideal(const Ideal& rees, const RingPtr& t_ring, const Budget& budget = {});

/// (f_1..f_s) : I where f_k = sum_i combos[k][i] g_i.
Ideal residual_intersection(const BlowupInstance& instance, const std::vector<std::vector<Coeff>>& combos,
                            const Budget& budget = {});

struct VerifyOptions {
  std::vector<std::string> checks;  // empty means all
  Budget budget;
  int residual_trials = 5;
  std::uint64_t residual_seed = 0;
};

/// Ground-truth ideals computed once per instance and shared by the checks.
class Verifier {
 public:
  explicit Verifier(const BlowupInstance& instance, Budget budget = {});

  const BlowupInstance& instance() const { return inst_; }

  /// Rees ideal: (T_i - g_i t) in S[t] with t eliminated.
  const Ideal& rees();
  /// I(X): the Rees ideal with the x-block eliminated, as an ideal of T.
  const Ideal& fiber();
  /// L : (x)
  const Ideal& l_colon_m();
  /// I_d(B) : (T)
  const Ideal& idb_colon_t();

  CheckRecord check_invariants();
  CheckRecord check_gd();
  std::vector<CheckRecord> check_main();
  CheckRecord check_multiplicity();
  CheckRecord check_hilbert();
  CheckRecord check_annihilator();
  CheckRecord check_radical();
  CheckRecord check_residual(int trials, std::uint64_t seed);
  CheckRecord check_content();
  CheckRecord check_ladder();

  /// Runs the selected checks in dependency order.
  std::vector<CheckRecord> run(const VerifyOptions& options);

 private:
  const BlowupInstance& inst_;
  Budget budget_;
  std::optional<Ideal> rees_, fiber_, l_colon_m_, idb_colon_t_;
  std::optional<bool> gd_ok_;
};

/// Pairs of (d, n) that count as required at each tier.
bool in_tier(std::size_t d, std::size_t n, std::string_view tier);

struct VerificationReport {
  std::string instance_id;
  AlternatingPresentation presentation;
  bool required = false;
  std::vector<CheckRecord> checks;

  /// Any fail or timeout on a required instance.
  bool has_required_failure() const;
  std::string to_json(bool include_timings = false) const;
  /// Aligned plain-text table.
  std::string to_table() const;
};

VerificationReport verify_instance(const AlternatingPresentation& presentation, const VerifyOptions& options,
                                   std::string_view tier = "required");

}  // namespace blowup
