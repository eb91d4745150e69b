#include <doctest.h>

#include <json.hpp>
#include <map>
#include <memory>
#include <tuple>

#include "blowup/verify.hpp"

using namespace blowup;

namespace {

const BlowupInstance& instance(std::size_t d, std::size_t n, std::uint64_t seed = 42) {
  static std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::unique_ptr<BlowupInstance>> cache;
  auto& slot = cache[{d, n, seed}];
  if (!slot) slot = std::make_unique<BlowupInstance>(random_presentation(d, n, kDefaultCharacteristic, seed));
  return *slot;
}

// Coefficients of N(z)/(1-z)^k through degree `top`.
std::vector<std::int64_t> expand(std::vector<std::int64_t> num, int k, int top) {
  num.resize(static_cast<std::size_t>(top + 1), 0);
  for (int r = 0; r < k; ++r) {
    for (std::size_t i = 1; i < num.size(); ++i) num[i] += num[i - 1];
  }
  return num;
}

const CheckRecord& find(const std::vector<CheckRecord>& records, std::string_view name) {
  for (const auto& r : records) {
    if (r.name == name) return r;
  }
  throw std::out_of_range(std::string(name));
}

}  // namespace

TEST_CASE("multiplicity formula") {
  CHECK(expected_multiplicity(3, 5) == 4);
  CHECK(expected_multiplicity(4, 5) == 3);
  CHECK(expected_multiplicity(4, 7) == 13);
  CHECK(expected_multiplicity(3, 7) == 9);
  CHECK(expected_multiplicity(5, 5) == 1);
  for (std::size_t d = 3; d <= 9; ++d) {
    for (std::size_t n = d; n <= 15; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      CHECK(expected_multiplicity(d, n) == monomial_count_restatement(d, n));
    }
  }
}

TEST_CASE("annihilator bound") {
  CHECK(annihilator_bound(3, 5) == 1);
  CHECK(annihilator_bound(5, 7) == 1);
  CHECK(annihilator_bound(4, 5) == 1);
  CHECK(annihilator_bound(4, 7) == 2);
  CHECK(annihilator_bound(6, 11) == 3);
}

TEST_CASE("closed-form Hilbert series") {
  auto a = closed_form_hilbert(3, 5, 4);
  auto oracle = expand({1, 3}, 3, 4);
  oracle[1] -= 1;
  for (int k = 0; k <= 4; ++k) CHECK(a.at(k) == oracle[static_cast<std::size_t>(k)]);
  CHECK(a.at(0) == 1);
  CHECK(a.at(1) == 5);
  CHECK(a.at(2) == 15);

  auto b = closed_form_hilbert(4, 5, 5);
  auto ob = expand({1, 1, 1}, 4, 5);
  for (int k = 0; k <= 5; ++k) CHECK(b.at(k) == ob[static_cast<std::size_t>(k)]);

  auto c = closed_form_hilbert(4, 7, 5);
  auto oc = expand({1, 2, 10}, 4, 5);
  oc[1] += 1;
  for (int k = 0; k <= 5; ++k) CHECK(c.at(k) == oc[static_cast<std::size_t>(k)]);

  auto e = closed_form_hilbert(3, 7, 6);
  for (int k = e.lowest; k < 0; ++k) CHECK(e.at(k) == 0);
  CHECK(e.at(0) == 1);
  CHECK(e.at(-5) == 0);
}

TEST_CASE("Rees ideal of (x1, x2)") {
  auto r = Ring::make(32003, {{"x", {"x1", "x2"}, 1, 0}});
  auto s = Ring::make(32003, {{"x", {"x1", "x2"}, 1, 0}, {"T", {"T1", "T2"}, 0, 1}});
  std::vector<Polynomial> g{Polynomial::parse(r, "x1"), Polynomial::parse(r, "x2")};
  auto rees = rees_by_elimination(g, s);
  CHECK(ideal_equal(rees, Ideal(s, {Polynomial::parse(s, "x2*T1 - x1*T2")})));
  auto t = Ring::make(32003, {{"T", {"T1", "T2"}, 0, 1}});
  CHECK(fiber_ideal(rees, t).is_zero());
}

TEST_CASE("fiber of the square of the maximal ideal is the conic") {
  auto r = Ring::make(32003, {{"x", {"x", "y"}, 1, 0}});
  auto s = Ring::make(32003, {{"x", {"x", "y"}, 1, 0}, {"T", {"T1", "T2", "T3"}, 0, 1}});
  std::vector<Polynomial> g{Polynomial::parse(r, "x^2"), Polynomial::parse(r, "x*y"), Polynomial::parse(r, "y^2")};
  auto rees = rees_by_elimination(g, s);
  auto expected = Ideal(s, {Polynomial::parse(s, "y*T1 - x*T2"), Polynomial::parse(s, "y*T2 - x*T3"),
                            Polynomial::parse(s, "T1*T3 - T2^2")});
  CHECK(ideal_equal(rees, expected));
  auto t = Ring::make(32003, {{"T", {"T1", "T2", "T3"}, 0, 1}});
  CHECK(ideal_equal(fiber_ideal(rees, t), Ideal(t, {Polynomial::parse(t, "T1*T3 - T2^2")})));
}

TEST_CASE("square presentations are of linear type") {
  const auto& inst = instance(5, 5);
  Verifier v(inst);
  CHECK(ideal_equal(v.rees(), inst.l()));
  CHECK(v.fiber().is_zero());
}

TEST_CASE("the Rees ideal strictly contains L when d < n") {
  const auto& inst = instance(3, 5);
  Verifier v(inst);
  for (const auto& g : inst.l().generators()) CHECK(v.rees().contains(g));
  bool strict = false;
  for (const auto& g : v.rees().groebner_basis()) strict = strict || !inst.l().contains(g);
  CHECK(strict);
  CHECK(ideal_equal(v.rees(), inst.candidate_rees()));
}

TEST_CASE("fiber ideals") {
  {
    Verifier v(instance(3, 5));
    for (const auto& g : v.fiber().groebner_basis()) CHECK(g.total_degree() == 3);
    CHECK(dim_height(v.fiber()).height == 2);
  }
  {
    Verifier v(instance(4, 5));
    auto gb = v.fiber().groebner_basis();
    REQUIRE(gb.size() == 1);
    CHECK(gb[0].total_degree() == 3);
  }
}

TEST_CASE("fitting heights") {
  auto r = make_x_ring(3, 32003);
  auto h = fitting_heights(instance(3, 5).phi());
  CHECK(h.size() == 2);
  CHECK(satisfies_gd(h));
  auto zero = fitting_heights(PolyMatrix(r, 5, 5));
  CHECK(zero == std::vector<int>{0, 0});
  CHECK_FALSE(satisfies_gd(zero));
  CHECK(fitting_heights(instance(5, 5).phi()).size() == 4);
}

TEST_CASE("every check passes on the required shapes") {
  for (auto [d, n] : {std::pair<std::size_t, std::size_t>{3, 5}, {4, 5}, {5, 5}}) {
    CAPTURE(d);
    CAPTURE(n);
    auto report = verify_instance(random_presentation(d, n, 32003, 42), {});
    CHECK(report.required);
    REQUIRE(report.checks.size() == all_check_names().size());
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      if (c.name == "hilbert" && d == n) {
        CHECK(c.status == Status::skipped);
      } else {
        CHECK(c.status == Status::pass);
      }
    }
    CHECK_FALSE(report.has_required_failure());
  }
}

TEST_CASE("check certificates") {
  Verifier v(instance(4, 5));
  auto m = v.check_multiplicity();
  CHECK(m.certificate["e_computed"] == 3);
  CHECK(m.certificate["e_expected"] == 3);
  CHECK(m.certificate["dim"] == 4);

  auto a = v.check_annihilator();
  CHECK(a.status == Status::pass);
  CHECK(a.certificate["minimal_exponent"].get<int>() <= a.certificate["bound"].get<int>());

  auto c = v.check_content();
  CHECK(c.certificate["f_i_over_delta_i"].size() == 5);
  for (const auto& s : c.certificate["f_i_over_delta_i"]) CHECK(s.get<int>() != 0);

  Verifier sq(instance(5, 5));
  CHECK(sq.check_annihilator().certificate["minimal_exponent"] == 0);
}

TEST_CASE("residual intersections") {
  const auto& inst = instance(3, 5);
  Verifier v(inst);
  auto r = v.check_residual(3, 0);
  CHECK(r.status == Status::pass);
  CHECK(r.certificate["e_expected"] == 4);

  std::vector<std::vector<Coeff>> repeated{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}};
  auto jp = residual_intersection(inst, repeated);
  CHECK(dim_height(jp).height < 2);
}

TEST_CASE("selections and tiers") {
  CHECK(parse_check_selection("") == all_check_names());
  CHECK(parse_check_selection("all") == all_check_names());
  CHECK(parse_check_selection("main") == std::vector<std::string>{"main_a", "main_b", "main_c", "main_d"});
  CHECK(parse_check_selection("hilbert,gd") == std::vector<std::string>{"gd", "hilbert"});
  CHECK_THROWS_AS(parse_check_selection("hilbert,bogus"), ValidationError);

  CHECK(in_tier(3, 5, "required"));
  CHECK(in_tier(5, 5, "required"));
  CHECK_FALSE(in_tier(4, 7, "required"));
  CHECK(in_tier(4, 7, "extended"));
  CHECK(in_tier(3, 7, "extended"));
  CHECK_FALSE(in_tier(3, 9, "extended"));
}

TEST_CASE("reports are deterministic") {
  auto p = random_presentation(3, 5, 32003, 42);
  VerifyOptions options;
  options.checks = parse_check_selection("gd,main,multiplicity");
  auto a = verify_instance(p, options);
  auto b = verify_instance(p, options);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json().find("\"seconds\"") == std::string::npos);
  CHECK(a.to_json(true).find("\"seconds\"") != std::string::npos);
  auto parsed = nlohmann::json::parse(a.to_json());
  CHECK(parsed["instance"] == "d3-n5-p32003-s42");
  CHECK(parsed["checks"].size() == 6);
  CHECK(a.to_table().find("main_a") != std::string::npos);
}

TEST_CASE("required failures drive the verdict") {
  VerificationReport r;
  r.required = true;
  r.checks.push_back(CheckRecord{"gd", Status::pass, "", {}, 0});
  CHECK_FALSE(r.has_required_failure());
  r.checks.push_back(CheckRecord{"hilbert", Status::timeout, "", {}, 0});
  CHECK(r.has_required_failure());
  r.required = false;
  CHECK_FALSE(r.has_required_failure());
  r.checks.back().status = Status::fail;
  CHECK_FALSE(r.has_required_failure());
  r.required = true;
  CHECK(r.has_required_failure());
}

TEST_CASE("a tiny budget yields timeouts, not failures") {
  VerifyOptions options;
  options.checks = parse_check_selection("main");
  options.budget.max_pairs = 3;
  auto report = verify_instance(random_presentation(3, 5, 32003, 42), options);
  bool any_timeout = false;
  for (const auto& c : report.checks) {
    CHECK(c.status != Status::fail);
    any_timeout = any_timeout || c.status == Status::timeout;
  }
  CHECK(any_timeout);
  CHECK(report.has_required_failure());
}
