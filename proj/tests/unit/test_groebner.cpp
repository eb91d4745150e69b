#include <doctest.h>

#include <random>

#include "blowup/groebner.hpp"
#include "support/generators.hpp"

using namespace blowup;
using blowup::testing::plain_ring;
using blowup::testing::random_ideal;
using blowup::testing::random_poly;

namespace {

Ideal ideal(const RingPtr& ring, std::vector<std::string> gens) { return Ideal::parse(ring, gens); }

Polynomial poly(const RingPtr& ring, std::string_view text) { return Polynomial::parse(ring, text); }

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  auto ring = plain_ring({"x", "y"});
  CHECK(texts(ideal(ring, {"x^2", "x*y"}).groebner_basis()) == std::vector<std::string>{"x*y", "x^2"});
  CHECK(texts(ideal(ring, {"x + y", "x - y"}).groebner_basis()) == std::vector<std::string>{"y", "x"});

  auto lex = MonomialOrder::lex(2);
  auto gb = ideal(ring, {"x*y - 1", "y^2 - 1"}).groebner_basis(lex);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == poly(ring, "y^2 - 1").with_order(lex));
  CHECK(gb[1] == poly(ring, "x - y").with_order(lex));
  // x - y = y*(xy - 1) - x*(y^2 - 1) and the originals are recovered from the basis.
  CHECK(poly(ring, "x - y") == poly(ring, "y") * poly(ring, "x*y - 1") - poly(ring, "x") * poly(ring, "y^2 - 1"));
  CHECK(poly(ring, "x*y - 1") == poly(ring, "y") * poly(ring, "x - y") + poly(ring, "y^2 - 1"));
}

TEST_CASE("bases are deterministic and independent of generator order") {
  auto ring = plain_ring({"a", "b", "c"});
  auto one = ideal(ring, {"a^2 - b*c", "b^2 - a*c + 1", "a*b*c - 2"});
  auto two = ideal(ring, {"a*b*c - 2", "a^2 - b*c", "b^2 - a*c + 1"});
  CHECK(texts(one.groebner_basis()) == texts(two.groebner_basis()));
  auto again = ideal(ring, {"a^2 - b*c", "b^2 - a*c + 1", "a*b*c - 2"});
  CHECK(texts(one.groebner_basis()) == texts(again.groebner_basis()));
}

TEST_CASE("budget exhaustion surfaces as Timeout") {
  auto ring = plain_ring({"a", "b", "c", "d"});
  auto hard = ideal(ring, {"a^3 - b*c*d", "b^3 - a*c*d + 1", "c^3 - a*b*d + a", "d^3 - a*b*c + b"});
  Budget tiny;
  tiny.max_pairs = 2;
  CHECK_THROWS_AS(hard.groebner_basis(nullptr, tiny), Timeout);
  Budget past;
  past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(hard.groebner_basis(nullptr, past), Timeout);
}

TEST_CASE("normal_form examples") {
  auto ring = plain_ring({"x", "y"});
  auto i = ideal(ring, {"x^2 - y"});
  CHECK(normal_form(poly(ring, "x^2"), i) == poly(ring, "y"));
  auto j = ideal(ring, {"x^2 - y", "x*y^2 + 3"});
  for (const auto& g : j.generators()) CHECK(normal_form(g, j).is_zero());
  CHECK_FALSE(normal_form(Polynomial::constant(ring, 1), j).is_zero());
  CHECK(j.contains(poly(ring, "x^2*y - y^2")));
}

TEST_CASE("eliminate examples") {
  auto ring = plain_ring({"x", "y", "t"});
  const std::size_t t[] = {2};
  auto cut = eliminate(ideal(ring, {"t - x", "t - y"}), t);
  CHECK(ideal_equal(cut, ideal(ring, {"x - y"})));
  auto same = ideal(ring, {"x*y - t"});
  CHECK(ideal_equal(eliminate(same, std::span<const std::size_t>{}), same));
  CHECK(eliminate(ideal(ring, {"t*x - 1"}), t).is_zero());
}

TEST_CASE("intersection and colon examples") {
  auto ring = plain_ring({"x", "y"});
  CHECK(ideal_equal(intersect(ideal(ring, {"x"}), ideal(ring, {"y"})), ideal(ring, {"x*y"})));
  CHECK(ideal_equal(ideal_quotient(ideal(ring, {"x^2", "x*y"}), ideal(ring, {"x"})), ideal(ring, {"x", "y"})));
  auto i = ideal(ring, {"x^2 - y^3", "x*y"});
  CHECK(ideal_equal(ideal_quotient(i, Ideal::unit(ring)), i));
  CHECK(ideal_quotient(ideal(ring, {"x"}), ideal(ring, {"x"})).is_unit());
}

TEST_CASE("saturation examples") {
  auto ring = plain_ring({"x", "y", "z"});
  CHECK(ideal_equal(saturate(ideal(ring, {"x^2*y"}), poly(ring, "y")), ideal(ring, {"x^2"})));
  CHECK(saturate(ideal(ring, {"x"}), poly(ring, "x")).is_unit());
  auto prime = ideal(ring, {"x*z - y^2", "x - y"});
  CHECK(ideal_equal(saturate(prime, poly(ring, "z")), prime));
}

TEST_CASE("radical membership examples") {
  auto ring = plain_ring({"x", "y"});
  auto sq = ideal(ring, {"x^2"});
  CHECK(radical_membership(poly(ring, "x"), sq));
  CHECK_FALSE(radical_membership(poly(ring, "y"), sq));
  CHECK(radical_membership(poly(ring, "x^2*y + x^3"), sq));
  CHECK(radical_membership(poly(ring, "x + y"), ideal(ring, {"x^3", "y^2 - x^2"})));
}

TEST_CASE("dim_height examples") {
  auto ring = plain_ring({"x", "y"});
  auto zero = dim_height(Ideal::zero(ring));
  CHECK(zero.dim == 2);
  CHECK(zero.height == 0);
  auto xy = dim_height(ideal(ring, {"x*y"}));
  CHECK(xy.dim == 1);
  CHECK(xy.height == 1);
  auto ring4 = plain_ring({"a", "b", "c", "d"});
  auto m = dim_height(ideal(ring4, {"a", "b", "c", "d"}));
  CHECK(m.dim == 0);
  CHECK(m.height == 4);
}

TEST_CASE("ideal_equal examples") {
  auto ring = plain_ring({"x", "y"});
  CHECK(ideal_equal(ideal(ring, {"x", "y"}), ideal(ring, {"x + y", "y"})));
  CHECK_FALSE(ideal_equal(ideal(ring, {"x^2"}), ideal(ring, {"x"})));
  auto i = ideal(ring, {"x^2 - y"});
  CHECK(ideal_equal(i, i + Ideal::zero(ring)));
  CHECK_THROWS_AS(ideal_equal(i, ideal(plain_ring({"x", "z"}), {"x"})), RingMismatch);
}

TEST_CASE("with_auxiliary picks a fresh name") {
  auto ring = plain_ring({"w", "x"});
  auto ext = with_auxiliary(ring, "w");
  CHECK(ext->nvars() == 3);
  CHECK(ext->var_name(2) == "w_1");
}

TEST_CASE("soundness properties on random ideals") {
  set_posthoc_check(true);
  const auto before = posthoc_checked_count();
  std::mt19937_64 rng(99);
  auto ring = plain_ring({"x", "y", "z"}, 32003);
  const std::size_t z[] = {2};
  int colon_checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    CAPTURE(trial);
    Ideal i = random_ideal(rng, ring);
    const auto& gb = i.groebner_basis();
    CHECK(satisfies_buchberger_criterion(gb));
    for (const auto& g : i.generators()) CHECK(reduce(g.with_order(ring->grevlex()), gb).is_zero());

    Ideal cut = eliminate(i, z);
    for (const auto& g : cut.generators()) {
      CHECK(g.free_of(2));
      CHECK(i.contains(g));
    }

    Ideal j = random_ideal(rng, ring);
    Ideal q = ideal_quotient(i, j);
    for (const auto& g : q.generators()) {
      for (const auto& f : j.generators()) CHECK(i.contains(g * f));
    }
    CHECK(q.contains(i));
    ++colon_checked;

    Polynomial f = random_poly(rng, ring, 2, 1);
    if (f.is_zero()) f = Polynomial::variable(ring, 0);
    Ideal s = saturate(i, f);
    CHECK(s.contains(i));
    CHECK(ideal_equal(saturate(s, f), s));

    if (!i.is_unit()) {
      auto dh = dim_height(i);
      std::vector<Polynomial> regen(gb.begin(), gb.end());
      for (std::size_t k = 0; k + 1 < i.generators().size(); ++k) {
        regen.push_back(i.generators()[k] * random_poly(rng, ring, 2, 1) + i.generators()[k + 1]);
      }
      auto dh2 = dim_height(Ideal(ring, regen));
      CHECK(dh.dim == dh2.dim);
      CHECK(dh.height == dh2.height);
    }
  }
  CHECK(colon_checked >= 100);
  CHECK(posthoc_checked_count() > before);
  set_posthoc_check(false);
}
