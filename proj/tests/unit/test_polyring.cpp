#include <doctest.h>

#include <random>

#include "blowup/polynomial.hpp"
#include "support/generators.hpp"

using namespace blowup;
using blowup::testing::bigraded_ring;
using blowup::testing::plain_ring;
using blowup::testing::random_monomial;
using blowup::testing::random_poly;

namespace {

Monomial mono(const RingPtr& ring, std::string_view text) {
  return Polynomial::parse(ring, text).leading_monomial();
}

}  // namespace

TEST_CASE("order_cmp examples") {
  auto ring = plain_ring({"x", "y"});
  const auto& grevlex = *ring->grevlex();
  CHECK(order_cmp(mono(ring, "x^2"), mono(ring, "x*y"), grevlex) == std::strong_ordering::greater);
  CHECK(order_cmp(mono(ring, "x*y^3"), mono(ring, "x*y^3"), grevlex) == std::strong_ordering::equal);
  auto lex = MonomialOrder::lex(2);
  CHECK(order_cmp(mono(ring, "x"), mono(ring, "y^3"), *lex) == std::strong_ordering::greater);
  CHECK(order_cmp(mono(ring, "x"), mono(ring, "y^3"), grevlex) == std::strong_ordering::less);
}

TEST_CASE("grevlex breaks degree ties reverse-lexicographically") {
  auto ring = plain_ring({"a", "b", "c"});
  const auto& o = *ring->grevlex();
  // a*c < b^2 in grevlex, but a*c > b^2 in lex.
  CHECK(o.compare(mono(ring, "a*c"), mono(ring, "b^2")) < 0);
  CHECK(MonomialOrder::lex(3)->compare(mono(ring, "a*c"), mono(ring, "b^2")) > 0);
  CHECK(o.compare(mono(ring, "1"), mono(ring, "c")) < 0);
}

TEST_CASE("orders are total, antisymmetric, transitive and multiplicative") {
  std::mt19937_64 rng(7);
  const std::size_t n = 6;
  const std::size_t front[] = {4, 1};
  std::vector<OrderPtr> orders{MonomialOrder::grevlex(n), MonomialOrder::lex(n), MonomialOrder::elimination(n, front)};
  for (const auto& order : orders) {
    for (int trial = 0; trial < 2000; ++trial) {
      Monomial a = random_monomial(rng, n, 3), b = random_monomial(rng, n, 3), c = random_monomial(rng, n, 3);
      int ab = order->compare(a, b), ba = order->compare(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
      if (ab < 0 && order->compare(b, c) < 0) CHECK(order->compare(a, c) < 0);
      if (ab < 0) CHECK(order->compare(a * c, b * c) < 0);
      CHECK(order->compare(Monomial{}, a * c) <= 0);
    }
  }
}

TEST_CASE("block elimination order puts the eliminated block first") {
  auto ring = plain_ring({"x", "y", "t"});
  const std::size_t t[] = {2};
  auto order = MonomialOrder::elimination(3, t);
  CHECK(order->compare(mono(ring, "t"), mono(ring, "x^5*y^4")) > 0);
  CHECK(order->compare(mono(ring, "t*y"), mono(ring, "t*x")) < 0);
}

TEST_CASE("poly_arith examples") {
  auto ring = plain_ring({"x", "y"});
  auto p = Polynomial::parse(ring, "x + y");
  auto q = Polynomial::parse(ring, "x - y");
  CHECK((p * q) == Polynomial::parse(ring, "x^2 - y^2"));
  CHECK((p + (-p)).is_zero());

  auto gf5 = plain_ring({"x"}, 5);
  CHECK((Polynomial::parse(gf5, "3*x") * Polynomial::parse(gf5, "2*x")) == Polynomial::parse(gf5, "x^2"));
}

TEST_CASE("arithmetic across rings is rejected") {
  auto a = plain_ring({"x", "y"});
  auto b = plain_ring({"x", "z"});
  CHECK_THROWS_AS(Polynomial::parse(a, "x") + Polynomial::parse(b, "x"), RingMismatch);
  CHECK_THROWS_AS(Polynomial::parse(a, "x") * Polynomial::parse(b, "z"), RingMismatch);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  auto ring = plain_ring({"a", "b", "c", "d"}, 101);
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = random_poly(rng, ring, 5, 2), q = random_poly(rng, ring, 5, 2), r = random_poly(rng, ring, 5, 2);
    CHECK(((p + q) + r) == (p + (q + r)));
    CHECK(((p * q) * r) == (p * (q * r)));
    CHECK((p * (q + r)) == (p * q + p * r));
    CHECK((p * q) == (q * p));
    CHECK((p + q) == (q + p));
    CHECK(((p - q) + q) == p);
  }
}

TEST_CASE("exact_div examples") {
  auto ring = plain_ring({"x", "y"});
  CHECK(exact_div(Polynomial::parse(ring, "x^2*y + x*y^2"), Polynomial::parse(ring, "x*y")) ==
        Polynomial::parse(ring, "x + y"));
  CHECK_THROWS_AS(exact_div(Polynomial::parse(ring, "x^2"), Polynomial::parse(ring, "y")), NotDivisible);
  CHECK(exact_div(Polynomial(ring), Polynomial::parse(ring, "x + 3")).is_zero());
  CHECK_THROWS(exact_div(Polynomial::parse(ring, "x"), Polynomial(ring)));
}

TEST_CASE("exact_div inverts multiplication") {
  std::mt19937_64 rng(5);
  auto ring = plain_ring({"a", "b", "c"});
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poly(rng, ring, 6, 3);
    auto q = random_poly(rng, ring, 4, 2);
    if (q.is_zero()) continue;
    CHECK(exact_div(p * q, q) == p);
  }
}

TEST_CASE("bidegree_of") {
  auto ring = bigraded_ring(2, 3);
  CHECK(bidegree_of(Polynomial::parse(ring, "T1*x2")) == std::pair{1, 1});
  CHECK_FALSE(bidegree_of(Polynomial::parse(ring, "x1 + T1")).has_value());
  CHECK(bidegree_of(Polynomial::parse(ring, "3*T1 - T2 + 7*T3")) == std::pair{0, 1});
  CHECK(bidegree_of(Polynomial::parse(ring, "x1^2*T3 + x1*x2*T1")) == std::pair{2, 1});
}

TEST_CASE("content_in_T") {
  auto ring = bigraded_ring(2, 3);
  auto content = content_in_T(Polynomial::parse(ring, "T1^2*x1 + T1*T2*x1 + T3^2*x2"));
  REQUIRE(content.size() == 2);
  CHECK(content[0] == Polynomial::parse(ring, "T1^2 + T1*T2"));
  CHECK(content[1] == Polynomial::parse(ring, "T3^2"));

  auto pure = Polynomial::parse(ring, "T1*T2 - 4*T3^2");
  auto single = content_in_T(pure);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == pure);
  CHECK(content_in_T(Polynomial(ring)).empty());
}

TEST_CASE("content_by_block regenerates the polynomial") {
  std::mt19937_64 rng(3);
  auto ring = bigraded_ring(3, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng, ring, 8, 2);
    Polynomial rebuilt(ring);
    for (const auto& [m, c] : content_by_block(p, "x")) rebuilt += c * Polynomial::monomial(ring, m);
    CHECK(rebuilt == p);
  }
}

TEST_CASE("text form round-trips bit-exactly") {
  std::mt19937_64 rng(19);
  auto ring = bigraded_ring(3, 5);
  CHECK(Polynomial::parse(ring, "3*x1^2*T2 + 1").to_string() == "3*x1^2*T2 + 1");
  CHECK(Polynomial::parse(ring, "-x1 + 32002*T1").to_string() == "-x1 - T1");
  CHECK(Polynomial(ring).to_string() == "0");
  for (int trial = 0; trial < 500; ++trial) {
    auto p = random_poly(rng, ring, 7, 3);
    std::string text = p.to_string();
    auto q = Polynomial::parse(ring, text);
    CHECK(q == p);
    CHECK(q.to_string() == text);
  }
}

TEST_CASE("parser rejects malformed input") {
  auto ring = plain_ring({"x", "y"});
  CHECK_THROWS_AS(Polynomial::parse(ring, ""), ParseError);
  CHECK_THROWS_AS(Polynomial::parse(ring, "x +"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse(ring, "x * z"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse(ring, "x y"), ParseError);
}

TEST_CASE("monomials enforce the packed degree limit") {
  Monomial m;
  m.set(0, 100);
  Monomial n;
  n.set(1, 30);
  CHECK_THROWS_AS(m * n, DegreeOverflow);
  CHECK_THROWS_AS(m.set(2, 28), DegreeOverflow);
}

TEST_CASE("rings validate their description") {
  CHECK_THROWS_AS(Ring::make(32004, {{"v", {"x"}, 1, 0}}), ValidationError);
  CHECK_THROWS_AS(Ring::make(7, {{"v", {"x", "x"}, 1, 0}}), ValidationError);
  CHECK_THROWS_AS(Ring::make(7, {{"a", {"x"}, 1, 0}, {"a", {"y"}, 1, 0}}), ValidationError);
  auto ring = bigraded_ring(2, 2);
  CHECK(ring->block_vars("T") == std::vector<std::size_t>{2, 3});
  auto ext = ring->extended({"t", {"t"}, 0, 0});
  CHECK(ext->nvars() == 5);
  CHECK(ext->var_index("t") == 4);
}
