#include <doctest.h>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <tuple>

#include <json.hpp>

#include "blowup/instance.hpp"
#include "support/generators.hpp"

using namespace blowup;
using blowup::testing::leibniz;

namespace {

PolyMatrix column(const RingPtr& ring, const std::vector<Polynomial>& v) { return row_vector(ring, v).transposed(); }

const BlowupInstance& instance(std::size_t d, std::size_t n, std::uint64_t seed = 42) {
  static std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::unique_ptr<BlowupInstance>> cache;
  auto& slot = cache[{d, n, seed}];
  if (!slot) slot = std::make_unique<BlowupInstance>(random_presentation(d, n, kDefaultCharacteristic, seed));
  return *slot;
}

}  // namespace

TEST_CASE("random_presentation is reproducible") {
  auto a = random_presentation(3, 5, 32003, 42);
  auto b = random_presentation(3, 5, 32003, 42);
  CHECK(a == b);
  CHECK(a.to_json() == b.to_json());
  CHECK_FALSE(a == random_presentation(3, 5, 32003, 43));
  CHECK(a.entries.size() == 10);
  for (const auto& e : a.entries) CHECK(e.size() == 3);

  CHECK_THROWS_AS(random_presentation(3, 4, 32003, 1), ValidationError);
  CHECK_THROWS_AS(random_presentation(2, 5, 32003, 1), ValidationError);
  CHECK_THROWS_AS(random_presentation(3, 5, 32004, 1), ValidationError);

  auto five = random_presentation(5, 5, 32003, 7);
  CHECK(satisfies_gd(fitting_heights(five.phi(make_x_ring(5, 32003)))));
}

TEST_CASE("instance JSON round-trips") {
  auto p = random_presentation(4, 5, 32003, 9);
  const std::string text = p.to_json();
  CHECK(text.rfind("{\"format\":1,\"char\":32003,\"d\":4,\"n\":5,\"seed\":9,", 0) == 0);
  auto q = AlternatingPresentation::from_json(text);
  CHECK(q == p);
  CHECK(q.to_json() == text);

  auto full = nlohmann::json::parse(text);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < p.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < p.n; ++j) {
      std::vector<std::int64_t> e(p.d, 0);
      if (i < j) {
        for (std::size_t k = 0; k < p.d; ++k) e[k] = p.entries[p.entry_index(i, j)][k];
      } else if (j < i) {
        for (std::size_t k = 0; k < p.d; ++k) e[k] = -static_cast<std::int64_t>(p.entries[p.entry_index(j, i)][k]);
      }
      row.push_back(e);
    }
    rows.push_back(row);
  }
  full["phi"] = rows;
  CHECK(AlternatingPresentation::from_json(full.dump()) == p);

  full["phi"][0][1][0] = 5;
  full["phi"][1][0][0] = 5;
  CHECK_THROWS_AS(AlternatingPresentation::from_json(full.dump()), ValidationError);
  CHECK_THROWS_AS(AlternatingPresentation::from_json("{\"char\": 32003,"), ParseError);
  CHECK_THROWS_AS(AlternatingPresentation::from_json("{\"char\": 32003, \"d\": 3, \"n\": 5}"), ValidationError);
}

TEST_CASE("be_generators") {
  auto r = make_x_ring(3, 32003);
  auto toy = PolyMatrix::parse(r, {{"0", "x1", "x2"}, {"-x1", "0", "x3"}, {"-x2", "-x3", "0"}});
  auto g = be_generators(toy);
  CHECK(g == std::vector<Polynomial>{Polynomial::parse(r, "x3"), Polynomial::parse(r, "-x2"),
                                     Polynomial::parse(r, "x1")});
  CHECK((toy * column(r, g)).is_zero());

  const auto& inst = instance(3, 5);
  REQUIRE(inst.g().size() == 5);
  for (const auto& gi : inst.g()) {
    CHECK(gi.is_homogeneous());
    CHECK(gi.total_degree() == 2);
  }
  CHECK(dim_height(Ideal(inst.r_ring(), inst.g())).height == 3);

  auto zero_row = inst.phi();
  for (std::size_t j = 0; j < 5; ++j) {
    zero_row(2, j) = Polynomial(r);
    zero_row(j, 2) = Polynomial(r);
  }
  CHECK_THROWS_AS(be_generators(zero_row), DegenerateInstance);
}

TEST_CASE("jacobian_dual") {
  auto r = Ring::make(32003, {{"x", {"x1", "x2"}, 1, 0}});
  auto t = make_t_ring(2, 32003);
  auto phi = PolyMatrix::parse(r, {{"0", "x1 + x2"}, {"-x1 - x2", "0"}});
  CHECK(jacobian_dual(phi, t) == PolyMatrix::parse(t, {{"-T2", "T1"}, {"-T2", "T1"}}));
  CHECK(jacobian_dual(PolyMatrix(r, 2, 2), t).is_zero());
  CHECK_THROWS_AS(jacobian_dual(PolyMatrix::parse(r, {{"0", "x1^2"}, {"-x1^2", "0"}}), t), ValidationError);

  const auto& inst = instance(3, 5);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t c = 0; c < 5; ++c) {
      auto bd = bidegree_of(map_by_name(inst.b()(j, c), inst.s_ring()));
      CHECK(bd == std::pair{0, 1});
    }
  }
  std::vector<Polynomial> tv;
  for (std::size_t i = 0; i < 5; ++i) tv.push_back(Polynomial::variable(inst.t_ring(), i));
  CHECK((inst.b() * column(inst.t_ring(), tv)).is_zero());
}

TEST_CASE("bordered matrix") {
  const auto& inst = instance(4, 5);
  const auto& m = inst.bordered();
  CHECK(m.rows() == 9);
  CHECK(m.is_alternating());
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) CHECK(m(i, j) == map_by_name(inst.phi()(i, j), inst.s_ring()));
  }
  for (std::size_t i = 5; i < 9; ++i) {
    for (std::size_t j = 5; j < 9; ++j) CHECK(m(i, j).is_zero());
  }
  std::vector<Polynomial> tx = inst.t_in_s();
  for (const auto& x : inst.x_in_s()) tx.push_back(-x);
  CHECK((row_vector(inst.s_ring(), tx) * m).is_zero());
  CHECK_THROWS_AS(bordered_matrix(inst.phi(), inst.b().transposed(), inst.s_ring()), ValidationError);
}

TEST_CASE("f_vector and the factor h") {
  const auto& even = instance(3, 5);
  CHECK(even.f().size() == 8);
  for (const auto& f : even.f()) CHECK(f.is_zero());
  CHECK(even.h().is_zero());

  const auto& a = instance(4, 5);
  REQUIRE_FALSE(a.h().is_zero());
  CHECK(bidegree_of(a.h()) == std::pair{0, 3});
  std::vector<Polynomial> tx = a.t_in_s();
  for (const auto& x : a.x_in_s()) tx.push_back(-x);
  for (std::size_t k = 0; k < tx.size(); ++k) CHECK(a.f()[k] == a.h() * tx[k]);

  const auto& b = instance(4, 7);
  CHECK(bidegree_of(b.h()) == std::pair{1, 3});
}

TEST_CASE("content ideal by three methods") {
  const auto& odd = instance(3, 5);
  CHECK(odd.c_phi().is_zero());
  CHECK(odd.content_ideal(ContentMethod::fM, 2).is_zero());
  CHECK(odd.content_ideal(ContentMethod::hM, 1).is_zero());
  const auto& square = instance(5, 5);
  CHECK(square.c_phi().is_zero());

  const auto& a = instance(4, 5);
  const auto& c = a.c_phi();
  CHECK(c.groebner_basis().size() == 1);
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < 5; ++k) {
      if (k != i) cols.push_back(k);
    }
    auto q = exact_div(delta_J(a.b(), cols), Polynomial::variable(a.t_ring(), i));
    CHECK(ideal_equal(Ideal(a.t_ring(), {q}), c));
    CHECK(ideal_equal(a.content_ideal(ContentMethod::fM, i + 1), c));
  }

  const auto& b = instance(4, 7);
  for (const auto& g : b.c_phi().generators()) CHECK(g.total_degree() == 3);
  CHECK(ideal_equal(b.content_ideal(ContentMethod::fM, 1), b.c_phi()));
  CHECK(ideal_equal(b.content_ideal(ContentMethod::fM, 7), b.c_phi()));
  CHECK(ideal_equal(b.content_ideal(ContentMethod::hM, 1), b.c_phi()));
  CHECK(ideal_equal(b.content_ideal(ContentMethod::hM, 4), b.c_phi()));
  CHECK_THROWS_AS(b.content_ideal(ContentMethod::fM, 8), std::out_of_range);
}

TEST_CASE("content lists of every F_i") {
  const auto& a = instance(4, 5);
  const auto& t = a.t_ring();
  for (std::size_t i = 1; i <= 5; ++i) {
    std::vector<Polynomial> scaled;
    for (const auto& g : a.c_phi().generators()) scaled.push_back(Polynomial::variable(t, i - 1) * g);
    CHECK(ideal_equal(a.content_of_f(i), Ideal(t, scaled)));
  }
  for (std::size_t j = 1; j <= 4; ++j) CHECK(ideal_equal(a.content_of_f(5 + j), a.c_phi()));
}

TEST_CASE("symmetric ideal") {
  const auto& inst = instance(3, 5);
  const auto& l = inst.l();
  REQUIRE(l.generators().size() == 5);
  for (const auto& g : l.generators()) CHECK(bidegree_of(g) == std::pair{1, 1});
  auto xb = row_vector(inst.s_ring(), inst.x_in_s());
  PolyMatrix b_s(inst.s_ring(), 3, 5);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t c = 0; c < 5; ++c) b_s(j, c) = map_by_name(inst.b()(j, c), inst.s_ring());
  }
  auto prod = xb * b_s;
  for (std::size_t c = 0; c < 5; ++c) CHECK(l.generators()[c] == prod(0, c));
  CHECK(symmetric_ideal(PolyMatrix(inst.r_ring(), 5, 5), inst.s_ring()).is_zero());
}

TEST_CASE("candidate ideals") {
  const auto& odd = instance(3, 5);
  CHECK(ideal_equal(odd.candidate_rees(), odd.l() + odd.id_b().mapped_to(odd.s_ring())));
  const auto& square = instance(5, 5);
  CHECK(square.candidate_fiber().groebner_basis().empty());
  const auto& a = instance(4, 5);
  for (const auto& c : a.c_phi().generators()) {
    for (std::size_t i = 0; i < 5; ++i) CHECK(a.id_b().contains(Polynomial::variable(a.t_ring(), i) * c));
  }
  for (const auto& m : a.id_b().generators()) CHECK(m.total_degree() == 4);
}

TEST_CASE("Delta_J of B matches the Leibniz oracle") {
  const auto& inst = instance(3, 5);
  std::vector<std::size_t> rows{0, 1, 2};
  for (const auto& cols : combinations(5, 3)) CHECK(delta_J(inst.b(), cols) == leibniz(inst.b().submatrix(rows, cols)));
}

TEST_CASE("structural identities across seeds") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (auto [d, n] : {std::pair<std::size_t, std::size_t>{3, 5}, {4, 5}, {5, 5}}) {
      CAPTURE(seed);
      CAPTURE(d);
      const auto& inst = instance(d, n, seed);
      CHECK((inst.phi() * column(inst.r_ring(), inst.g())).is_zero());
      std::vector<Polynomial> tx = inst.t_in_s();
      for (const auto& x : inst.x_in_s()) tx.push_back(-x);
      CHECK((row_vector(inst.s_ring(), tx) * inst.bordered()).is_zero());
      if ((n + d) % 2 == 1 && d < n) {
        for (std::size_t i = 1; i <= n; ++i) CHECK(ideal_equal(inst.content_ideal(ContentMethod::fM, i), inst.c_phi()));
        for (std::size_t j = 1; j <= d; ++j) CHECK(ideal_equal(inst.content_ideal(ContentMethod::hM, j), inst.c_phi()));
      }
    }
  }
}

TEST_CASE("monomials_of_degree") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(1, 4).size() == 1);
  CHECK(monomials_of_degree(4, 0).size() == 1);
  auto ms = monomials_of_degree(2, 2);
  CHECK(ms[0][0] == 2);
  CHECK(ms[2][1] == 2);
}
