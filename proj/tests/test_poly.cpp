#include "doctest.h"
#include "hyperring/catalog.hpp"
#include "hyperring/poly.hpp"

using namespace hyperring;

namespace {

struct Fixture {
  FiniteHyperring ring = catalog::example_3_2();
  Element a, b, c;
  Fixture() {
    REQUIRE(verify_axioms(ring).passed());
    a = *ring.find("a");
    b = *ring.find("b");
    c = *ring.find("c");
  }
  HyperPolynomial p(std::vector<Element> coeffs) const { return {ring, std::move(coeffs)}; }
};

}  // namespace

TEST_CASE("polynomial sums") {
  Fixture f;
  auto sum = poly_add(f.p({f.b, f.a}), f.p({0, f.c}));
  REQUIRE(sum.size() == 1);
  CHECK(sum[0] == f.p({f.b, f.b}));
  auto g = f.p({f.c, 0, f.b});
  auto with_zero = poly_add(g, HyperPolynomial::zero(f.ring));
  REQUIRE(with_zero.size() == 1);
  CHECK(with_zero[0] == g);
  auto constants = poly_add(f.p({f.b}), f.p({f.b}));
  REQUIRE(constants.size() == 2);
  CHECK(constants[0].is_zero());
  CHECK(constants[1] == f.p({f.b}));
}

TEST_CASE("polynomial products") {
  Fixture f;
  auto sq = poly_mul(f.p({0, f.a}), f.p({0, f.a}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == f.p({0, 0, f.a}));
  auto bx = poly_mul(f.p({f.c, f.b}), f.p({f.b}));
  REQUIRE(bx.size() == 1);
  CHECK(bx[0] == f.p({0, f.b}));
  auto z = poly_mul(f.p({f.c, f.a}), HyperPolynomial::zero(f.ring));
  REQUIRE(z.size() == 1);
  CHECK(z[0].is_zero());
}

TEST_CASE("degree bound and trimming") {
  Fixture f;
  CHECK(f.p({f.a, 0, 0}).degree() == 0);
  CHECK(HyperPolynomial::zero(f.ring).degree() == -1);
  CHECK(f.p({0, 0, f.b}).coefficient(7) == 0);
  CHECK_THROWS_AS(HyperPolynomial(f.ring, std::vector<Element>(10, f.a)), PreconditionError);
  HyperPolynomial big(f.ring, std::vector<Element>(6, f.a));
  CHECK_THROWS_AS(poly_mul(big, big), PreconditionError);
  CHECK(HyperPolynomial(f.ring, {0, 0, 0}, 2).is_zero());
}

TEST_CASE("evaluation") {
  Fixture f;
  // a x^2 + b x + c at a
  CHECK(f.p({f.c, f.b, f.a}).evaluate(f.a) == f.ring.set_of({"0", "b"}));
  CHECK(HyperPolynomial::zero(f.ring).evaluate(f.b) == f.ring.singleton(0));
  CHECK(f.p({f.c}).evaluate(f.b) == f.ring.singleton(f.c));
}

TEST_CASE("rendering and ordering") {
  Fixture f;
  CHECK(f.p({f.c, f.b, f.a}).to_string() == "a*x^2 + b*x + c");
  CHECK(HyperPolynomial::zero(f.ring).to_string() == "0");
  auto sums = poly_add(f.p({f.a, f.a}), f.p({f.a, f.b}));
  CHECK(std::is_sorted(sums.begin(), sums.end()));
  CHECK(std::adjacent_find(sums.begin(), sums.end()) == sums.end());
}

TEST_CASE("sums commute and contain the coefficientwise choice") {
  Fixture f;
  const auto n = static_cast<Element>(f.ring.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto g = f.p({x, y}), h = f.p({y, x});
      CHECK(poly_add(g, h) == poly_add(h, g));
      CHECK(poly_mul(g, h) == poly_mul(h, g));
      for (const auto& s : poly_add(g, h)) {
        for (std::size_t i = 0; i < 2; ++i) {
          CHECK(f.ring.add(g.coefficient(i), h.coefficient(i)).contains(s.coefficient(i)));
        }
      }
    }
  }
}
