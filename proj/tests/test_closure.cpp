#include "doctest.h"
#include "hyperring/catalog.hpp"
#include "hyperring/closure.hpp"
#include "hyperring/generator.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

FiniteHyperring verified(FiniteHyperring r) {
  REQUIRE(verify_axioms(r).passed());
  return r;
}

}  // namespace

TEST_CASE("closures printed for the example ring") {
  auto r = verified(catalog::example_3_2());
  CHECK(ideal_closure(r, r.set_of({"0"})).closure == r.set_of({"0"}));
  auto b = ideal_closure(r, r.set_of({"0", "b"}));
  CHECK(b.closure == r.set_of({"0", "b"}));
  CHECK(b.is_closed);
  CHECK(ideal_closure(r, r.set_of({"0", "c"})).closure == r.set_of({"0", "c"}));
}

TEST_CASE("non-members of the closure of {0,b}") {
  auto r = verified(catalog::example_3_2());
  auto b = r.set_of({"0", "b"});
  const Element a = *r.find("a"), c = *r.find("c");
  CHECK_FALSE(is_integral_over_ideal(r, b, a).integral);
  CHECK_FALSE(is_integral_over_ideal(r, b, c).integral);
  // The folds quoted for a: with a_1 = b, a^1 + b = {a,c}.
  CHECK(evaluate_dependence(r, a, {*r.find("b")}) == r.set_of({"a", "c"}));
  CHECK(evaluate_dependence(r, c, {*r.find("b")}) == r.set_of({"a"}));
  CHECK(evaluate_dependence(r, c, {*r.find("b"), r.zero()}) == r.set_of({"c"}));
  CHECK(evaluate_dependence(r, c, {r.zero(), r.zero()}) == r.set_of({"c"}));
}

TEST_CASE("members of an ideal have a degree-one witness") {
  auto r = verified(catalog::example_3_2());
  for (const auto& i : enumerate_hyperideals(r)) {
    for (auto x : i) {
      auto res = is_integral_over_ideal(r, i, x);
      REQUIRE(res.integral);
      REQUIRE(res.witness);
      CHECK(res.witness->degree == 1);
      CHECK(res.witness->resulting_set.contains(r.zero()));
      CHECK(i.contains(res.witness->coefficients[0]));
    }
  }
}

TEST_CASE("power criterion") {
  auto r = verified(catalog::example_3_2());
  CHECK_FALSE(is_integral_power_criterion(r, r.set_of({"0"}), *r.find("b")));
  for (Element x = 0; x < r.size(); ++x) {
    CHECK(is_integral_power_criterion(r, r.full_set(), x));
  }
  int pairs = 0;
  for (const auto& i : enumerate_hyperideals(r)) {
    for (Element x = 0; x < r.size(); ++x) {
      CHECK(is_integral_power_criterion(r, i, x) == is_integral_over_ideal(r, i, x).integral);
      ++pairs;
    }
  }
  CHECK(pairs == 16);
}

TEST_CASE("witnesses re-evaluate to a set containing zero") {
  auto batch = random_hyperrings(21, 10);
  for (const auto& ring : batch.rings) {
    for (const auto& i : enumerate_hyperideals(ring)) {
      auto res = ideal_closure(ring, i);
      for (const auto& [x, w] : res.witnesses) {
        CHECK_FALSE(i.contains(x));
        auto again = evaluate_dependence(ring, x, w.coefficients);
        CHECK(again == w.resulting_set);
        CHECK(again.contains(ring.zero()));
        for (std::size_t k = 0; k < w.coefficients.size(); ++k) {
          CHECK(ideal_power(ring, i, k + 1).contains(w.coefficients[k]));
        }
      }
    }
  }
}

TEST_CASE("closure of ideals in Z/n against the classical criterion") {
  for (int n = 2; n <= 8; ++n) {
    auto r = verified(catalog::z_mod(static_cast<std::size_t>(n)));
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      CAPTURE(n);
      CAPTURE(d);
      auto i = oracle::as_elements(r, oracle::multiples(n, d));
      CHECK(ideal_closure(r, i).closure ==
            oracle::as_elements(r, oracle::zn_ideal_closure(n, d)));
      CHECK(difference_condition_set(r, i) == r.singleton(0));
    }
  }
}

TEST_CASE("closure properties on fixtures") {
  for (auto ring : {catalog::example_3_2(), catalog::z_mod(4), catalog::sign_hyperfield(),
                    catalog::krasner_k2(), catalog::z_mod(8)}) {
    auto r = verified(ring);
    auto report = closure_property_suite(r);
    CAPTURE(report.to_text());
    CHECK(report.passed());
    CHECK(report.entries().size() > 3);
  }
}

TEST_CASE("closure sandwich and monotonicity on generated structures") {
  auto batch = random_hyperrings(33, 12);
  for (const auto& ring : batch.rings) {
    auto ideals = enumerate_hyperideals(ring);
    std::vector<ElementSet> closures;
    for (const auto& i : ideals) closures.push_back(ideal_closure(ring, i).closure);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      CHECK(ideals[k].subset_of(closures[k]));
      CHECK(closures[k].subset_of(radical(ring, ideals[k])));
      CHECK(nilradical(ring).subset_of(closures[k]));
      if (!ideals[k].is_full() && is_prime(ring, ideals[k])) CHECK(closures[k] == ideals[k]);
      for (std::size_t l = 0; l < ideals.size(); ++l) {
        if (ideals[k].subset_of(ideals[l])) CHECK(closures[k].subset_of(closures[l]));
      }
    }
    auto report = closure_property_suite(ring);
    CAPTURE(report.to_text());
    CHECK(report.passed());
  }
}

TEST_CASE("difference condition sets") {
  auto r = verified(catalog::example_3_2());
  CHECK(difference_condition_set(r, r.set_of({"0", "b"})) == r.set_of({"0", "b"}));
  CHECK(difference_condition_set(r, r.set_of({"0"})) == r.set_of({"0"}));
  auto z4 = verified(catalog::z_mod(4));
  for (const auto& i : enumerate_hyperideals(z4)) {
    CHECK(difference_condition_set(z4, i) == z4.singleton(0));
    CHECK(is_hyperideal(z4, ideal_closure(z4, i).closure));
  }
}

TEST_CASE("integrality over subhyperrings") {
  auto r = verified(catalog::example_3_2());
  CHECK(subring_integral_closure(r, r.full_set()) == r.full_set());
  for (Element x = 0; x < r.size(); ++x) {
    auto res = is_integral_over_subring(r, r.full_set(), x);
    CHECK(res.integral);
    REQUIRE(res.witness);
    CHECK(res.witness->degree == 1);
  }
  CHECK_THROWS_AS(is_integral_over_subring(r, r.set_of({"0", "a"}), 0), PreconditionError);
}

TEST_CASE("value backend integrality") {
  using namespace hyperring::value;
  ValueHyperfield t1(1);
  auto v = ValuationSubring::minimal(1);
  CHECK_FALSE(integral_over_subring(t1, v, Value({-1})).integral);
  auto two = integral_over_subring(t1, v, Value({2}));
  CHECK(two.integral);
  REQUIRE(two.witness);
  CHECK(two.witness->degree == 1);
  for (int rank = 1; rank <= 2; ++rank) {
    ValueHyperfield f(rank);
    auto vk = ValuationSubring::minimal(rank);
    for (const auto& x : f.window(3)) {
      CHECK(subring_closure_contains(f, vk, x) == vk.contains(x));
    }
  }

  // Witness coefficients are re-checked through the min-twice criterion.
  auto res = integral_over_subring(t1, ValuationSubring::whole_field(1), Value({-4}));
  REQUIRE(res.integral);
  std::vector<Value> terms{Value({-4}).scaled(static_cast<std::int64_t>(res.witness->degree))};
  for (std::size_t k = 0; k < res.witness->coefficients.size(); ++k) {
    auto e = static_cast<std::int64_t>(res.witness->degree - k - 1);
    terms.push_back(res.witness->coefficients[k] + Value({-4}).scaled(e));
  }
  CHECK(sum_contains_zero(terms));
}

TEST_CASE("value ideal closure is the identity on cuts") {
  using namespace hyperring::value;
  auto i = CutIdeal::cut(2, 2, {0, 5});
  CHECK(ideal_closure(i) == i);
  CHECK(ideal_closure(CutIdeal::zero(1)) == CutIdeal::zero(1));
  CHECK(integral_over_ideal(ValueHyperfield(2), i, Value({0, 5})).integral);
  CHECK_FALSE(integral_over_ideal(ValueHyperfield(2), i, Value({0, 4})).integral);
  CHECK_THROWS_AS(integral_over_ideal(ValueHyperfield(1), CutIdeal::cut(1, 1, {1}),
                                      Value({-1})),
                  PreconditionError);
}
