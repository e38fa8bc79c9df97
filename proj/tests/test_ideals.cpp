#include "doctest.h"
#include "hyperring/catalog.hpp"
#include "hyperring/generator.hpp"
#include "hyperring/ideals.hpp"
#include "oracles.hpp"

using namespace hyperring;

namespace {

FiniteHyperring verified(FiniteHyperring r) {
  REQUIRE(verify_axioms(r).passed());
  return r;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Same operations up to labels.
bool same_operations(const FiniteHyperring& x, const FiniteHyperring& y) {
  if (x.size() != y.size() || x.zero() != y.zero() || x.one() != y.one()) return false;
  for (Element i = 0; i < x.size(); ++i) {
    for (Element j = 0; j < x.size(); ++j) {
      if (x.add(i, j).bits() != y.add(i, j).bits() || x.mul(i, j) != y.mul(i, j)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("hyperideals of the example ring") {
  auto r = verified(catalog::example_3_2());
  CHECK(is_hyperideal(r, r.set_of({"0"})));
  CHECK(is_hyperideal(r, r.set_of({"0", "b"})));
  CHECK(is_hyperideal(r, r.set_of({"0", "c"})));
  CHECK(is_hyperideal(r, r.full_set()));

  auto j = r.set_of({"0", "b", "c"});
  CHECK_FALSE(is_hyperideal(r, j));
  auto v = hyperideal_violation(r, j);
  REQUIRE(v);
  CHECK(v->kind == IdealViolation::Kind::difference);
  CHECK(r.label(v->a) == "b");
  CHECK(r.label(v->b) == "c");
  CHECK(v->escaped == r.set_of({"a"}));
  CHECK_THROWS_AS(is_hyperideal(r, r.empty_set()), PreconditionError);

  auto list = enumerate_hyperideals(r);
  std::vector<ElementSet> want{r.set_of({"0"}), r.set_of({"0", "b"}),
                               r.set_of({"0", "c"}), r.full_set()};
  std::sort(want.begin(), want.end());
  CHECK(list == want);
}

TEST_CASE("generated ideals, sums and products") {
  auto r = verified(catalog::example_3_2());
  CHECK(ideal_generated_by(r, r.set_of({"b"})) == r.set_of({"0", "b"}));
  CHECK(ideal_generated_by(r, r.set_of({"0"})) == r.set_of({"0"}));
  CHECK(ideal_generated_by(r, r.empty_set()) == r.set_of({"0"}));
  CHECK(ideal_generated_by(r, r.set_of({"a"})) == r.full_set());
  auto b = r.set_of({"0", "b"}), c = r.set_of({"0", "c"});
  CHECK(ideal_sum(r, b, c) == r.full_set());
  CHECK(ideal_product(r, c, c) == c);
  CHECK(ideal_product(r, b, c) == r.set_of({"0"}));
  for (const auto& i : enumerate_hyperideals(r)) {
    CHECK(ideal_product(r, i, r.full_set()) == i);
    CHECK(ideal_power(r, i, 0) == r.full_set());
    CHECK(ideal_power(r, i, 1) == i);
  }
}

TEST_CASE("radicals and prime ideals in the example ring") {
  auto r = verified(catalog::example_3_2());
  auto zero = r.set_of({"0"}), b = r.set_of({"0", "b"}), c = r.set_of({"0", "c"});
  CHECK(radical(r, b) == b);
  CHECK(radical(r, r.full_set()) == r.full_set());
  CHECK(nilradical(r) == zero);
  CHECK(is_prime(r, b));
  CHECK(is_prime(r, c));
  CHECK_FALSE(is_prime(r, zero));
  CHECK(is_maximal(r, b));
  CHECK(is_maximal(r, c));
  CHECK_FALSE(is_maximal(r, zero));
  CHECK(is_normal(r, b));
  CHECK_FALSE(is_normal(r, c));
  CHECK(is_normal(r, r.full_set()));
  CHECK_THROWS_AS(is_prime(r, r.full_set()), PreconditionError);
}

TEST_CASE("ideal lattice of Z/n against classical arithmetic") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    auto r = verified(catalog::z_mod(static_cast<std::size_t>(n)));
    std::vector<ElementSet> want;
    for (int d : divisors(n)) want.push_back(oracle::as_elements(r, oracle::multiples(n, d)));
    std::sort(want.begin(), want.end());
    CHECK(enumerate_hyperideals(r) == want);
    CHECK(enumerate_hyperideals(r, EnumerationMode::incremental) == want);

    for (int d : divisors(n)) {
      if (d == 1) continue;
      CAPTURE(d);
      auto i = oracle::as_elements(r, oracle::multiples(n, d));
      // (d) with d | n, d > 1 is prime/maximal iff d is prime, primary iff
      // d is a prime power (d = n is the zero ideal).
      CHECK(is_prime(r, i) == oracle::is_prime_number(d));
      CHECK(is_maximal(r, i) == oracle::is_prime_number(d));
      CHECK(is_primary(r, i) == oracle::is_prime_power(d));
      CHECK(is_normal(r, i));
      int rad = 1;
      for (int p = 2; p <= d; ++p) {
        if (d % p == 0 && oracle::is_prime_number(p)) rad *= p;
      }
      CHECK(radical(r, i) == oracle::as_elements(r, oracle::multiples(n, rad)));
    }
  }
}

TEST_CASE("quotients") {
  auto r = verified(catalog::example_3_2());
  auto q = quotient_by_normal_ideal(r, r.set_of({"0", "b"}));
  CHECK(q.ring.size() == 2);
  CHECK(q.ring.verified());
  REQUIRE(q.cosets.size() == 2);
  CHECK(q.cosets[0] == r.set_of({"0", "b"}));
  CHECK(q.cosets[1] == r.set_of({"a", "c"}));
  // {a,c} + {a,c} lands in the zero coset only: the quotient is Z/2.
  CHECK(q.ring.add(1, 1) == q.ring.singleton(0));
  CHECK(same_operations(q.ring, verified(catalog::z_mod(2))));

  // {0} is not normal here: a + 0 - a = a + a = {0,b}.
  CHECK_FALSE(is_normal(r, r.set_of({"0"})));
  CHECK_THROWS_AS(quotient_by_normal_ideal(r, r.set_of({"0"})), PreconditionError);

  auto z4 = verified(catalog::z_mod(4));
  auto same = quotient_by_normal_ideal(z4, z4.set_of({"0"}));
  CHECK(same_operations(same.ring, z4));
  auto z2 = quotient_by_normal_ideal(z4, z4.set_of({"0", "2"}));
  CHECK(same_operations(z2.ring, verified(catalog::z_mod(2))));

  CHECK_THROWS_AS(quotient_by_normal_ideal(r, r.set_of({"0", "c"})), PreconditionError);
}

TEST_CASE("enumeration matches the definitional scan on generated structures") {
  auto batch = random_hyperrings(3, 15);
  for (const auto& ring : batch.rings) {
    auto raw = oracle::from_ring(ring);
    std::vector<ElementSet> want;
    for (const auto& s : oracle::all_ideals(raw)) want.push_back(oracle::as_elements(ring, s));
    std::sort(want.begin(), want.end());
    CHECK(enumerate_hyperideals(ring) == want);
    CHECK(enumerate_hyperideals(ring, EnumerationMode::incremental) == want);
  }
}

TEST_CASE("ideal operations stay inside the ideal lattice") {
  auto batch = random_hyperrings(9, 10);
  for (const auto& ring : batch.rings) {
    auto ideals = enumerate_hyperideals(ring);
    for (const auto& i : ideals) {
      CHECK(i.subset_of(radical(ring, i)));
      CHECK(radical(ring, radical(ring, i)) == radical(ring, i));
      CHECK(is_hyperideal(ring, radical(ring, i)));
      for (const auto& j : ideals) {
        auto s = ideal_sum(ring, i, j), p = ideal_product(ring, i, j);
        CHECK(is_hyperideal(ring, s));
        CHECK(is_hyperideal(ring, p));
        CHECK(p.subset_of(i & j));
        CHECK((i | j).subset_of(s));
      }
      if (!i.is_full() && is_prime(ring, i)) {
        CHECK(is_primary(ring, i));
        CHECK(radical(ring, i) == i);
      }
      if (!i.is_full() && is_maximal(ring, i)) CHECK(is_prime(ring, i));
    }
  }
}

TEST_CASE("ideal handles cache predicates and reject non-ideals") {
  auto r = verified(catalog::example_3_2());
  IdealHandle b(r, r.set_of({"0", "b"}));
  IdealHandle c(r, r.set_of({"0", "c"}));
  CHECK(b.is_prime());
  CHECK(b.is_normal());
  CHECK((b + c).set().is_full());
  CHECK((c * c) == c);
  CHECK(b.pow(3) == b);
  CHECK(b.radical() == b);
  CHECK_THROWS_AS(IdealHandle(r, r.set_of({"0", "b", "c"})), NotAHyperideal);
}
