#include <map>

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

}  // namespace

TEST_CASE("example tables satisfy the axioms") {
  auto r = catalog::example_3_2();
  CHECK(r.verification() == Verification::unchecked);
  CHECK(verify_axioms(r).passed());
  CHECK(r.verified());
  CHECK(r.neg(*r.find("a")) == *r.find("a"));
  CHECK(r.neg(*r.find("c")) == *r.find("c"));
}

TEST_CASE("classical rings embed with singleton cells") {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto r = catalog::z_mod(n);
    CAPTURE(n);
    CHECK(verify_axioms(r).passed());
    auto c = classify(r);
    bool field = oracle::is_prime_number(static_cast<int>(n));
    CHECK(c.is_hyperfield == field);
    CHECK(c.is_hyperdomain == field);
    for (Element x = 0; x < n; ++x) CHECK(r.neg(x) == (n - x) % n);
  }
}

TEST_CASE("a mutated cell breaks reversibility and associativity") {
  auto good = catalog::example_3_2();
  auto raw = oracle::from_ring(good);
  const int a = 1, b = 2;
  raw.add[a][b] = {a};
  raw.add[b][a] = {a};
  auto bad = oracle::to_ring(raw);
  auto report = verify_axioms(bad);
  CHECK_FALSE(report.passed());
  CHECK(report.violates("reversibility"));
  CHECK(report.violates("add_associative"));
  CHECK(bad.verification() == Verification::failed);
  CHECK_THROWS_AS(classify(bad), PreconditionError);
  for (const auto& v : report.violations) CHECK_FALSE(v.detail.empty());
}

TEST_CASE("verify_axioms agrees with a definitional checker on single-cell mutations") {
  // Flip one element in or out of one addition cell (kept symmetric), or
  // change one product, and compare verdicts.
  std::vector<FiniteHyperring> bases{catalog::example_3_2(), catalog::krasner_k2(),
                                     catalog::sign_hyperfield(), catalog::z_mod(4)};
  int agreed = 0;
  for (auto& base : bases) {
    auto raw = oracle::from_ring(base);
    for (int x = 0; x < raw.n; ++x) {
      for (int y = x; y < raw.n; ++y) {
        for (int z = 0; z < raw.n; ++z) {
          auto m = raw;
          if (m.add[x][y].count(z)) {
            m.add[x][y].erase(z);
          } else {
            m.add[x][y].insert(z);
          }
          m.add[y][x] = m.add[x][y];
          if (m.add[x][y].empty()) continue;
          auto ring = oracle::to_ring(m);
          CHECK(verify_axioms(ring).passed() == oracle::is_krasner(m));
          ++agreed;

          auto p = raw;
          p.mul[x][y] = p.mul[y][x] = z;
          auto ring2 = oracle::to_ring(p);
          CHECK(verify_axioms(ring2).passed() == oracle::is_krasner(p));
          ++agreed;
        }
      }
    }
  }
  CHECK(agreed > 50);
}

TEST_CASE("structural errors on malformed tables") {
  std::vector<std::vector<FiniteHyperring::AddCell>> add{{{0}, {1}}, {{1}}};
  std::vector<std::vector<Element>> mul{{0, 0}, {0, 1}};
  CHECK_THROWS_AS(FiniteHyperring("ragged", {"0", "1"}, 0, 1, add, mul), StructuralError);
  std::vector<std::vector<FiniteHyperring::AddCell>> ok{{{0}, {1}}, {{1}, {0, 1}}};
  CHECK_THROWS_AS(FiniteHyperring("dup", {"0", "0"}, 0, 1, ok, mul), StructuralError);
  CHECK_THROWS_AS(FiniteHyperring("range", {"0", "1"}, 0, 5, ok, mul), StructuralError);
  auto unverified = catalog::example_3_2();
  CHECK_THROWS_AS(unverified.neg(0), PreconditionError);
}

TEST_CASE("classification of the fixtures") {
  auto ex = verified(catalog::example_3_2());
  CHECK_FALSE(classify(ex).is_hyperfield);
  CHECK_FALSE(classify(ex).is_hyperdomain);
  auto s = verified(catalog::sign_hyperfield());
  CHECK(classify(s).is_hyperfield);
  CHECK(classify(s).is_hyperdomain);
  auto k = verified(catalog::krasner_k2());
  CHECK(classify(k).is_hyperfield);
  auto z4 = verified(catalog::z_mod(4));
  CHECK_FALSE(classify(z4).is_hyperfield);
  CHECK_FALSE(classify(z4).is_hyperdomain);
}

TEST_CASE("hyper-sum folds") {
  auto r = verified(catalog::example_3_2());
  const Element a = *r.find("a"), b = *r.find("b"), c = *r.find("c");
  std::vector<Element> terms{r.mul(a, a), r.mul(b, a), c};
  CHECK(terms == std::vector<Element>{a, b, c});
  CHECK(hyper_sum_fold(r, terms) == r.set_of({"0", "b"}));
  std::vector<Element> single{c};
  CHECK(hyper_sum_fold(r, single) == r.singleton(c));
  std::vector<Element> bb{b, b};
  CHECK(hyper_sum_fold(r, bb) == r.set_of({"0", "b"}));
  CHECK_THROWS_AS(hyper_sum_fold(r, std::span<const Element>{}), PreconditionError);
}

TEST_CASE("fold is independent of term order") {
  auto r = verified(catalog::example_3_2());
  std::vector<Element> terms{1, 2, 3, 2};
  std::sort(terms.begin(), terms.end());
  auto first = hyper_sum_fold(r, terms);
  do {
    CHECK(hyper_sum_fold(r, terms) == first);
  } while (std::next_permutation(terms.begin(), terms.end()));
}

TEST_CASE("homomorphism checks") {
  auto r = verified(catalog::example_3_2());
  HomomorphismTable id{r, r, {0, 1, 2, 3}};
  CHECK(check_homomorphism(id).passed());
  // b -> c, everything else fixed
  HomomorphismTable swap{r, r, {0, 1, 3, 3}};
  CHECK_FALSE(check_homomorphism(swap).passed());

  auto q = quotient_by_normal_ideal(r, r.set_of({"0", "b"}));
  CHECK(check_homomorphism(q.projection).passed());
  HomomorphismTable short_map{r, r, {0, 1}};
  CHECK_THROWS_AS(check_homomorphism(short_map), StructuralError);
}

TEST_CASE("subhyperrings") {
  auto r = verified(catalog::example_3_2());
  CHECK(is_subhyperring(r, r.full_set()));
  CHECK_FALSE(is_subhyperring(r, r.set_of({"0", "a"})));
  auto s = verified(catalog::sign_hyperfield());
  CHECK_FALSE(is_subhyperring(s, s.set_of({"0", "1"})));
  CHECK(is_subhyperring(s, s.full_set()));
}

TEST_CASE("generated structures pass the definitional checker") {
  auto batch = random_hyperrings(11, 12);
  CHECK(batch.rings.size() + batch.timeouts == 12);
  CHECK(batch.rings.size() >= 10);
  std::map<std::size_t, int> orders;
  for (const auto& ring : batch.rings) {
    CHECK(ring.verified());
    CHECK(ring.size() <= 5);
    CHECK(oracle::is_krasner(oracle::from_ring(ring)));
    ++orders[ring.size()];
  }
  CHECK(orders.size() >= 2);
}

TEST_CASE("generation is deterministic per seed") {
  auto a = random_hyperrings(5, 6);
  auto b = random_hyperrings(5, 6);
  REQUIRE(a.rings.size() == b.rings.size());
  for (std::size_t i = 0; i < a.rings.size(); ++i) {
    CHECK(a.rings[i].same_tables(b.rings[i]));
    CHECK(a.rings[i].name() == b.rings[i].name());
  }
}
