#include "hyperring/suite.hpp"

#include <algorithm>

#include "hyperring/catalog.hpp"
#include "hyperring/closure.hpp"
#include "hyperring/fixture.hpp"
#include "hyperring/generator.hpp"
#include "hyperring/ideals.hpp"
#include "hyperring/poly.hpp"
#include "hyperring/valuation.hpp"
#include "hyperring/window_oracle.hpp"

namespace hyperring {

namespace {

FiniteHyperring verified(FiniteHyperring ring) {
  auto report = verify_axioms(ring);
  if (!report.passed()) {
    throw InternalConsistencyError(ring.name() + " fails axiom " +
                                   report.violations.front().axiom);
  }
  return ring;
}

ElementSet set_from_json(const FiniteHyperring& ring,
                         const nlohmann::ordered_json& labels) {
  return ring.set_of(labels.get<std::vector<std::string>>());
}

// Compares the optional expected block of a fixture with computed values.
void check_expected(Report& report, const FiniteHyperring& ring,
                    const nlohmann::ordered_json& expected) {
  const std::string p = ring.name() + ".";
  if (expected.is_null()) return;
  if (expected.contains("classify")) {
    auto c = classify(ring);
    bool ok = expected["classify"]["hyperfield"].get<bool>() == c.is_hyperfield &&
              expected["classify"]["hyperdomain"].get<bool>() == c.is_hyperdomain;
    report.add(p + "classify", ok,
               "hyperfield=" + std::to_string(c.is_hyperfield) +
                   " hyperdomain=" + std::to_string(c.is_hyperdomain),
               "fixture classification");
  }
  if (expected.contains("hyperideals")) {
    std::vector<ElementSet> want;
    for (const auto& s : expected["hyperideals"]) want.push_back(set_from_json(ring, s));
    std::sort(want.begin(), want.end());
    auto got = enumerate_hyperideals(ring);
    std::string text;
    for (const auto& s : got) text += ring.format(s) + " ";
    report.add(p + "hyperideals", got == want, "enumerated " + text,
               "fixture hyperideal list");
  }
  for (const auto& c : expected.value("closures", nlohmann::ordered_json::array())) {
    auto ideal = set_from_json(ring, c["ideal"]);
    auto want = set_from_json(ring, c["closure"]);
    auto got = ideal_closure(ring, ideal).closure;
    report.add(p + "closure:" + ring.format(ideal), got == want,
               "computed " + ring.format(got) + ", expected " + ring.format(want),
               "fixture closure");
  }
  for (const auto& f : expected.value("folds", nlohmann::ordered_json::array())) {
    std::vector<Element> terms;
    for (const auto& t : f["terms"]) terms.push_back(*ring.find(t.get<std::string>()));
    auto want = set_from_json(ring, f["result"]);
    auto got = hyper_sum_fold(ring, terms);
    report.add(p + "fold:" + ring.format(terms), got == want,
               "computed " + ring.format(got), "fixture fold");
  }
}

std::string describe_pair(const FiniteHyperring& ring, const ElementSet& ideal,
                          Element r, bool direct) {
  return "I=" + ring.format(ideal) + " r=" + ring.label(r) +
         (direct ? ": witness search says integral, power criterion says not"
                 : ": power criterion says integral, witness search says not");
}

// One oracle-equivalence entry per ring.
void oracle_entry(Report& report, const FiniteHyperring& ring) {
  std::size_t pairs = 0;
  std::string bad;
  for (const auto& ideal : enumerate_hyperideals(ring)) {
    for (Element r = 0; r < ring.size() && bad.empty(); ++r) {
      bool direct = is_integral_over_ideal(ring, ideal, r).integral;
      if (direct != is_integral_power_criterion(ring, ideal, r)) {
        bad = describe_pair(ring, ideal, r, direct);
      }
      ++pairs;
    }
  }
  report.add(ring.name(), bad.empty(),
             bad.empty() ? std::to_string(pairs) + " pairs agree" : bad,
             "witness search agrees with the ideal-power criterion");
}

template <class F>
std::string guarded(F&& f) {
  try {
    f();
  } catch (const InternalConsistencyError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

std::vector<FiniteHyperring> bundled_rings() {
  std::vector<FiniteHyperring> out;
  for (const auto& name : bundled_fixture_names()) {
    out.push_back(verified(to_hyperring(load_fixture(name))));
  }
  return out;
}

Report criterion_golden_example() {
  Report report("golden example");
  auto doc = load_fixture("example_3_2");
  auto ring = to_hyperring(doc);
  auto verification = verify_axioms(ring);
  report.add("verify", verification.passed(),
             verification.passed() ? "" : verification.violations.front().detail,
             "the example tables satisfy the axioms");
  if (!verification.passed()) return report;

  auto reference = catalog::example_3_2();
  report.add("fixture_matches_catalog", ring.same_tables(reference),
             "fixture tables differ from the built-in tables", "example tables");

  const auto a = *ring.find("a"), b = *ring.find("b"), c = *ring.find("c");
  struct Golden {
    std::vector<std::string> ideal, closure;
  };
  for (const auto& g : {Golden{{"0"}, {"0"}}, Golden{{"0", "b"}, {"0", "b"}},
                        Golden{{"0", "c"}, {"0", "c"}}}) {
    auto ideal = ring.set_of(g.ideal);
    auto got = ideal_closure(ring, ideal);
    auto want = ring.set_of(g.closure);
    report.add("closure:" + ring.format(ideal), got.closure == want,
               "computed " + ring.format(got.closure), "printed closure");
  }

  // a^2 + b a + c, assembled from the tables and again as a polynomial.
  std::vector<Element> terms{ring.mul(a, a), ring.mul(b, a), c};
  auto folded = hyper_sum_fold(ring, terms);
  auto want = ring.set_of({"0", "b"});
  report.add("witness_expression", folded == want && folded.contains(ring.zero()),
             "a^2 + ba + c = " + ring.format(folded),
             "non-closedness witness computation");
  auto poly = HyperPolynomial(ring, {c, b, a}).evaluate(a);
  report.add("witness_expression_as_polynomial", poly == folded,
             "evaluated to " + ring.format(poly), "non-closedness witness computation");

  for (auto& other : bundled_rings()) {
    check_expected(report, other, load_fixture(other.name()).expected);
  }
  return report;
}

Report criterion_documented_divergence() {
  Report report("documented divergence");
  auto doc = load_fixture("example_3_2");
  auto ring = verified(to_hyperring(doc));
  if (!doc.expected.contains("paper_claim_divergent")) {
    report.add("fixture_records_divergence", false,
               "expected.paper_claim_divergent missing", "fixture change");
    return report;
  }
  const auto& claim = doc.expected["paper_claim_divergent"];
  auto set = set_from_json(ring, claim["set"]);
  bool checker = is_hyperideal(ring, set);
  bool recorded = claim["checker_says_hyperideal"].get<bool>();
  bool paper = claim["paper_says_hyperideal"].get<bool>();
  report.add("checker_matches_fixture", checker == recorded,
             ring.format(set) + " is_hyperideal=" + std::to_string(checker),
             "recorded checker verdict");
  report.add("checker_disagrees_with_claim", checker != paper,
             "checker now agrees with the claim that " + ring.format(set) +
                 " is a hyperideal",
             "claimed hyperideal J");

  auto violation = hyperideal_violation(ring, set);
  const auto& w = claim["witness"];
  bool witness_ok =
      violation && violation->kind == IdealViolation::Kind::difference &&
      ring.label(violation->a) == w["left"].get<std::string>() &&
      ring.label(violation->b) == w["right"].get<std::string>() &&
      violation->escaped == set_from_json(ring, w["difference"]);
  report.add("witness", witness_ok,
             violation ? violation->describe(ring) : "no violation found",
             "difference leaves J");
  return report;
}

Report criterion_oracle_equivalence(std::uint64_t seed, std::size_t random) {
  Report report("oracle equivalence");
  for (const auto& ring : bundled_rings()) oracle_entry(report, ring);
  GeneratorOptions opts;
  opts.max_order = 5;
  auto batch = random_hyperrings(seed, random, opts);
  report.add("random_structures", batch.rings.size() == random,
             std::to_string(batch.rings.size()) + " generated, " +
                 std::to_string(batch.timeouts) + " generator timeouts",
             "seeded random structures of order at most 5");
  for (const auto& ring : batch.rings) oracle_entry(report, ring);
  return report;
}

Report criterion_closure_properties(const std::vector<FiniteHyperring>& rings) {
  Report report("closure properties");
  for (const auto& ring : rings) report.merge(closure_property_suite(ring), ring.name());
  return report;
}

Report criterion_difference_condition(const std::vector<FiniteHyperring>& rings) {
  Report report("difference condition");
  std::size_t cases = 0;
  for (const auto& ring : rings) {
    for (const auto& ideal : enumerate_hyperideals(ring)) {
      if (difference_condition_set(ring, ideal) != ring.singleton(ring.zero())) continue;
      ++cases;
      auto c = ideal_closure(ring, ideal).closure;
      auto v = hyperideal_violation(ring, c);
      report.add(ring.name() + ":" + ring.format(ideal), !v,
                 v ? "closure " + ring.format(c) + ": " + v->describe(ring) : "",
                 "closure is a hyperideal under the difference condition");
    }
  }
  report.add("nonvacuous", cases > 0, std::to_string(cases) + " ideals qualify",
             "at least one ideal satisfies the difference condition");
  return report;
}

Report criterion_value_consistency(std::uint64_t seed, int cases, int window) {
  Report report("value backend consistency");
  Rng rng(seed);
  const char* ops[] = {"sum", "product", "power", "radical", "prime", "primary"};
  for (int rank = 1; rank <= 2; ++rank) {
    int share = rank == 1 ? cases / 2 : cases - cases / 2;
    std::vector<std::string> bad(6);
    for (int t = 0; t < share; ++t) {
      auto i = value::random_cut(rng, rank);
      auto j = value::random_cut(rng, rank);
      auto n = static_cast<int>(draw(rng, 1, 3));
      std::string errs[] = {
          guarded([&] { value::checked_cut_sum(i, j, window); }),
          guarded([&] { value::checked_cut_product(i, j, window); }),
          guarded([&] { value::checked_cut_power(i, n, window); }),
          guarded([&] { value::checked_cut_radical(i, window); }),
          guarded([&] { value::checked_cut_is_prime(i, window); }),
          guarded([&] { value::checked_cut_is_primary(i, window); }),
      };
      for (std::size_t k = 0; k < 6; ++k) {
        if (bad[k].empty()) bad[k] = errs[k];
      }
    }
    for (std::size_t k = 0; k < 6; ++k) {
      report.add("rank" + std::to_string(rank) + "." + ops[k], bad[k].empty(),
                 bad[k].empty() ? std::to_string(share) + " cases agree" : bad[k],
                 "closed form matches the window oracle");
    }
  }
  return report;
}

Report criterion_valuation_battery(std::uint64_t seed) {
  Report report("valuation battery");
  for (int rank = 1; rank <= 2; ++rank) {
    report.merge(value::valuation_battery(rank, seed), "rank" + std::to_string(rank));
  }
  // The chain of M-primary cuts at rank 2 meets in cut(1, (1)).
  const auto p = value::CutIdeal::cut(2, 1, {1});
  const value::ValueHyperfield field(2);
  std::string bad;
  for (const auto& v : field.window(6)) {
    if (v >= field.one()) {
      bool in_all = true;
      for (int e = 1; e <= 2 * value::kDefaultWindow && in_all; ++e) {
        in_all = value::CutIdeal::cut(2, 2, {0, e}).contains(v);
      }
      if (in_all != p.contains(v) && bad.empty()) bad = v.to_string();
    }
  }
  report.add("rank2.chain_meets_in_P", bad.empty(), "differs at " + bad,
             "intersection of the primary chain at rank 2");
  return report;
}

Report criterion_poly_bridge() {
  Report report("polynomial bridge");
  auto ring = verified(catalog::example_3_2());
  const auto n = static_cast<Element>(ring.size());
  std::vector<HyperPolynomial> polys;
  for (Element c0 = 0; c0 < n; ++c0) {
    for (Element c1 = 0; c1 < n; ++c1) {
      for (Element c2 = 0; c2 < n; ++c2) polys.emplace_back(ring, std::vector{c0, c1, c2});
    }
  }

  std::string add_bad, mul_bad;
  std::size_t checked = 0;
  for (const auto& f : polys) {
    for (const auto& g : polys) {
      auto sums = poly_add(f, g);
      auto prods = poly_mul(f, g);
      for (Element t = 0; t < n; ++t) {
        ++checked;
        auto fv = f.evaluate(t), gv = g.evaluate(t);
        auto expected_sum = ring.add_sets(fv, gv);
        auto united = ring.empty_set();
        for (const auto& h : sums) {
          auto hv = h.evaluate(t);
          if (!hv.subset_of(expected_sum) && add_bad.empty()) {
            add_bad = h.to_string() + " at " + ring.label(t) + " leaves f(t)+g(t)";
          }
          united |= hv;
        }
        if (united != expected_sum && add_bad.empty()) {
          add_bad = "f=" + f.to_string() + " g=" + g.to_string() + " t=" + ring.label(t) +
                    ": union " + ring.format(united) + " vs " + ring.format(expected_sum);
        }

        std::vector<Element> terms;
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; j < 3; ++j) {
            terms.push_back(ring.mul(ring.mul(f.coefficient(i), g.coefficient(j)),
                                     ring.pow(t, i + j)));
          }
        }
        auto expanded = hyper_sum_fold(ring, terms);
        united = ring.empty_set();
        for (const auto& h : prods) {
          auto hv = h.evaluate(t);
          if (!hv.subset_of(expanded) && mul_bad.empty()) {
            mul_bad = h.to_string() + " at " + ring.label(t) + " leaves the expansion";
          }
          united |= hv;
        }
        auto pointwise = ring.empty_set();
        for (auto x : fv) {
          for (auto y : gv) pointwise.insert(ring.mul(x, y));
        }
        if ((united != expanded || !pointwise.subset_of(united)) && mul_bad.empty()) {
          mul_bad = "f=" + f.to_string() + " g=" + g.to_string() + " t=" + ring.label(t) +
                    ": union " + ring.format(united) + ", expansion " +
                    ring.format(expanded) + ", f(t)g(t) " + ring.format(pointwise);
        }
      }
    }
  }
  report.add("addition", add_bad.empty(),
             add_bad.empty() ? std::to_string(checked) + " cases" : add_bad,
             "evaluation respects polynomial hyperaddition");
  report.add("multiplication", mul_bad.empty(),
             mul_bad.empty() ? std::to_string(checked) + " cases" : mul_bad,
             "evaluation respects polynomial hypermultiplication");

  // Integrality over an ideal is a monic polynomial with a_i in I^i
  // vanishing at r; search the polynomials directly.
  std::string dep_bad;
  const std::size_t max_degree = ring.size() + 1;
  for (const auto& ideal : enumerate_hyperideals(ring)) {
    std::vector<std::vector<Element>> powers{{}};
    for (std::size_t i = 1; i <= max_degree; ++i) {
      auto members = ideal_power(ring, ideal, i).elements();
      powers.emplace_back(members.begin(), members.end());
    }
    for (Element r = 0; r < n; ++r) {
      bool found = false;
      for (std::size_t d = 1; d <= max_degree && !found; ++d) {
        // coefficient of x^(d-i) is a_i, leading coefficient one
        std::vector<std::size_t> idx(d, 0);
        while (!found) {
          std::vector<Element> coeffs(d + 1, ring.zero());
          coeffs[d] = ring.one();
          for (std::size_t i = 1; i <= d; ++i) coeffs[d - i] = powers[i][idx[i - 1]];
          found = HyperPolynomial(ring, coeffs).evaluate(r).contains(ring.zero());
          std::size_t pos = 0;
          while (pos < d && ++idx[pos] == powers[pos + 1].size()) idx[pos++] = 0;
          if (pos == d) break;
        }
      }
      if (found != is_integral_over_ideal(ring, ideal, r).integral && dep_bad.empty()) {
        dep_bad = "I=" + ring.format(ideal) + " r=" + ring.label(r);
      }
    }
  }
  report.add("dependence_polynomial", dep_bad.empty(), dep_bad,
             "integral dependence as a vanishing monic polynomial");
  return report;
}

const std::vector<std::string>& suite_scopes() {
  static const std::vector<std::string> scopes{
      "golden", "divergence", "oracle", "remark", "difference", "value", "valuation", "poly"};
  return scopes;
}

Report run_suite(const SuiteOptions& opts) {
  for (const auto& s : opts.only) {
    if (std::find(suite_scopes().begin(), suite_scopes().end(), s) == suite_scopes().end()) {
      throw PreconditionError("unknown suite scope '" + s + "'");
    }
  }
  auto wanted = [&](const std::string& s) { return opts.only.empty() || opts.only.count(s); };

  std::vector<FiniteHyperring> rings;
  if (opts.fixture.empty()) {
    rings = bundled_rings();
  } else {
    rings.push_back(verified(to_hyperring(load_fixture(opts.fixture))));
  }

  Report report("suite seed=" + std::to_string(opts.seed));
  if (wanted("golden")) report.merge(criterion_golden_example(), "golden");
  if (wanted("divergence")) report.merge(criterion_documented_divergence(), "divergence");
  if (wanted("oracle")) {
    Report oracle("oracle equivalence");
    if (opts.fixture.empty()) {
      oracle = criterion_oracle_equivalence(opts.seed, opts.random);
    } else {
      for (const auto& ring : rings) oracle_entry(oracle, ring);
      if (opts.random > 0) {
        auto batch = random_hyperrings(opts.seed, opts.random);
        oracle.add("random_structures", batch.timeouts == 0,
                   std::to_string(batch.timeouts) + " generator timeouts");
        for (const auto& ring : batch.rings) oracle_entry(oracle, ring);
      }
    }
    report.merge(oracle, "oracle");
  }
  if (wanted("remark")) report.merge(criterion_closure_properties(rings), "remark");
  if (wanted("difference")) report.merge(criterion_difference_condition(rings), "difference");
  if (wanted("value")) {
    report.merge(criterion_value_consistency(opts.seed, opts.value_cases, opts.window),
                 "value");
  }
  if (wanted("valuation")) report.merge(criterion_valuation_battery(opts.seed), "valuation");
  if (wanted("poly")) report.merge(criterion_poly_bridge(), "poly");
  return report;
}

}  // namespace hyperring
