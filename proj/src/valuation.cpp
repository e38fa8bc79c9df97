#include "hyperring/valuation.hpp"

#include <algorithm>
#include <set>

#include "hyperring/closure.hpp"
#include "hyperring/random.hpp"
#include "hyperring/window_oracle.hpp"

namespace hyperring {

FiniteHypervaluation trivial_valuation(const FiniteHyperring& ring) {
  FiniteHypervaluation nu{1, {}};
  for (Element x = 0; x < ring.size(); ++x) {
    nu.values.push_back(x == ring.zero() ? value::Value::infinity(1)
                                         : value::Value::unit(1));
  }
  return nu;
}

VerificationReport check_hypervaluation(const FiniteHyperring& ring,
                                        const FiniteHypervaluation& nu) {
  ring.require_verified();
  if (nu.values.size() != ring.size()) {
    throw StructuralError("valuation table has " +
                          std::to_string(nu.values.size()) +
                          " entries for a carrier of " +
                          std::to_string(ring.size()));
  }
  VerificationReport report;
  auto fail = [&](const char* axiom, std::vector<Element> w, std::string detail) {
    if (!report.violates(axiom)) {
      report.violations.push_back({axiom, std::move(w), std::move(detail)});
    }
  };
  const auto& v = nu.values;
  std::set<value::Value> image;
  for (Element x = 0; x < ring.size(); ++x) {
    if (v[x].rank() != nu.rank) throw StructuralError("valuation rank mismatch");
    if (v[x].is_infinite() != (x == ring.zero())) {
      fail("zero", {x}, "nu(" + ring.label(x) + ") = " + v[x].to_string());
    }
    if (v[ring.neg(x)] != v[x]) {
      fail("negation", {x}, "nu(-" + ring.label(x) + ") != nu(" + ring.label(x) + ")");
    }
    if (!v[x].is_infinite()) image.insert(v[x]);
    for (Element y = 0; y < ring.size(); ++y) {
      if (v[ring.mul(x, y)] != v[x] + v[y]) {
        fail("multiplicative", {x, y},
             "nu(" + ring.label(x) + "*" + ring.label(y) + ") = " +
                 v[ring.mul(x, y)].to_string() + " but nu sum is " +
                 (v[x] + v[y]).to_string());
      }
      for (auto z : ring.add(x, y)) {
        if (v[z] < std::min(v[x], v[y])) {
          fail("ultrametric", {x, y, z},
               ring.label(z) + " in " + ring.label(x) + "+" + ring.label(y) +
                   " has value below the minimum");
        }
      }
    }
  }
  for (const auto& a : image) {
    if (!image.contains(a.inverse())) {
      fail("image_group", {}, a.to_string() + " has no inverse in the image");
    }
    for (const auto& b : image) {
      if (!image.contains(a + b)) {
        fail("image_group", {}, "image not closed at " + a.to_string() + "+" +
                                    b.to_string());
      }
    }
  }
  return report;
}

NuIdealVerdict is_nu_hyperideal(const FiniteHyperring& ring,
                                const FiniteHypervaluation& nu,
                                const ElementSet& ideal) {
  if (ideal.width() != ring.size() || nu.values.size() != ring.size()) {
    throw PreconditionError("ideal or valuation does not match the carrier");
  }
  for (auto x : ideal) {
    for (Element y = 0; y < ring.size(); ++y) {
      if (!ideal.contains(y) && nu.values[y] >= nu.values[x]) {
        return {false, std::make_pair(ring.label(x), ring.label(y))};
      }
    }
  }
  return {};
}

namespace value {

namespace {

std::vector<Value> window_with_infinity(const ValueHyperfield& field,
                                        int radius) {
  auto points = field.window(radius);
  points.push_back(field.zero());
  return points;
}

CutIdeal smaller(const CutIdeal& a, const CutIdeal& b) {
  return a.subset_of(b) ? a : b;
}

std::string join_cuts(const std::vector<CutIdeal>& cuts) {
  std::string out;
  for (const auto& c : cuts) out += (out.empty() ? "" : " ") + c.to_string();
  return out;
}

// Window-level intersection over the ideals of a family: membership of v in
// every member.
bool in_all(const std::vector<CutIdeal>& family, const Value& v) {
  return std::all_of(family.begin(), family.end(),
                     [&](const CutIdeal& c) { return c.contains(v); });
}

// Compares a closed-form intersection with the pointwise intersection of
// a truncated family on the window; returns the first disagreement.
std::optional<std::string> intersection_mismatch(
    const ValueHyperfield& field, const std::vector<CutIdeal>& family,
    const CutIdeal& closed, int radius) {
  for (const auto& v : field.window(radius)) {
    if (!ValuationSubring::minimal(field.rank()).contains(v)) continue;
    if (in_all(family, v) != closed.contains(v)) return v.to_string();
  }
  return std::nullopt;
}

}  // namespace

VerificationReport check_hypervaluation(const ValueHyperfield& field,
                                        const ValueMap& nu, int radius) {
  VerificationReport report;
  auto fail = [&](const char* axiom, std::string detail) {
    if (!report.violates(axiom)) report.violations.push_back({axiom, {}, detail});
  };
  auto points = window_with_infinity(field, radius);
  for (const auto& x : points) {
    auto vx = nu(x);
    if (vx.is_infinite() != x.is_infinite()) {
      fail("zero", "nu(" + x.to_string() + ") = " + vx.to_string());
    }
    if (nu(field.neg(x)) != vx) fail("negation", "at " + x.to_string());
    for (const auto& y : points) {
      auto vy = nu(y);
      if (nu(field.mul(x, y)) != vx + vy) {
        fail("multiplicative", "at " + x.to_string() + ", " + y.to_string());
      }
      auto sum = field.add(x, y);
      for (const auto& z : points) {
        if (sum.contains(z) && nu(z) < std::min(vx, vy)) {
          fail("ultrametric", z.to_string() + " in " + x.to_string() + "+" +
                                  y.to_string() + " has value " +
                                  nu(z).to_string());
        }
      }
    }
  }
  for (const auto& target : field.window(std::max(1, radius / 2))) {
    bool hit = std::any_of(points.begin(), points.end(),
                           [&](const Value& x) { return nu(x) == target; });
    if (!hit) fail("image_group", target.to_string() + " is not attained");
  }
  return report;
}

NuIdealVerdict is_nu_hyperideal(const ValueHyperfield& field,
                                const std::function<bool(const Value&)>& ideal,
                                int radius) {
  const auto v = ValuationSubring::minimal(field.rank());
  auto points = window_with_infinity(field, radius);
  for (const auto& x : points) {
    if (!v.contains(x) || !ideal(x)) continue;
    for (const auto& y : points) {
      if (v.contains(y) && y >= x && !ideal(y)) {
        return {false, std::make_pair(x.to_string(), y.to_string())};
      }
    }
  }
  return {};
}

NuIdealVerdict is_nu_hyperideal(const CutIdeal& ideal, int radius) {
  return is_nu_hyperideal(
      ValueHyperfield(ideal.rank()),
      [&](const Value& x) { return ideal.contains(x); }, radius);
}

CutIdeal extend_contract(const CutIdeal& ideal, const ValuationSubring& w,
                         const ValuationSubring& r_sub) {
  if (ideal.rank() != w.rank() || w.rank() != r_sub.rank()) {
    throw PreconditionError("ideal and subrings have different ranks");
  }
  if (r_sub != ValuationSubring::minimal(r_sub.rank())) {
    throw PreconditionError("cut ideals are ideals of V; got subring " +
                            r_sub.name());
  }
  if (ideal.is_zero()) return ideal;
  if (extension_is_whole_ring(ideal, w)) return CutIdeal::unit(ideal.rank());
  auto m = std::min(ideal.level(), w.level());
  Vector p(ideal.prefix().begin(), ideal.prefix().begin() + m);
  return CutIdeal::cut(ideal.rank(), m, std::move(p));
}

bool valuation_ring_is_integrally_closed(const ValueHyperfield& field,
                                         const ValuationSubring& w, int radius) {
  for (const auto& x : window_with_infinity(field, radius)) {
    if (subring_closure_contains(field, w, x) != w.contains(x)) return false;
  }
  return true;
}

CutIdeal closure_via_valuations(const ValueHyperfield& field,
                                const CutIdeal& ideal,
                                const ValuationSubring& r_sub) {
  auto out = CutIdeal::unit(field.rank());
  for (const auto& w : enumerate_intermediate_valuation_rings(field)) {
    out = smaller(out, extend_contract(ideal, w, r_sub));
  }
  auto direct = value::ideal_closure(ideal);
  if (out != direct) {
    throw InternalConsistencyError(
        "closure of " + ideal.to_string() + ": valuation intersection gives " +
        out.to_string() + ", scaling preimages give " + direct.to_string());
  }
  return out;
}

std::optional<ExistenceWitness> existence_witness(const ValueHyperfield& field,
                                                  const ValuationSubring& r_sub,
                                                  const CutIdeal& prime) {
  if (!cut_is_prime(prime)) {
    throw PreconditionError(prime.to_string() + " is not prime");
  }
  for (const auto& w : enumerate_intermediate_valuation_rings(field)) {
    if (!r_sub.subset_of(w)) continue;
    auto contraction = w.level() == 0 ? CutIdeal::zero(field.rank())
                                      : CutIdeal::prime_at(field.rank(), w.level());
    // The closed form of M_W meeting V, re-checked pointwise.
    for (const auto& v : field.window(3)) {
      if (!r_sub.contains(v)) continue;
      if (w.maximal_ideal_contains(v) != contraction.contains(v)) {
        throw InternalConsistencyError("contraction of the maximal ideal of " +
                                       w.name() + " misses " + v.to_string());
      }
    }
    if (contraction == prime) return ExistenceWitness{w, contraction};
  }
  return std::nullopt;
}

Report valuation_ideal_suite(const ValueHyperfield& field, const ValuationSubring& r_sub,
                    std::uint64_t seed, int cases) {
  Report report("valuation ideal properties, rank " +
                std::to_string(field.rank()));
  const int k = field.rank();
  Rng rng(seed);
  auto proper_cut = [&] {
    while (true) {
      auto c = random_cut(rng, k);
      if (!c.is_unit()) return c;
    }
  };
  auto outside = [&](const CutIdeal& c) -> std::optional<Value> {
    for (int tries = 0; tries < 200; ++tries) {
      auto x = random_element_of_v(rng, k, 4);
      if (!c.contains(x)) return x;
    }
    return std::nullopt;
  };

  // Square dichotomy: AB in I forces all squares of A or all of B into I.
  {
    std::string bad;
    int ran = 0;
    for (int c = 0; c < cases; ++c) {
      auto i = proper_cut();
      std::vector<Value> a;
      for (auto n = draw(rng, 1, 4); n > 0; --n) {
        a.push_back(random_element_of_v(rng, k, 4));
      }
      std::vector<Value> candidates, b;
      for (const auto& y : field.window(4)) {
        if (r_sub.contains(y) &&
            std::all_of(a.begin(), a.end(),
                        [&](const Value& x) { return i.contains(x + y); })) {
          candidates.push_back(y);
        }
      }
      if (candidates.empty()) continue;
      for (auto n = draw(rng, 1, 4); n > 0; --n) {
        b.push_back(candidates[static_cast<std::size_t>(
            draw(rng, 0, static_cast<std::int64_t>(candidates.size()) - 1))]);
      }
      ++ran;
      auto squares_in = [&](const std::vector<Value>& s) {
        return std::all_of(s.begin(), s.end(),
                           [&](const Value& x) { return i.contains(x.scaled(2)); });
      };
      if (!squares_in(a) && !squares_in(b) && bad.empty()) {
        bad = "I=" + i.to_string() + " a=" + a.front().to_string();
      }
    }
    report.add("square_dichotomy", bad.empty() && ran > 0,
               bad.empty() ? std::to_string(ran) + " samples" : bad,
               "AB in a valuation ideal forces a^2 in I for all a, or b^2 for all b");
    auto failure = valuation_subring_failure(
        field, [&](const Value& x) { return r_sub.contains(x); }, 3);
    report.add("all_ideals_valuation_gives_valuation_ring", !failure,
               failure.value_or(""),
               "a ring whose ideals are all valuation ideals is a valuation ring");
  }

  // Product avoidance and power cancellation.
  {
    std::string bad;
    int ran = 0;
    for (int c = 0; c < cases; ++c) {
      std::vector<CutIdeal> family;
      std::vector<Value> xs;
      for (auto n = draw(rng, 1, 3); n > 0; --n) {
        auto i = proper_cut();
        auto x = outside(i);
        if (!x) continue;
        family.push_back(i);
        xs.push_back(*x);
      }
      if (family.empty()) continue;
      ++ran;
      auto product = family.front();
      auto x = xs.front();
      for (std::size_t t = 1; t < family.size(); ++t) {
        product = checked_cut_product(product, family[t]);
        x = x + xs[t];
      }
      if (product.contains(x) && bad.empty()) {
        bad = "product " + product.to_string() + " contains " + x.to_string();
      }
    }
    report.add("product_avoidance", bad.empty() && ran > 0,
               bad.empty() ? std::to_string(ran) + " samples" : bad,
               "x_i outside I_i gives a product outside I_1...I_n");

    bad.clear();
    for (int c = 0; c < cases; ++c) {
      auto i = random_cut(rng, k), j = random_cut(rng, k);
      auto n = static_cast<int>(draw(rng, 1, 4));
      if (cut_power(i, n).subset_of(cut_power(j, n)) && !i.subset_of(j) &&
          bad.empty()) {
        bad = i.to_string() + " vs " + j.to_string() + " n=" + std::to_string(n);
      }
    }
    report.add("power_cancellation", bad.empty(), bad,
               "I^n in J^n forces I in J for valuation ideals");
  }

  // The intersection of the powers of I is prime.
  {
    std::string bad;
    for (int c = 0; c < cases; ++c) {
      auto i = proper_cut();
      auto meet = cut_intersection_of_powers(i);
      std::vector<CutIdeal> powers;
      for (int n = 1; n <= 2 * kDefaultWindow; ++n) {
        powers.push_back(cut_power(i, n));
        if (!is_nu_hyperideal(powers.back(), 3).is_nu_ideal && bad.empty()) {
          bad = powers.back().to_string() + " is not a valuation ideal";
        }
      }
      if (auto m = intersection_mismatch(field, powers, meet, 4); m && bad.empty()) {
        bad = "intersection of powers of " + i.to_string() + " differs at " + *m;
      }
      if (!cut_is_prime(meet) && bad.empty()) {
        bad = meet.to_string() + " is not prime";
      }
    }
    report.add("power_intersection_prime", bad.empty(), bad,
               "the intersection of all I^n is prime");
  }

  // Primary intersections: for each prime P, the P-primary cuts meet in a
  // prime ideal.
  {
    std::string bad;
    for (int level = 0; level <= k; ++level) {
      auto p = level == 0 ? CutIdeal::zero(k) : CutIdeal::prime_at(k, level);
      std::vector<CutIdeal> primary{p};
      if (level > 0) {
        for (int m = 1; m <= 2 * kDefaultWindow; ++m) {
          Vector q(static_cast<std::size_t>(level), 0);
          q.back() = m;
          primary.push_back(CutIdeal::cut(k, level, q));
        }
      }
      for (const auto& q : primary) {
        if ((!checked_cut_is_primary(q, 8) || cut_radical(q) != p) && bad.empty()) {
          bad = q.to_string() + " is not " + p.to_string() + "-primary";
        }
      }
      auto meet = level <= 1 ? CutIdeal::zero(k) : CutIdeal::prime_at(k, level - 1);
      if (auto m = intersection_mismatch(field, primary, meet, 4); m && bad.empty()) {
        bad = "primary intersection for " + p.to_string() + " differs at " + *m;
      }
      if (!cut_is_prime(meet) && bad.empty()) bad = meet.to_string() + " not prime";
    }
    report.add("primary_intersection_prime", bad.empty(), bad,
               "in a valuation ring the P-primary ideals meet in a prime");
  }

  // Directed families: valuation ideals are totally ordered, so any finite
  // family is directed; the radical of its intersection is prime.
  {
    std::string bad;
    for (int c = 0; c < cases; ++c) {
      std::vector<CutIdeal> family;
      for (auto n = draw(rng, 1, 5); n > 0; --n) family.push_back(random_cut(rng, k));
      auto meet = family.front();
      for (const auto& f : family) meet = smaller(meet, f);
      auto rad = meet.is_unit() ? meet : checked_cut_radical(meet, 8);
      if (!meet.is_unit() && !cut_is_prime(rad) && bad.empty()) {
        bad = "radical of " + join_cuts(family) + " is " + rad.to_string();
      }
    }
    report.add("directed_radical_prime", bad.empty(), bad,
               "the radical of a directed intersection of valuation ideals is prime");
  }
  return report;
}

Report primary_chain_check(const ValueHyperfield& field,
                        const ValuationSubring& r_sub) {
  const int k = field.rank();
  Report report("primary chain, rank " + std::to_string(k));
  const auto m = CutIdeal::prime_at(k, k);
  std::vector<CutIdeal> delta;
  for (int e = 1; e <= 2 * kDefaultWindow; ++e) {
    Vector q(static_cast<std::size_t>(k), 0);
    q.back() = e;
    delta.push_back(CutIdeal::cut(k, k, q));
  }

  std::string bad;
  for (const auto& q : delta) {
    if (!checked_cut_is_primary(q, 8) || cut_radical(q) != m) {
      bad = q.to_string() + " is not M-primary";
      break;
    }
    if (extend_contract(q, r_sub, r_sub) != q || !is_nu_hyperideal(q, 3).is_nu_ideal) {
      bad = q.to_string() + " is not a valuation ideal";
      break;
    }
  }
  report.add("primary_are_valuation_ideals", bad.empty(), bad,
             "every M-primary ideal is a valuation ideal");

  bad.clear();
  for (const auto& a : delta) {
    for (const auto& b : delta) {
      if (!a.subset_of(b) && !b.subset_of(a) && bad.empty()) {
        bad = a.to_string() + " and " + b.to_string() + " are incomparable";
      }
    }
  }
  report.add("primary_chain", bad.empty(), bad,
             "the M-primary ideals are totally ordered");

  auto meet = k == 1 ? CutIdeal::zero(k) : CutIdeal::prime_at(k, k - 1);
  auto mismatch = intersection_mismatch(field, delta, meet, 4);
  report.add("primary_intersection", !mismatch,
             mismatch ? "differs at " + *mismatch : meet.to_string(),
             "intersection of the chain");
  bool prime = checked_cut_is_prime(meet, 8);
  report.add("primary_intersection_is_prime", prime,
             prime ? "" : meet.to_string(), "the intersection is prime");
  return report;
}

Report extension_dichotomy_check(const ValueHyperfield& field, int radius) {
  const int k = field.rank();
  Report report("extension dichotomy, rank " + std::to_string(k));
  std::vector<CutIdeal> primes{CutIdeal::zero(k)};
  for (int i = 1; i <= k; ++i) primes.push_back(CutIdeal::prime_at(k, i));
  std::string bad;
  for (const auto& p : primes) {
    for (const auto& a : field.window(radius)) {
      auto ra = generated_subring(field, a);
      auto rinv = generated_subring(field, a.inverse());
      if (extension_is_whole_ring(p, ra) && extension_is_whole_ring(p, rinv) &&
          bad.empty()) {
        bad = "P=" + p.to_string() + " a=" + a.to_string();
      }
    }
  }
  report.add("extension_dichotomy", bad.empty(), bad,
             "P R[a] != R[a] or P R[1/a] != R[1/a]");
  return report;
}

Report valuation_battery(int rank, std::uint64_t seed, int cases) {
  ValueHyperfield field(rank);
  const auto v = ValuationSubring::minimal(rank);
  Report report("valuation battery, rank " + std::to_string(rank));
  Rng rng(seed);

  std::vector<CutIdeal> cuts{CutIdeal::zero(rank), CutIdeal::unit(rank)};
  for (int i = 1; i <= rank; ++i) cuts.push_back(CutIdeal::prime_at(rank, i));
  for (int c = 0; c < cases; ++c) cuts.push_back(random_cut(rng, rank));

  auto valuation = check_hypervaluation(field, [](const Value& x) { return x; });
  report.add("identity_is_hypervaluation", valuation.passed(),
             valuation.passed() ? "" : valuation.violations.front().detail,
             "the identity on the value hyperfield is a hypervaluation");

  std::string upset, radical_bad, closure_bad, existence_bad;
  for (const auto& i : cuts) {
    bool nu = is_nu_hyperideal(i).is_nu_ideal;
    bool identity = extend_contract(i, v, v) == i;
    if (nu != identity && upset.empty()) upset = i.to_string();
    if (nu && i.is_proper()) {
      auto r = cut_radical(i);
      if ((!is_nu_hyperideal(r).is_nu_ideal || !cut_is_prime(r)) &&
          radical_bad.empty()) {
        radical_bad = i.to_string() + " has radical " + r.to_string();
      }
    }
    // Closure three ways: valuation intersection, scaling preimages, and
    // the definition on the window.
    auto via = closure_via_valuations(field, i, v);
    for (const auto& x : field.window(3)) {
      if (!v.contains(x)) continue;
      if (integral_over_ideal(field, i, x).integral != via.contains(x) &&
          closure_bad.empty()) {
        closure_bad = i.to_string() + " at " + x.to_string();
      }
    }
    if (via != i && closure_bad.empty()) {
      closure_bad = i.to_string() + " has closure " + via.to_string();
    }
    if (cut_is_prime(i) && !existence_witness(field, v, i) && existence_bad.empty()) {
      existence_bad = i.to_string() + " not found in enumerated family";
    }
  }
  report.add("upward_closed_iff_extension_identity", upset.empty(), upset,
             "valuation ideal iff I V contracts back to I");
  report.add("radical_of_valuation_ideal_prime", radical_bad.empty(), radical_bad,
             "the radical of a valuation ideal is a prime valuation ideal");
  report.add("closure_three_way", closure_bad.empty(), closure_bad,
             "closure equals the intersection of extensions over valuation rings");
  report.add("prime_has_valuation_witness", existence_bad.empty(), existence_bad,
             "each prime is the trace of a maximal ideal of a valuation ring");

  std::string closed_bad, meet_bad;
  auto rings = enumerate_intermediate_valuation_rings(field);
  for (const auto& w : rings) {
    if (!valuation_ring_is_integrally_closed(field, w) && closed_bad.empty()) {
      closed_bad = w.name();
    }
  }
  for (const auto& x : window_with_infinity(field, 3)) {
    bool in_meet = std::all_of(rings.begin(), rings.end(),
                               [&](const auto& w) { return w.contains(x); });
    if (subring_closure_contains(field, v, x) != in_meet && meet_bad.empty()) {
      meet_bad = x.to_string();
    }
  }
  report.add("valuation_rings_integrally_closed", closed_bad.empty(), closed_bad,
             "valuation rings are integrally closed");
  report.add("subring_closure_is_intersection", meet_bad.empty(), meet_bad,
             "the closure of R is the intersection of its valuation overrings");

  report.merge(valuation_ideal_suite(field, v, seed, cases), "ideals");
  report.merge(primary_chain_check(field, v), "primary");
  report.merge(extension_dichotomy_check(field), "extension");
  return report;
}

}  // namespace value

}  // namespace hyperring
