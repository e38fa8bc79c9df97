#include "hyperring/closure.hpp"

#include <functional>
#include <set>

namespace hyperring {

namespace {

void require_width(const FiniteHyperring& ring, const ElementSet& set) {
  if (set.width() != ring.size()) {
    throw PreconditionError("set width does not match hyperring '" +
                            ring.name() + "'");
  }
}

void require_ideal(const FiniteHyperring& ring, const ElementSet& set) {
  require_width(ring, set);
  if (auto v = hyperideal_violation(ring, set)) {
    throw NotAHyperideal(ring.format(set) + " is not a hyperideal: " +
                             v->describe(ring),
                         *v);
  }
}

// Coefficient tuples with a_i drawn from allowed[i-1] such that
// 0 in r^n + a_1 r^(n-1) + ... + a_n. Depth-first over (position, partial
// fold), skipping partial folds already explored at the same position.
std::optional<std::vector<Element>> search_degree(
    const FiniteHyperring& ring, Element r, std::size_t n,
    const std::vector<ElementSet>& allowed) {
  // Distinct term values a_i r^(n-i) with one representative coefficient.
  std::vector<std::vector<std::pair<Element, Element>>> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rp = ring.pow(r, n - i - 1);
    auto seen = ring.empty_set();
    for (auto a : allowed[i]) {
      auto t = ring.mul(a, rp);
      if (!seen.contains(t)) {
        seen.insert(t);
        terms[i].emplace_back(t, a);
      }
    }
  }
  std::set<std::pair<std::size_t, std::uint64_t>> visited;
  std::vector<Element> path(n);
  std::function<bool(std::size_t, const ElementSet&)> dfs =
      [&](std::size_t i, const ElementSet& partial) {
        if (i == n) return partial.contains(ring.zero());
        if (!visited.emplace(i, partial.bits()).second) return false;
        for (auto [t, a] : terms[i]) {
          path[i] = a;
          auto next = ring.empty_set();
          for (auto s : partial) next |= ring.add(s, t);
          if (dfs(i + 1, next)) return true;
        }
        return false;
      };
  if (dfs(0, ring.singleton(ring.pow(r, n)))) return path;
  return std::nullopt;
}

IntegralityResult search(const FiniteHyperring& ring, Element r,
                         std::size_t max_degree,
                         const std::function<ElementSet(std::size_t)>& allowed) {
  if (r >= ring.size()) throw PreconditionError("element out of range");
  std::vector<ElementSet> sets;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    sets.push_back(allowed(n));
    if (auto coeffs = search_degree(ring, r, n, sets)) {
      DependenceWitness w{n, *coeffs, evaluate_dependence(ring, r, *coeffs)};
      if (!w.resulting_set.contains(ring.zero())) {
        throw InternalConsistencyError("dependence witness does not re-evaluate "
                                       "to a set containing zero");
      }
      return {true, std::move(w)};
    }
  }
  return {false, std::nullopt};
}

}  // namespace

ElementSet evaluate_dependence(const FiniteHyperring& ring, Element r,
                               const std::vector<Element>& coefficients) {
  const auto n = coefficients.size();
  if (n == 0) throw PreconditionError("a dependence needs degree at least 1");
  std::vector<Element> terms{ring.pow(r, n)};
  for (std::size_t i = 1; i <= n; ++i) {
    terms.push_back(ring.mul(coefficients[i - 1], ring.pow(r, n - i)));
  }
  return hyper_sum_fold(ring, terms);
}

IntegralityResult is_integral_over_ideal(const FiniteHyperring& ring,
                                         const ElementSet& ideal, Element r,
                                         std::optional<std::size_t> max_degree) {
  require_ideal(ring, ideal);
  std::vector<ElementSet> powers{ideal};
  auto power = [&](std::size_t i) {
    while (powers.size() < i) {
      powers.push_back(ideal_product(ring, powers.back(), ideal));
    }
    return powers[i - 1];
  };
  return search(ring, r, max_degree.value_or(ring.size() + 1), power);
}

bool is_integral_power_criterion(const FiniteHyperring& ring,
                                 const ElementSet& ideal, Element r) {
  require_ideal(ring, ideal);
  if (r >= ring.size()) throw PreconditionError("element out of range");
  auto j = ideal_sum(ring, ideal, ideal_generated_by(ring, ring.singleton(r)));
  // J^(n+1) is contained in J^n, so the chain strictly shrinks until it stops.
  std::vector<ElementSet> chain{ring.full_set(), j};
  while (chain[chain.size() - 1] != chain[chain.size() - 2]) {
    chain.push_back(ideal_product(ring, chain.back(), j));
  }
  // chain[K] = chain[K+1] now holds; test n = 1..K+1.
  for (std::size_t n = 1; n < chain.size(); ++n) {
    if (chain[n] == ideal_product(ring, ideal, chain[n - 1])) return true;
  }
  return false;
}

ClosureResult ideal_closure(const FiniteHyperring& ring, const ElementSet& ideal,
                            std::optional<std::size_t> max_degree) {
  require_ideal(ring, ideal);
  ClosureResult out{ideal, ring.empty_set(), {}, false};
  for (Element r = 0; r < ring.size(); ++r) {
    auto direct = is_integral_over_ideal(ring, ideal, r, max_degree);
    bool by_powers = is_integral_power_criterion(ring, ideal, r);
    if (direct.integral != by_powers) {
      throw InternalConsistencyError(
          "integrality of " + ring.label(r) + " over " + ring.format(ideal) +
          ": witness search says " + (direct.integral ? "yes" : "no") +
          ", power criterion says " + (by_powers ? "yes" : "no"));
    }
    if (!direct.integral) continue;
    out.closure.insert(r);
    if (!ideal.contains(r)) out.witnesses.emplace(r, *direct.witness);
  }
  out.is_closed = out.closure == ideal;
  return out;
}

IntegralityResult is_integral_over_subring(const FiniteHyperring& ring,
                                           const ElementSet& sub, Element x,
                                           std::optional<std::size_t> max_degree) {
  require_width(ring, sub);
  if (!is_subhyperring(ring, sub)) {
    throw PreconditionError(ring.format(sub) + " is not a subhyperring of '" +
                            ring.name() + "'");
  }
  return search(ring, x, max_degree.value_or(ring.size() + 1),
                [&](std::size_t) { return sub; });
}

ElementSet subring_integral_closure(const FiniteHyperring& ring,
                                    const ElementSet& sub) {
  auto out = ring.empty_set();
  for (Element x = 0; x < ring.size(); ++x) {
    if (is_integral_over_subring(ring, sub, x).integral) out.insert(x);
  }
  return out;
}

ElementSet difference_condition_set(const FiniteHyperring& ring,
                                    const ElementSet& ideal) {
  require_ideal(ring, ideal);
  auto base = ring.empty_set();
  for (auto y : ideal) base |= ring.add(y, ring.neg(y));
  auto sums = base;
  while (true) {
    auto next = sums | ring.add_sets(sums, base);
    if (next == sums) return sums;
    sums = next;
  }
}

Report closure_property_suite(const FiniteHyperring& ring) {
  ring.require_verified();
  Report report("closure properties on " + ring.name());
  const auto ideals = enumerate_hyperideals(ring);
  std::vector<ClosureResult> closures;
  for (const auto& i : ideals) closures.push_back(ideal_closure(ring, i));
  const auto nil = nilradical(ring);

  auto full_closure = subring_integral_closure(ring, ring.full_set());
  report.add("ring_closed_in_itself", full_closure.is_full(),
             full_closure.is_full() ? "" : "closure " + ring.format(full_closure),
             "the closure of R in R is R");

  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const auto& i = ideals[k];
    const auto& c = closures[k].closure;
    const auto name = ring.format(i);
    const bool proper = !i.is_full();

    if (proper && is_prime(ring, i)) {
      report.add("prime_closed:" + name, c == i,
                 c == i ? "" : "closure " + ring.format(c),
                 "prime hyperideals are integrally closed");
    }
    report.add("contained_in_closure:" + name, i.subset_of(c),
               i.subset_of(c) ? "" : "closure " + ring.format(c),
               "I is contained in its closure");
    auto rad = radical(ring, i);
    report.add("closure_in_radical:" + name, c.subset_of(rad),
               c.subset_of(rad) ? ""
                                : "closure " + ring.format(c) + " radical " +
                                      ring.format(rad),
               "the closure lies in the radical");
    report.add("nilradical_in_closure:" + name, nil.subset_of(c),
               nil.subset_of(c) ? "" : "nilradical " + ring.format(nil),
               "the nilradical lies in every closure");

    for (std::size_t m = 0; m < ideals.size(); ++m) {
      const auto& j = ideals[m];
      if (k != m && i.subset_of(j)) {
        bool ok = c.subset_of(closures[m].closure);
        report.add("monotone:" + name + "<=" + ring.format(j), ok,
                   ok ? "" : "closures " + ring.format(c) + " and " +
                                 ring.format(closures[m].closure),
                   "closure is monotone");
      }
      if (k < m && closures[k].is_closed && closures[m].is_closed) {
        auto meet = i & j;
        auto mc = ideal_closure(ring, meet).closure;
        report.add("intersection_closed:" + name + "&" + ring.format(j),
                   mc == meet, mc == meet ? "" : "closure " + ring.format(mc),
                   "intersections of closed ideals are closed");
      }
    }

    auto diffs = difference_condition_set(ring, i);
    if (diffs == ring.singleton(ring.zero())) {
      bool ok = is_hyperideal(ring, c);
      report.add("closure_is_ideal:" + name, ok,
                 ok ? "" : ring.format(c) + " is not a hyperideal",
                 "difference condition makes the closure a hyperideal");
    }
  }

  // Closed ideals of the whole family intersect to a closed ideal.
  auto meet = ring.full_set();
  for (const auto& c : closures) {
    if (c.is_closed) meet &= c.ideal;
  }
  auto mc = ideal_closure(ring, meet).closure;
  report.add("family_intersection_closed", mc == meet,
             mc == meet ? "" : ring.format(meet) + " has closure " + ring.format(mc),
             "intersections of closed ideals are closed");

  // Homomorphisms: projections onto quotients by proper normal ideals.
  for (const auto& n : ideals) {
    if (n.is_full() || !is_normal(ring, n)) continue;
    auto q = quotient_by_normal_ideal(ring, n);
    const auto& target = q.ring;
    const auto& map = q.projection.map;
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      auto image_of = [&](const ElementSet& s) {
        auto out = target.empty_set();
        for (auto x : s) out.insert(map[x]);
        return out;
      };
      auto target_ideal = ideal_generated_by(target, image_of(ideals[k]));
      auto target_closure = ideal_closure(target, target_ideal).closure;
      auto image = image_of(closures[k].closure);
      bool ok = image.subset_of(target_closure);
      report.add("homomorphism:" + ring.format(n) + ":" + ring.format(ideals[k]),
                 ok,
                 ok ? "" : "image " + target.format(image) + " vs " +
                               target.format(target_closure),
                 "images of closures lie in the closure of the image ideal");
    }
  }
  return report;
}

namespace value {

namespace {
ValueDependence single_coefficient(const ValueHyperfield& field,
                                   std::size_t degree, const Value& top) {
  ValueDependence w{degree, std::vector<Value>(degree, field.zero())};
  w.coefficients.back() = top;
  return w;
}

bool reevaluates(const ValueHyperfield& field, const Value& x,
                 const ValueDependence& w) {
  std::vector<Value> terms{x.scaled(static_cast<std::int64_t>(w.degree))};
  for (std::size_t i = 1; i <= w.degree; ++i) {
    terms.push_back(field.mul(
        w.coefficients[i - 1], x.scaled(static_cast<std::int64_t>(w.degree - i))));
  }
  return sum_contains_zero(terms) && field.fold(terms).contains(field.zero());
}
}  // namespace

ValueIntegrality integral_over_subring(const ValueHyperfield& field,
                                       const ValuationSubring& w,
                                       const Value& x, std::size_t max_degree) {
  if (w.rank() != field.rank() || x.rank() != field.rank()) {
    throw PreconditionError("subring, element and field ranks differ");
  }
  if (x.is_infinite()) return {true, single_coefficient(field, 1, x)};
  // The leading term n*x is matched by a_i x^(n-i) exactly when a_i = i*x;
  // other coefficients only add larger values or infinity.
  for (std::size_t i = 1; i <= max_degree; ++i) {
    auto a = x.scaled(static_cast<std::int64_t>(i));
    if (!w.contains(a)) continue;
    auto witness = single_coefficient(field, i, a);
    if (!reevaluates(field, x, witness)) {
      throw InternalConsistencyError("value dependence for " + x.to_string() +
                                     " does not contain infinity");
    }
    return {true, std::move(witness)};
  }
  return {false, std::nullopt};
}

bool subring_closure_contains(const ValueHyperfield& field,
                              const ValuationSubring& w, const Value& x) {
  return integral_over_subring(field, w, x).integral;
}

ValueIntegrality integral_over_ideal(const ValueHyperfield& field,
                                     const CutIdeal& ideal, const Value& r,
                                     std::size_t max_degree) {
  if (!ValuationSubring::minimal(field.rank()).contains(r)) {
    throw PreconditionError(r.to_string() + " is not an element of V");
  }
  for (std::size_t i = 1; i <= max_degree; ++i) {
    auto a = r.scaled(static_cast<std::int64_t>(i));
    if (!cut_power(ideal, static_cast<int>(i)).contains(a)) continue;
    auto witness = single_coefficient(field, i, a);
    if (!reevaluates(field, r, witness)) {
      throw InternalConsistencyError("value dependence for " + r.to_string() +
                                     " does not contain infinity");
    }
    return {true, std::move(witness)};
  }
  return {false, std::nullopt};
}

CutIdeal ideal_closure(const CutIdeal& ideal, std::size_t max_degree) {
  auto out = ideal;
  for (std::size_t i = 1; i <= max_degree; ++i) {
    int n = static_cast<int>(i);
    out = cut_sum(out, cut_scaling_preimage(cut_power(ideal, n), n));
  }
  return out;
}

}  // namespace value

}  // namespace hyperring
