#include "hyperring/generator.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace hyperring {

namespace {

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

struct BudgetExhausted {};

class AdditionSearch {
 public:
  AdditionSearch(std::size_t n, std::vector<Element> neg, Rng& rng,
                 std::size_t budget)
      : n_(n), neg_(std::move(neg)), rng_(rng), budget_(budget),
        t_(n * n * n, -1) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element w = 0; w < n; ++w) {
          if (x == 0 || y == 0 || w == 0) {
            // Exactly one zero: the other two are inverses. Two or three
            // zeros: true only for (0,0,0).
            int zeros = (x == 0) + (y == 0) + (w == 0);
            bool v = zeros == 3 ||
                     (zeros == 1 && (x == 0 ? y == neg_[w]
                                            : y == 0 ? x == neg_[w] : x == neg_[y]));
            at(x, y, w) = v;
          }
        }
      }
    }
    std::map<std::array<Element, 3>, bool> seen;
    for (Element x = 1; x < n; ++x) {
      for (Element y = 1; y < n; ++y) {
        for (Element w = 1; w < n; ++w) {
          auto orbit = orbit_of(x, y, w);
          if (seen.emplace(orbit.front(), true).second) orbits_.push_back(orbit);
        }
      }
    }
    shuffle(orbits_, rng_);
  }

  // Cells of the addition table, or nullopt.
  std::optional<std::vector<std::vector<FiniteHyperring::AddCell>>> run() {
    try {
      if (!dfs(0)) return std::nullopt;
    } catch (const BudgetExhausted&) {
      return std::nullopt;
    }
    std::vector<std::vector<FiniteHyperring::AddCell>> add(
        n_, std::vector<FiniteHyperring::AddCell>(n_));
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        for (Element z = 0; z < n_; ++z) {
          if (at(x, y, neg_[z]) == 1) add[x][y].push_back(z);
        }
      }
    }
    return add;
  }

 private:
  std::int8_t& at(Element x, Element y, Element w) {
    return t_[(x * n_ + y) * n_ + w];
  }

  // All images under permutations and negation, smallest first.
  std::vector<std::array<Element, 3>> orbit_of(Element x, Element y, Element w) {
    std::vector<std::array<Element, 3>> out;
    for (bool negate : {false, true}) {
      std::array<Element, 3> t{x, y, w};
      if (negate) t = {neg_[x], neg_[y], neg_[w]};
      std::sort(t.begin(), t.end());
      do {
        out.push_back(t);
      } while (std::next_permutation(t.begin(), t.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool decided(Element x, Element y) {
    for (Element w = 0; w < n_; ++w) {
      if (at(x, y, w) < 0) return false;
    }
    return true;
  }

  ElementSet cell(Element x, Element y) {
    ElementSet out(n_);
    for (Element z = 0; z < n_; ++z) {
      if (at(x, y, neg_[z]) == 1) out.insert(z);
    }
    return out;
  }

  bool consistent() {
    for (Element x = 1; x < n_; ++x) {
      for (Element y = 1; y < n_; ++y) {
        if (decided(x, y) && cell(x, y).empty()) return false;
      }
    }
    for (Element x = 1; x < n_; ++x) {
      for (Element y = 1; y < n_; ++y) {
        if (!decided(x, y)) continue;
        for (Element z = 1; z < n_; ++z) {
          if (!decided(y, z)) continue;
          auto left = ElementSet(n_), right = ElementSet(n_);
          bool ready = true;
          for (auto w : cell(x, y)) {
            if (!(ready = decided(w, z))) break;
            left |= cell(w, z);
          }
          if (!ready) continue;
          for (auto w : cell(y, z)) {
            if (!(ready = decided(x, w))) break;
            right |= cell(x, w);
          }
          if (ready && left != right) return false;
        }
      }
    }
    return true;
  }

  bool dfs(std::size_t k) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (k == orbits_.size()) return true;
    std::array<std::int8_t, 2> order{0, 1};
    if (draw(rng_, 0, 1)) std::swap(order[0], order[1]);
    for (auto v : order) {
      for (const auto& t : orbits_[k]) at(t[0], t[1], t[2]) = v;
      if (consistent() && dfs(k + 1)) return true;
    }
    for (const auto& t : orbits_[k]) at(t[0], t[1], t[2]) = -1;
    return false;
  }

  std::size_t n_;
  std::vector<Element> neg_;
  Rng& rng_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::int8_t> t_;
  std::vector<std::vector<std::array<Element, 3>>> orbits_;
};

class MultiplicationSearch {
 public:
  MultiplicationSearch(const std::vector<std::vector<FiniteHyperring::AddCell>>& add,
                       Rng& rng, std::size_t budget)
      : n_(add.size()), rng_(rng), budget_(budget),
        m_(n_, std::vector<long>(n_, -1)), add_(n_, std::vector<ElementSet>(n_, ElementSet(n_))) {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        for (auto z : add[x][y]) add_[x][y].insert(z);
      }
      m_[0][x] = m_[x][0] = 0;
      m_[1][x] = m_[x][1] = static_cast<long>(x);
    }
    for (Element x = 2; x < n_; ++x) {
      for (Element y = x; y < n_; ++y) pairs_.emplace_back(x, y);
    }
    shuffle(pairs_, rng_);
  }

  std::optional<std::vector<std::vector<Element>>> run() {
    try {
      if (!dfs(0)) return std::nullopt;
    } catch (const BudgetExhausted&) {
      return std::nullopt;
    }
    std::vector<std::vector<Element>> out(n_, std::vector<Element>(n_));
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) out[x][y] = static_cast<Element>(m_[x][y]);
    }
    return out;
  }

 private:
  bool consistent() {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (m_[x][y] < 0) continue;
        for (Element z = 0; z < n_; ++z) {
          // (xy)z = x(yz)
          if (m_[y][z] >= 0) {
            auto l = m_[m_[x][y]][z], r = m_[x][m_[y][z]];
            if (l >= 0 && r >= 0 && l != r) return false;
          }
          // x(y+z) = xy + xz
          if (m_[x][z] < 0) continue;
          ElementSet left(n_);
          bool ready = true;
          for (auto w : add_[y][z]) {
            if (m_[x][w] < 0) {
              ready = false;
              break;
            }
            left.insert(static_cast<Element>(m_[x][w]));
          }
          if (ready && left != add_[m_[x][y]][m_[x][z]]) return false;
        }
      }
    }
    return true;
  }

  bool dfs(std::size_t k) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (k == pairs_.size()) return true;
    auto [x, y] = pairs_[k];
    std::vector<long> values;
    for (long v = 0; v < static_cast<long>(n_); ++v) values.push_back(v);
    shuffle(values, rng_);
    for (auto v : values) {
      m_[x][y] = m_[y][x] = v;
      if (consistent() && dfs(k + 1)) return true;
    }
    m_[x][y] = m_[y][x] = -1;
    return false;
  }

  std::size_t n_;
  Rng& rng_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<long>> m_;
  std::vector<std::vector<ElementSet>> add_;
  std::vector<std::pair<Element, Element>> pairs_;
};

std::vector<Element> random_involution(std::size_t n, Rng& rng) {
  std::vector<Element> neg(n), rest;
  for (Element x = 0; x < n; ++x) neg[x] = x;
  for (Element x = 1; x < n; ++x) rest.push_back(x);
  shuffle(rest, rng);
  for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
    if (draw(rng, 0, 1)) {
      neg[rest[i]] = rest[i + 1];
      neg[rest[i + 1]] = rest[i];
    }
  }
  return neg;
}

}  // namespace

std::optional<FiniteHyperring> random_hyperring(Rng& rng,
                                                const GeneratorOptions& opts,
                                                const std::string& name) {
  if (opts.min_order < 2 || opts.max_order > 8 || opts.min_order > opts.max_order) {
    throw PreconditionError("generator orders must satisfy 2 <= min <= max <= 8");
  }
  // The order is fixed before retrying; redrawing it per attempt would
  // favour the small orders, which succeed far more often.
  auto n = static_cast<std::size_t>(
      draw(rng, static_cast<std::int64_t>(opts.min_order),
           static_cast<std::int64_t>(opts.max_order)));
  for (int attempt = 0; attempt < opts.attempts; ++attempt) {
    auto neg = random_involution(n, rng);
    auto add = AdditionSearch(n, neg, rng, opts.node_budget).run();
    if (!add) continue;
    auto mul = MultiplicationSearch(*add, rng, opts.node_budget).run();
    if (!mul) continue;
    std::vector<std::string> labels{"0", "1"};
    for (std::size_t i = 2; i < n; ++i) labels.push_back("e" + std::to_string(i));
    FiniteHyperring ring(name, labels, 0, 1, *add, *mul);
    auto report = verify_axioms(ring);
    if (!report.passed()) {
      throw InternalConsistencyError("generated tables fail axiom " +
                                     report.violations.front().axiom);
    }
    return ring;
  }
  return std::nullopt;
}

GeneratedBatch random_hyperrings(std::uint64_t seed, std::size_t count,
                                 const GeneratorOptions& opts) {
  GeneratedBatch batch;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    auto ring = random_hyperring(
        rng, opts, "random_" + std::to_string(seed) + "_" + std::to_string(i));
    if (!ring) {
      ++batch.timeouts;
      continue;
    }
    batch.rings.push_back(std::move(*ring));
  }
  return batch;
}

}  // namespace hyperring
