#include "hyperring/kernel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hyperring {

namespace {

// Collects at most one witness per axiom, counting the rest.
class ViolationLog {
 public:
  explicit ViolationLog(const FiniteHyperring& ring) : ring_(ring) {}

  void record(const std::string& axiom, std::vector<Element> witness,
              const std::string& detail) {
    auto it = std::find(order_.begin(), order_.end(), axiom);
    if (it != order_.end()) {
      ++extra_[static_cast<std::size_t>(it - order_.begin())];
      return;
    }
    order_.push_back(axiom);
    extra_.push_back(0);
    AxiomViolation v;
    v.axiom = axiom;
    v.witness = std::move(witness);
    v.detail = detail;
    found_.push_back(std::move(v));
  }

  std::string tuple(std::initializer_list<Element> xs) const {
    std::vector<Element> v(xs);
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += ring_.label(v[i]);
    }
    return out + ")";
  }

  bool has(const std::string& axiom) const {
    return std::find(order_.begin(), order_.end(), axiom) != order_.end();
  }

  VerificationReport finish() {
    for (std::size_t i = 0; i < found_.size(); ++i) {
      if (extra_[i] > 0) {
        found_[i].detail += " (+" + std::to_string(extra_[i]) + " more)";
      }
    }
    return VerificationReport{std::move(found_)};
  }

 private:
  const FiniteHyperring& ring_;
  std::vector<std::string> order_;
  std::vector<std::size_t> extra_;
  std::vector<AxiomViolation> found_;
};

}  // namespace

bool VerificationReport::violates(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

FiniteHyperring::FiniteHyperring(std::string name,
                                 std::vector<std::string> labels, Element zero,
                                 Element one,
                                 const std::vector<std::vector<AddCell>>& add,
                                 std::vector<std::vector<Element>> mul)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      zero_(zero),
      one_(one),
      mul_(std::move(mul)) {
  auto n = labels_.size();
  if (n == 0) throw StructuralError("empty carrier");
  if (n > kMaxCarrier) {
    throw StructuralError("carrier of " + std::to_string(n) +
                          " elements exceeds the 64-element cap");
  }
  std::set<std::string> seen;
  for (auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw StructuralError("duplicate element label '" + l + "'");
    }
  }
  if (zero_ >= n) throw StructuralError("zero index out of range");
  if (one_ >= n) throw StructuralError("one index out of range");
  if (add.size() != n) {
    throw StructuralError("addition table has " + std::to_string(add.size()) +
                          " rows, expected " + std::to_string(n));
  }
  if (mul_.size() != n) {
    throw StructuralError("multiplication table has " +
                          std::to_string(mul_.size()) + " rows, expected " +
                          std::to_string(n));
  }
  add_.assign(n, std::vector<ElementSet>(n, ElementSet(n)));
  for (Element x = 0; x < n; ++x) {
    if (add[x].size() != n) {
      throw StructuralError("addition row " + labels_[x] + " has " +
                            std::to_string(add[x].size()) + " cells");
    }
    if (mul_[x].size() != n) {
      throw StructuralError("multiplication row " + labels_[x] + " has " +
                            std::to_string(mul_[x].size()) + " cells");
    }
    for (Element y = 0; y < n; ++y) {
      for (auto z : add[x][y]) {
        if (z >= n) {
          throw StructuralError("addition cell (" + labels_[x] + "," +
                                labels_[y] + ") names element index " +
                                std::to_string(z));
        }
        add_[x][y].insert(z);
      }
      if (mul_[x][y] >= n) {
        throw StructuralError("multiplication cell (" + labels_[x] + "," +
                              labels_[y] + ") names element index " +
                              std::to_string(mul_[x][y]));
      }
    }
  }
}

std::optional<Element> FiniteHyperring::find(const std::string& label) const {
  for (Element x = 0; x < labels_.size(); ++x) {
    if (labels_[x] == label) return x;
  }
  return std::nullopt;
}

Element FiniteHyperring::pow(Element x, std::size_t n) const {
  Element acc = one_;
  for (std::size_t i = 0; i < n; ++i) acc = mul_[acc][x];
  return acc;
}

Element FiniteHyperring::neg(Element x) const {
  if (neg_.empty()) {
    throw PreconditionError("negation of '" + name_ +
                            "' is undefined until inverses are verified");
  }
  return neg_.at(x);
}

ElementSet FiniteHyperring::mul_set(Element x, const ElementSet& set) const {
  ElementSet out(size());
  for (auto s : set) out.insert(mul_[x][s]);
  return out;
}

ElementSet FiniteHyperring::add_sets(const ElementSet& a,
                                     const ElementSet& b) const {
  ElementSet out(size());
  for (auto x : a) {
    for (auto y : b) out |= add_[x][y];
  }
  return out;
}

ElementSet FiniteHyperring::set_of(
    const std::vector<std::string>& labels) const {
  ElementSet out(size());
  for (auto& l : labels) {
    auto x = find(l);
    if (!x) throw StructuralError("unknown element label '" + l + "'");
    out.insert(*x);
  }
  return out;
}

std::string FiniteHyperring::format(const ElementSet& set) const {
  std::string out = "{";
  bool first = true;
  for (auto x : set) {
    if (!first) out += ",";
    out += labels_[x];
    first = false;
  }
  return out + "}";
}

std::string FiniteHyperring::format(std::span<const Element> elements) const {
  std::string out = "[";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += labels_.at(elements[i]);
  }
  return out + "]";
}

void FiniteHyperring::require_verified() const {
  if (status_ != Verification::passed) {
    throw PreconditionError("hyperring '" + name_ +
                            "' has not passed axiom verification");
  }
}

bool FiniteHyperring::same_tables(const FiniteHyperring& other) const {
  return labels_ == other.labels_ && zero_ == other.zero_ &&
         one_ == other.one_ && add_ == other.add_ && mul_ == other.mul_;
}

VerificationReport verify_axioms(FiniteHyperring& ring) {
  const auto n = ring.size();
  const auto zero = ring.zero();
  const auto one = ring.one();
  ViolationLog log(ring);
  ring.neg_.clear();

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (ring.add(x, y).empty()) {
        log.record("add_nonempty", {x, y},
                   "x+y is empty at " + log.tuple({x, y}));
      }
      if (ring.add(x, y) != ring.add(y, x)) {
        log.record("add_commutative", {x, y},
                   "x+y != y+x at " + log.tuple({x, y}));
      }
    }
    if (ring.add(zero, x) != ring.singleton(x)) {
      log.record("zero_identity", {x},
                 "0+x != {x} at x=" + ring.label(x) + ": 0+x = " +
                     ring.format(ring.add(zero, x)));
    }
  }

  std::vector<Element> neg(n, n);
  bool inverses_ok = true;
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> candidates;
    for (Element y = 0; y < n; ++y) {
      if (ring.add(x, y).contains(zero)) candidates.push_back(y);
    }
    if (candidates.size() != 1) {
      inverses_ok = false;
      log.record("unique_inverse", {x},
                 "x=" + ring.label(x) + " has " +
                     std::to_string(candidates.size()) +
                     " elements x' with 0 in x+x'");
    } else {
      neg[x] = candidates.front();
    }
  }

  if (inverses_ok) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (auto z : ring.add(x, y)) {
          if (!ring.add(neg[x], z).contains(y)) {
            log.record("reversibility", {x, y, z},
                       "z in x+y but y not in -x+z at (x,y,z)=" +
                           log.tuple({x, y, z}));
          } else if (!ring.add(z, neg[y]).contains(x)) {
            log.record("reversibility", {x, y, z},
                       "z in x+y but x not in z-y at (x,y,z)=" +
                           log.tuple({x, y, z}));
          }
        }
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        ElementSet left(n), right(n);
        for (auto w : ring.add(x, y)) left |= ring.add(w, z);
        for (auto w : ring.add(y, z)) right |= ring.add(x, w);
        if (left != right) {
          log.record("add_associative", {x, y, z},
                     "(x+y)+z = " + ring.format(left) + " but x+(y+z) = " +
                         ring.format(right) + " at " + log.tuple({x, y, z}));
        }
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    if (ring.mul(one, x) != x || ring.mul(x, one) != x) {
      log.record("mul_unit", {x}, "1*x != x at x=" + ring.label(x));
    }
    if (ring.mul(zero, x) != zero || ring.mul(x, zero) != zero) {
      log.record("mul_zero_absorbing", {x},
                 "0*x != 0 at x=" + ring.label(x));
    }
    for (Element y = 0; y < n; ++y) {
      if (ring.mul(x, y) != ring.mul(y, x)) {
        log.record("mul_commutative", {x, y},
                   "xy != yx at " + log.tuple({x, y}));
      }
      for (Element z = 0; z < n; ++z) {
        if (ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z))) {
          log.record("mul_associative", {x, y, z},
                     "(xy)z != x(yz) at " + log.tuple({x, y, z}));
        }
        auto left = ring.mul_set(x, ring.add(y, z));
        const auto& right = ring.add(ring.mul(x, y), ring.mul(x, z));
        if (left != right) {
          log.record("distributivity", {x, y, z},
                     "x(y+z) = " + ring.format(left) + " but xy+xz = " +
                         ring.format(right) + " at " + log.tuple({x, y, z}));
        }
      }
    }
  }

  auto report = log.finish();
  if (inverses_ok) ring.neg_ = std::move(neg);
  ring.status_ = report.passed() ? Verification::passed : Verification::failed;
  return report;
}

Classification classify(const FiniteHyperring& ring) {
  ring.require_verified();
  const auto n = ring.size();
  const auto zero = ring.zero();
  Classification c;
  if (ring.one() == zero) return c;

  bool domain = true;
  bool field = true;
  for (Element x = 0; x < n; ++x) {
    if (x == zero) continue;
    bool invertible = false;
    for (Element y = 0; y < n; ++y) {
      if (y == zero) continue;
      if (ring.mul(x, y) == zero) domain = false;
      if (ring.mul(x, y) == ring.one()) invertible = true;
    }
    if (!invertible) field = false;
  }
  c.is_hyperdomain = domain;
  c.is_hyperfield = domain && field;
  return c;
}

ElementSet hyper_sum_fold(const FiniteHyperring& ring,
                          std::span<const Element> terms) {
  ring.require_verified();
  if (terms.empty()) {
    throw PreconditionError("hyper_sum_fold needs at least one term");
  }
  auto acc = ring.singleton(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) {
    ElementSet next(ring.size());
    for (auto s : acc) next |= ring.add(s, terms[i]);
    acc = next;
  }
  return acc;
}

VerificationReport check_homomorphism(const HomomorphismTable& h) {
  const auto& src = h.source;
  const auto& dst = h.target;
  if (h.map.size() != src.size()) {
    throw StructuralError("homomorphism table has " +
                          std::to_string(h.map.size()) +
                          " images for a source of " +
                          std::to_string(src.size()) + " elements");
  }
  for (auto y : h.map) {
    if (y >= dst.size()) {
      throw StructuralError("homomorphism image index " + std::to_string(y) +
                            " outside target carrier");
    }
  }
  src.require_verified();
  dst.require_verified();

  ViolationLog log(src);
  const auto& f = h.map;
  for (Element a = 0; a < src.size(); ++a) {
    for (Element b = 0; b < src.size(); ++b) {
      if (f[src.mul(a, b)] != dst.mul(f[a], f[b])) {
        log.record("multiplicative", {a, b},
                   "f(ab) = " + dst.label(f[src.mul(a, b)]) +
                       " but f(a)f(b) = " + dst.label(dst.mul(f[a], f[b])) +
                       " at " + log.tuple({a, b}));
      }
      const auto& cell = dst.add(f[a], f[b]);
      for (auto z : src.add(a, b)) {
        if (!cell.contains(f[z])) {
          log.record("additive", {a, b, z},
                     "f(z) = " + dst.label(f[z]) + " not in f(a)+f(b) = " +
                         dst.format(cell) + " for z in a+b at (a,b,z)=" +
                         log.tuple({a, b, z}));
        }
      }
    }
  }
  return log.finish();
}

bool is_subhyperring(const FiniteHyperring& ring, const ElementSet& subset) {
  ring.require_verified();
  if (subset.width() != ring.size()) {
    throw PreconditionError("subset width does not match carrier");
  }
  if (!subset.contains(ring.zero()) || !subset.contains(ring.one())) {
    return false;
  }
  for (auto x : subset) {
    if (!subset.contains(ring.neg(x))) return false;
    for (auto y : subset) {
      if (!subset.contains(ring.mul(x, y))) return false;
      if (!ring.add(x, y).subset_of(subset)) return false;
    }
  }
  return true;
}

}  // namespace hyperring
