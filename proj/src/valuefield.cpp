#include "hyperring/valuefield.hpp"

#include <algorithm>
#include <sstream>

namespace hyperring::value {

namespace {

void require_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw PreconditionError("value group rank must be in 1..4, got " +
                            std::to_string(rank));
  }
}

bool is_zero_vector(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

// Index of the first nonzero coordinate, or size() when all are zero.
std::size_t first_nonzero(std::span<const std::int64_t> v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  return i;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t n) {
  auto q = a / n;
  if (q * n < a) ++q;
  return q;
}

ValueSet scale_set(const Value& c, const ValueSet& s) {
  if (c.is_infinite()) return ValueSet::single(c);
  if (s.is_singleton()) return ValueSet::single(c + s.anchor());
  return ValueSet::up_from(c + s.anchor());
}

std::string join(std::span<const std::int64_t> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::strong_ordering lex_compare(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b) {
  if (a.size() != b.size()) {
    throw PreconditionError("lexicographic comparison of vectors of lengths " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

OrderedGroup::OrderedGroup(int k) : rank(k) { require_rank(k); }

Vector OrderedGroup::add(const Vector& a, const Vector& b) const {
  Vector out(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) + b.at(i);
  return out;
}

// ---- Value -----------------------------------------------------------------

Value Value::infinity(int rank) {
  require_rank(rank);
  return Value(rank, true, {});
}

Value Value::unit(int rank) {
  require_rank(rank);
  return Value(rank, false, Vector(static_cast<std::size_t>(rank), 0));
}

Value::Value(Vector coords)
    : rank_(static_cast<int>(coords.size())),
      infinite_(false),
      coords_(std::move(coords)) {
  require_rank(rank_);
}

const Vector& Value::coords() const {
  if (infinite_) throw PreconditionError("infinity has no coordinates");
  return coords_;
}

void Value::require_same_rank(const Value& other) const {
  if (rank_ != other.rank_) {
    throw PreconditionError("values of different ranks combined");
  }
}

Value Value::operator+(const Value& other) const {
  require_same_rank(other);
  if (infinite_ || other.infinite_) return infinity(rank_);
  Vector out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coords_[i];
  return Value(std::move(out));
}

Value Value::scaled(std::int64_t n) const {
  if (n < 0) throw PreconditionError("negative power of a value");
  if (n == 0) return unit(rank_);
  if (infinite_) return *this;
  Vector out(coords_);
  for (auto& x : out) x *= n;
  return Value(std::move(out));
}

Value Value::inverse() const {
  if (infinite_) throw PreconditionError("infinity has no inverse");
  Vector out(coords_);
  for (auto& x : out) x = -x;
  return Value(std::move(out));
}

Vector Value::prefix(int j) const {
  const auto& c = coords();
  if (j < 0 || j > rank_) throw PreconditionError("prefix length out of range");
  return Vector(c.begin(), c.begin() + j);
}

std::strong_ordering Value::operator<=>(const Value& other) const {
  require_same_rank(other);
  if (infinite_ || other.infinite_) {
    return static_cast<int>(infinite_) <=> static_cast<int>(other.infinite_);
  }
  return lex_compare(coords_, other.coords_);
}

bool Value::operator==(const Value& other) const {
  return (*this <=> other) == 0;
}

std::string Value::to_string() const {
  if (infinite_) return "inf";
  return "(" + join(coords_) + ")";
}

// ---- ValueSet --------------------------------------------------------------

ValueSet ValueSet::single(Value v) { return ValueSet(std::move(v), true); }

ValueSet ValueSet::up_from(Value m) {
  bool inf = m.is_infinite();
  return ValueSet(std::move(m), inf);
}

bool ValueSet::contains(const Value& v) const {
  if (singleton_) return v == anchor_;
  return v >= anchor_;
}

std::string ValueSet::to_string() const {
  if (singleton_) return "{" + anchor_.to_string() + "}";
  return "{z >= " + anchor_.to_string() + "} + {inf}";
}

// ---- ValueHyperfield -------------------------------------------------------

ValueHyperfield::ValueHyperfield(int rank) : group_(rank) {}

ValueSet ValueHyperfield::add(const Value& a, const Value& b) const {
  if (a == b) return ValueSet::up_from(a);
  return ValueSet::single(std::min(a, b));
}

ValueSet ValueHyperfield::add(const ValueSet& acc, const Value& t) const {
  if (acc.is_singleton()) return add(acc.anchor(), t);
  if (t < acc.anchor()) return ValueSet::single(t);
  return acc;
}

ValueSet ValueHyperfield::fold(std::span<const Value> terms) const {
  if (terms.empty()) throw PreconditionError("empty hyper-sum");
  auto acc = ValueSet::single(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) acc = add(acc, terms[i]);
  return acc;
}

std::vector<Value> ValueHyperfield::window(int radius) const {
  if (radius < 0) throw PreconditionError("negative window radius");
  std::vector<Value> out;
  Vector v(static_cast<std::size_t>(rank()), -radius);
  while (true) {
    out.emplace_back(v);
    int i = rank() - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == radius) {
      v[static_cast<std::size_t>(i)] = -radius;
      --i;
    }
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

VerificationReport ValueHyperfield::verify_on_window(int radius) const {
  VerificationReport report;
  auto fail = [&](const std::string& axiom, const std::string& detail) {
    if (!report.violates(axiom)) report.violations.push_back({axiom, {}, detail});
  };
  auto points = window(radius);
  points.push_back(zero());

  for (const auto& x : points) {
    if (add(zero(), x) != ValueSet::single(x)) {
      fail("zero_identity", "0+x != {x} at x=" + x.to_string());
    }
    int inverses = 0;
    for (const auto& y : points) {
      if (add(x, y).contains(zero())) {
        ++inverses;
        if (!(y == neg(x))) {
          fail("unique_inverse", "0 in x+y for y != -x at x=" + x.to_string() +
                                     ", y=" + y.to_string());
        }
      }
    }
    if (inverses != 1) {
      fail("unique_inverse", "x=" + x.to_string() + " has " +
                                 std::to_string(inverses) + " inverses");
    }
    if (mul(one(), x) != x) fail("mul_unit", "1*x != x at " + x.to_string());
    if (mul(zero(), x) != zero()) {
      fail("mul_zero_absorbing", "0*x != 0 at " + x.to_string());
    }
  }

  for (const auto& x : points) {
    for (const auto& y : points) {
      auto xy = add(x, y);
      if (xy != add(y, x)) {
        fail("add_commutative", x.to_string() + "," + y.to_string());
      }
      if (mul(x, y) != mul(y, x)) {
        fail("mul_commutative", x.to_string() + "," + y.to_string());
      }
      for (const auto& z : points) {
        if (!xy.contains(z)) continue;
        if (!add(neg(x), z).contains(y) || !add(z, neg(y)).contains(x)) {
          fail("reversibility", "z=" + z.to_string() + " in " + x.to_string() +
                                    "+" + y.to_string());
        }
      }
      for (const auto& z : points) {
        if (add(xy, z) != add(add(y, z), x)) {
          fail("add_associative", x.to_string() + "," + y.to_string() + "," +
                                      z.to_string());
        }
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          fail("mul_associative", x.to_string() + "," + y.to_string() + "," +
                                      z.to_string());
        }
        if (scale_set(z, xy) != add(mul(z, x), mul(z, y))) {
          fail("distributivity", z.to_string() + "*(" + x.to_string() + "+" +
                                     y.to_string() + ")");
        }
      }
    }
  }
  return report;
}

bool sum_contains_zero(std::span<const Value> terms) {
  const Value* min = nullptr;
  int count = 0;
  for (const auto& t : terms) {
    if (t.is_infinite()) continue;
    if (!min || t < *min) {
      min = &t;
      count = 1;
    } else if (t == *min) {
      ++count;
    }
  }
  return min == nullptr || count >= 2;
}

// ---- ValuationSubring ------------------------------------------------------

ValuationSubring::ValuationSubring(int rank, int level)
    : rank_(rank), level_(level) {
  require_rank(rank);
  if (level < 0 || level > rank) {
    throw PreconditionError("valuation subring level must be in 0.." +
                            std::to_string(rank));
  }
}

ValuationSubring ValuationSubring::parse(const std::string& text, int rank) {
  if (text == "V") return minimal(rank);
  if (text == "T") return whole_field(rank);
  if (text.size() >= 2 && text[0] == 'V') {
    try {
      std::size_t used = 0;
      int level = std::stoi(text.substr(1), &used);
      if (used == text.size() - 1) return ValuationSubring(rank, level);
    } catch (const std::logic_error&) {
    }
  }
  throw StructuralError("unknown subring '" + text + "' (expected V, V<j>, T)");
}

bool ValuationSubring::contains(const Value& v) const {
  if (v.is_infinite() || level_ == 0) return true;
  auto p = v.prefix(level_);
  return is_zero_vector(p) || p[first_nonzero(p)] > 0;
}

bool ValuationSubring::maximal_ideal_contains(const Value& v) const {
  if (v.is_infinite()) return true;
  if (level_ == 0) return false;
  auto p = v.prefix(level_);
  return !is_zero_vector(p) && p[first_nonzero(p)] > 0;
}

bool ValuationSubring::subset_of(const ValuationSubring& other) const {
  return rank_ == other.rank_ && other.level_ <= level_;
}

std::string ValuationSubring::name() const {
  if (level_ == rank_) return "V";
  if (level_ == 0) return "T";
  return "V" + std::to_string(level_);
}

// ---- CutIdeal --------------------------------------------------------------

CutIdeal CutIdeal::zero(int rank) {
  require_rank(rank);
  return CutIdeal(rank, Kind::zero, 0, {});
}

CutIdeal CutIdeal::unit(int rank) {
  require_rank(rank);
  return CutIdeal(rank, Kind::cut, rank, Vector(static_cast<std::size_t>(rank), 0));
}

CutIdeal CutIdeal::cut(int rank, int level, Vector prefix) {
  require_rank(rank);
  if (level < 1 || level > rank) {
    throw PreconditionError("cut level must be in 1.." + std::to_string(rank));
  }
  if (prefix.size() != static_cast<std::size_t>(level)) {
    throw PreconditionError("cut prefix must have exactly " +
                            std::to_string(level) + " coordinates");
  }
  if (is_zero_vector(prefix)) return unit(rank);
  if (prefix[first_nonzero(prefix)] < 0) {
    throw PreconditionError("cut prefix (" + join(prefix) +
                            ") is lexicographically negative");
  }
  return CutIdeal(rank, Kind::cut, level, std::move(prefix));
}

CutIdeal CutIdeal::strictly_above(int rank, int level, Vector prefix) {
  if (prefix.empty()) throw PreconditionError("empty cut prefix");
  ++prefix.back();
  if (!is_zero_vector(prefix) && prefix[first_nonzero(prefix)] < 0) {
    return unit(rank);
  }
  return cut(rank, level, std::move(prefix));
}

CutIdeal CutIdeal::prime_at(int rank, int level) {
  Vector p(static_cast<std::size_t>(level), 0);
  if (level >= 1) p.back() = 1;
  return cut(rank, level, std::move(p));
}

CutIdeal CutIdeal::parse(const std::string& text, int rank) {
  if (text == "zero") return zero(rank);
  if (text == "unit") return unit(rank);
  const std::string head = "cut:j=";
  if (text.rfind(head, 0) != 0) {
    throw StructuralError("unrecognized cut syntax '" + text + "'");
  }
  auto comma = text.find(",p=");
  if (comma == std::string::npos) {
    throw StructuralError("cut syntax needs ',p=': '" + text + "'");
  }
  try {
    std::size_t used = 0;
    auto level_text = text.substr(head.size(), comma - head.size());
    int level = std::stoi(level_text, &used);
    if (used != level_text.size()) throw std::invalid_argument(level_text);
    Vector prefix;
    std::stringstream ss(text.substr(comma + 3));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      prefix.push_back(v);
    }
    return cut(rank, level, std::move(prefix));
  } catch (const PreconditionError& e) {
    throw StructuralError(std::string("invalid cut '") + text + "': " + e.what());
  } catch (const std::logic_error&) {
    throw StructuralError("malformed integers in cut '" + text + "'");
  }
}

bool CutIdeal::is_unit() const {
  return kind_ == Kind::cut && is_zero_vector(prefix_);
}

int CutIdeal::level() const {
  if (kind_ == Kind::zero) throw PreconditionError("zero ideal has no level");
  return level_;
}

const Vector& CutIdeal::prefix() const {
  if (kind_ == Kind::zero) throw PreconditionError("zero ideal has no prefix");
  return prefix_;
}

bool CutIdeal::contains(const Value& v) const {
  if (v.rank() != rank_) throw PreconditionError("value rank mismatch");
  if (v.is_infinite()) return true;
  if (kind_ == Kind::zero) return false;
  if (!ValuationSubring::minimal(rank_).contains(v)) return false;
  return lex_compare(v.prefix(level_), prefix_) >= 0;
}

bool CutIdeal::subset_of(const CutIdeal& other) const {
  if (rank_ != other.rank_) throw PreconditionError("cut rank mismatch");
  if (is_zero()) return true;
  if (other.is_zero()) return false;
  auto m = static_cast<std::size_t>(std::min(level_, other.level_));
  std::span<const std::int64_t> a(prefix_.data(), m), b(other.prefix_.data(), m);
  if (auto c = lex_compare(a, b); c != 0) return c > 0;
  return level_ >= other.level_;
}

std::string CutIdeal::to_string() const {
  if (kind_ == Kind::zero) return "zero";
  return "cut:j=" + std::to_string(level_) + ",p=" + join(prefix_);
}

// ---- closed forms ----------------------------------------------------------

namespace {
void require_same_rank(const CutIdeal& i, const CutIdeal& j) {
  if (i.rank() != j.rank()) throw PreconditionError("cuts of different ranks");
}
}  // namespace

CutIdeal cut_sum(const CutIdeal& i, const CutIdeal& j) {
  require_same_rank(i, j);
  return i.subset_of(j) ? j : i;
}

CutIdeal cut_product(const CutIdeal& i, const CutIdeal& j) {
  require_same_rank(i, j);
  if (i.is_zero() || j.is_zero()) return CutIdeal::zero(i.rank());
  if (i.is_unit()) return j;
  if (j.is_unit()) return i;
  auto m = std::min(i.level(), j.level());
  Vector p(static_cast<std::size_t>(m));
  for (std::size_t t = 0; t < p.size(); ++t) p[t] = i.prefix()[t] + j.prefix()[t];
  return CutIdeal::cut(i.rank(), m, std::move(p));
}

CutIdeal cut_power(const CutIdeal& i, int n) {
  if (n < 0) throw PreconditionError("negative ideal power");
  if (n == 0 || i.is_unit()) return CutIdeal::unit(i.rank());
  if (i.is_zero()) return i;
  Vector p(i.prefix());
  for (auto& x : p) x *= n;
  return CutIdeal::cut(i.rank(), i.level(), std::move(p));
}

CutIdeal cut_radical(const CutIdeal& i) {
  if (i.is_zero() || i.is_unit()) return i;
  auto pos = first_nonzero(i.prefix());
  return CutIdeal::prime_at(i.rank(), static_cast<int>(pos) + 1);
}

bool cut_is_prime(const CutIdeal& i) {
  if (i.is_zero()) return true;
  if (i.is_unit()) return false;
  return i == CutIdeal::prime_at(i.rank(), i.level());
}

bool cut_is_primary(const CutIdeal& i) {
  if (i.is_zero()) return true;
  if (i.is_unit()) return false;
  return first_nonzero(i.prefix()) + 1 == static_cast<std::size_t>(i.level());
}

CutIdeal cut_scaling_preimage(const CutIdeal& i, int n) {
  if (n < 1) throw PreconditionError("scaling factor must be positive");
  if (i.is_zero() || i.is_unit()) return i;
  const auto& q = i.prefix();
  Vector s;
  for (std::size_t t = 0; t < q.size(); ++t) {
    s.push_back(ceil_div(q[t], n));
    if (n * s.back() > q[t]) {
      return CutIdeal::cut(i.rank(), static_cast<int>(t) + 1, std::move(s));
    }
  }
  return CutIdeal::cut(i.rank(), i.level(), std::move(s));
}

CutIdeal cut_intersection_of_powers(const CutIdeal& i) {
  if (i.is_zero() || i.is_unit()) return i;
  auto pos = first_nonzero(i.prefix());
  if (pos == 0) return CutIdeal::zero(i.rank());
  return CutIdeal::prime_at(i.rank(), static_cast<int>(pos));
}

// ---- subrings --------------------------------------------------------------

std::optional<std::string> valuation_subring_failure(
    const ValueHyperfield& field, const std::function<bool(const Value&)>& s,
    int radius) {
  if (!s(field.zero())) return "does not contain 0";
  if (!s(field.one())) return "does not contain 1";
  auto points = field.window(radius);
  std::vector<Value> members;
  for (const auto& x : points) {
    if (s(x)) {
      members.push_back(x);
    } else if (!s(x.inverse())) {
      return "neither " + x.to_string() + " nor its inverse is a member";
    }
  }
  for (const auto& x : members) {
    if (!s(field.neg(x))) return "not closed under negation at " + x.to_string();
    for (const auto& y : members) {
      if (!s(field.mul(x, y))) {
        return "not closed under products at " + x.to_string() + "*" +
               y.to_string();
      }
    }
    // x (+) y is {min} for x != y; only x (+) x can leave the set.
    for (const auto& z : points) {
      if (z >= x && !s(z)) {
        return "x+x not contained at x=" + x.to_string() + ", z=" + z.to_string();
      }
    }
  }
  return std::nullopt;
}

std::vector<ValuationSubring> enumerate_intermediate_valuation_rings(
    const ValueHyperfield& field) {
  std::vector<ValuationSubring> out;
  for (int level = field.rank(); level >= 0; --level) {
    ValuationSubring ring(field.rank(), level);
    auto failure = valuation_subring_failure(
        field, [&](const Value& v) { return ring.contains(v); }, 2);
    if (failure) {
      throw InternalConsistencyError(ring.name() +
                                     " fails the valuation subring check: " +
                                     *failure);
    }
    out.push_back(ring);
  }
  return out;
}

ValuationSubring generated_subring(const ValueHyperfield& field,
                                   const Value& a) {
  auto v = ValuationSubring::minimal(field.rank());
  if (v.contains(a)) return v;
  auto pos = first_nonzero(a.coords());
  return ValuationSubring(field.rank(), static_cast<int>(pos));
}

bool extension_contains(const CutIdeal& i, const ValuationSubring& w,
                        const Value& v) {
  if (v.is_infinite()) return true;
  if (i.is_zero()) return false;
  auto m = std::min(i.level(), w.level());
  auto vp = v.prefix(m);
  std::span<const std::int64_t> ip(i.prefix().data(), static_cast<std::size_t>(m));
  return lex_compare(vp, ip) >= 0;
}

bool extension_is_whole_ring(const CutIdeal& i, const ValuationSubring& w) {
  if (i.is_zero()) return false;
  auto m = static_cast<std::size_t>(std::min(i.level(), w.level()));
  return is_zero_vector(std::span<const std::int64_t>(i.prefix().data(), m));
}

}  // namespace hyperring::value
