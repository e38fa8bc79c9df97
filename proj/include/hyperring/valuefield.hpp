#pragma once

// The value hyperfield T_G over G = Z^k (lexicographic order, k <= 4).
//
//   elements    G together with an infinite element (the zero)
//   product     componentwise addition, infinity absorbing
//   sum         x (+) y = {min(x,y)} for x != y,
//               x (+) x = {z : z >= x} together with infinity
//   negation    the identity
//
// The identity map is a hypervaluation. Its valuation subrings are the
// convex-subgroup coarsenings V_j = {v : first j coordinates >=_lex 0}, and
// the hyperideals of the minimal one V = V_k are prefix cuts.

#include <compare>
#include <functional>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperring/errors.hpp"
#include "hyperring/kernel.hpp"

namespace hyperring::value {

inline constexpr int kMaxRank = 4;

using Vector = std::vector<std::int64_t>;

// Lexicographic comparison of equal-length integer vectors.
std::strong_ordering lex_compare(std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b);

// The ordered group Z^k under lexicographic order.
struct OrderedGroup {
  int rank;

  explicit OrderedGroup(int k);
  Vector identity() const { return Vector(static_cast<std::size_t>(rank), 0); }
  Vector add(const Vector& a, const Vector& b) const;
  std::strong_ordering compare(const Vector& a, const Vector& b) const {
    return lex_compare(a, b);
  }
};

// An element of T_G: a group vector or infinity.
class Value {
 public:
  static Value infinity(int rank);
  static Value unit(int rank);  // the group identity
  explicit Value(Vector coords);

  int rank() const noexcept { return rank_; }
  bool is_infinite() const noexcept { return infinite_; }
  const Vector& coords() const;
  std::int64_t operator[](int i) const { return coords().at(i); }

  // Hyperfield product (group addition).
  Value operator+(const Value& other) const;
  // n-th power in the hyperfield, i.e. n*v in the group. n >= 0.
  Value scaled(std::int64_t n) const;
  // Multiplicative inverse (group negation). Throws for infinity.
  Value inverse() const;

  // First j coordinates. Infinity has no prefix (throws).
  Vector prefix(int j) const;

  std::strong_ordering operator<=>(const Value& other) const;
  bool operator==(const Value& other) const;

  std::string to_string() const;

 private:
  Value(int rank, bool infinite, Vector coords)
      : rank_(rank), infinite_(infinite), coords_(std::move(coords)) {}
  void require_same_rank(const Value& other) const;

  int rank_;
  bool infinite_;
  Vector coords_;
};

// The sets a hyper-sum in T_G can take: a single value, or an up-set
// {z >= m} with infinity.
class ValueSet {
 public:
  static ValueSet single(Value v);
  static ValueSet up_from(Value m);

  bool contains(const Value& v) const;
  bool is_singleton() const noexcept { return singleton_; }
  const Value& anchor() const noexcept { return anchor_; }

  bool operator==(const ValueSet&) const = default;
  std::string to_string() const;

 private:
  ValueSet(Value anchor, bool singleton)
      : anchor_(std::move(anchor)), singleton_(singleton) {}
  Value anchor_;
  bool singleton_;
};

class ValueHyperfield {
 public:
  explicit ValueHyperfield(int rank);

  int rank() const noexcept { return group_.rank; }
  const OrderedGroup& group() const noexcept { return group_; }
  Value zero() const { return Value::infinity(rank()); }
  Value one() const { return Value::unit(rank()); }

  Value mul(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return a; }
  ValueSet add(const Value& a, const Value& b) const;
  // Union of s (+) t over s in acc.
  ValueSet add(const ValueSet& acc, const Value& t) const;
  // Left fold of hyperaddition over the terms (non-empty).
  ValueSet fold(std::span<const Value> terms) const;

  // Every group vector with coordinates in [-radius, radius].
  std::vector<Value> window(int radius) const;

  // Krasner hyperfield axioms, spot-checked on the window (plus infinity).
  VerificationReport verify_on_window(int radius) const;

 private:
  OrderedGroup group_;
};

// Whether infinity lies in the hyper-sum of the given values: the minimum
// of the finite terms is attained at least twice (or all terms are infinite).
bool sum_contains_zero(std::span<const Value> terms);

// V_j = {v : prefix_j(v) >=_lex 0} with infinity. Level k is V, level 0 is T.
class ValuationSubring {
 public:
  ValuationSubring(int rank, int level);
  static ValuationSubring minimal(int rank) { return {rank, rank}; }
  static ValuationSubring whole_field(int rank) { return {rank, 0}; }
  // "V", "V1".."V<k-1>", "T" (and "V<k>" as a synonym for V).
  static ValuationSubring parse(const std::string& text, int rank);

  int rank() const noexcept { return rank_; }
  int level() const noexcept { return level_; }
  bool contains(const Value& v) const;
  // Maximal ideal {v : prefix_j(v) >_lex 0} with infinity ({infinity} for T).
  bool maximal_ideal_contains(const Value& v) const;
  // V_j is contained in V_i exactly when i <= j.
  bool subset_of(const ValuationSubring& other) const;

  std::string name() const;
  bool operator==(const ValuationSubring&) const = default;

 private:
  int rank_;
  int level_;
};

// A hyperideal of V = V_k: {infinity}, or {v in V : prefix_j(v) >=_lex p}.
// The unit ideal is always stored as level k with p = 0.
class CutIdeal {
 public:
  enum class Kind { zero, cut };

  static CutIdeal zero(int rank);
  static CutIdeal unit(int rank);
  // Requires 1 <= level <= rank, |prefix| = level and prefix >=_lex 0.
  static CutIdeal cut(int rank, int level, Vector prefix);
  // {v in V : prefix_j(v) >_lex p}, normalized by bumping the last coordinate.
  static CutIdeal strictly_above(int rank, int level, Vector prefix);
  // The prime cut {v : prefix_i(v) >_lex 0} for 1 <= i <= rank.
  static CutIdeal prime_at(int rank, int level);
  // "zero" or "cut:j=<level>,p=<comma-separated integers>".
  static CutIdeal parse(const std::string& text, int rank);

  int rank() const noexcept { return rank_; }
  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }
  int level() const;
  const Vector& prefix() const;

  bool contains(const Value& v) const;
  // Set inclusion this <= other.
  bool subset_of(const CutIdeal& other) const;

  std::string to_string() const;
  bool operator==(const CutIdeal&) const = default;

 private:
  CutIdeal(int rank, Kind kind, int level, Vector prefix)
      : rank_(rank), kind_(kind), level_(level), prefix_(std::move(prefix)) {}

  int rank_;
  Kind kind_;
  int level_;
  Vector prefix_;
};

// Closed forms on cut ideals.
CutIdeal cut_sum(const CutIdeal& i, const CutIdeal& j);
CutIdeal cut_product(const CutIdeal& i, const CutIdeal& j);
CutIdeal cut_power(const CutIdeal& i, int n);
CutIdeal cut_radical(const CutIdeal& i);
bool cut_is_prime(const CutIdeal& i);
bool cut_is_primary(const CutIdeal& i);
// {v in V : n*v in I}, n >= 1.
CutIdeal cut_scaling_preimage(const CutIdeal& i, int n);
// The intersection of the descending chain I, I^2, I^3, ...
CutIdeal cut_intersection_of_powers(const CutIdeal& i);

// [V_k, V_{k-1}, ..., V_0]: every valuation subring of T_G containing V.
// Each is checked against the subring and valuation-subring predicates on
// a small window before being returned.
std::vector<ValuationSubring> enumerate_intermediate_valuation_rings(
    const ValueHyperfield& field);

// Hypervaluation-subring predicate restricted to a window: contains 0 and
// 1, closed under products, negation and sums, and a in S or a^-1 in S.
// Returns a description of the first failure.
std::optional<std::string> valuation_subring_failure(
    const ValueHyperfield& field, const std::function<bool(const Value&)>& s,
    int radius);

// V[a] = {v : v >= n*a for some n >= 0}, the least subring containing V
// and a. Always one of the V_j.
ValuationSubring generated_subring(const ValueHyperfield& field,
                                   const Value& a);

// The extension I*W of a cut ideal of V to an overring W = V_j, as a
// subset of T_G: {v : prefix_m(v) >=_lex prefix_m(p)}, m = min(level, j).
bool extension_contains(const CutIdeal& i, const ValuationSubring& w,
                        const Value& v);
// I*W = W.
bool extension_is_whole_ring(const CutIdeal& i, const ValuationSubring& w);

}  // namespace hyperring::value
