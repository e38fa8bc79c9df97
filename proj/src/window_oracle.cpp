#include "hyperring/window_oracle.hpp"

#include <algorithm>
#include <array>

namespace hyperring::value {

namespace {

using Point = std::array<std::int64_t, kMaxRank>;

std::vector<Point> grid(int rank, int radius) {
  std::vector<Point> out;
  Point p{};
  for (int i = 0; i < rank; ++i) p[i] = -radius;
  while (true) {
    out.push_back(p);
    int i = rank - 1;
    while (i >= 0 && p[i] == radius) p[i--] = -radius;
    if (i < 0) break;
    ++p[i];
  }
  return out;
}

int compare(const Point& a, const Point& b, int len) {
  for (int i = 0; i < len; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool in_v(const Point& p, int rank) {
  for (int i = 0; i < rank; ++i) {
    if (p[i] != 0) return p[i] > 0;
  }
  return true;
}

// Membership straight from the definition {v in V : prefix_j(v) >= p}.
bool in_cut(const CutIdeal& ideal, const Point& v) {
  if (ideal.is_zero() || !in_v(v, ideal.rank())) return false;
  Point p{};
  const auto& prefix = ideal.prefix();
  for (std::size_t i = 0; i < prefix.size(); ++i) p[i] = prefix[i];
  return compare(v, p, ideal.level()) >= 0;
}

Point add(const Point& a, const Point& b) {
  Point out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point scale(const Point& a, std::int64_t n) {
  Point out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * n;
  return out;
}

std::vector<Point> members(const CutIdeal& ideal, int window) {
  std::vector<Point> out;
  for (const auto& p : grid(ideal.rank(), window)) {
    if (in_cut(ideal, p)) out.push_back(p);
  }
  return out;
}

// Up-closure within V of a least generator (nullopt: only infinity).
WindowSet up_closure(int rank, int window, const std::optional<Point>& least) {
  WindowSet out{rank, window / 2, {}};
  for (const auto& v : grid(rank, window / 2)) {
    out.members.push_back(least && in_v(v, rank) &&
                          compare(v, *least, rank) >= 0);
  }
  return out;
}

void require_same_rank(const CutIdeal& i, const CutIdeal& j) {
  if (i.rank() != j.rank()) throw PreconditionError("cuts of different ranks");
}

std::string render(const Point& p, int rank) {
  Vector v(p.begin(), p.begin() + rank);
  return Value(v).to_string();
}

void require_agreement(const std::string& op, const WindowSet& closed,
                       const WindowSet& brute, const std::string& operands) {
  if (auto diff = first_difference(closed, brute)) {
    throw InternalConsistencyError("closed form " + op + "(" + operands +
                                   ") disagrees with the window oracle at " +
                                   *diff);
  }
}

}  // namespace

WindowSet restrict_to_window(const CutIdeal& i, int window) {
  WindowSet out{i.rank(), window / 2, {}};
  for (const auto& v : grid(i.rank(), window / 2)) {
    Vector coords(v.begin(), v.begin() + i.rank());
    out.members.push_back(i.contains(Value(coords)));
  }
  return out;
}

WindowSet brute_sum(const CutIdeal& i, const CutIdeal& j, int window) {
  require_same_rank(i, j);
  // Each a (+) b has least element min(a, b); infinity contributes nothing.
  auto a = members(i, window), b = members(j, window);
  std::optional<Point> least;
  auto consider = [&](const Point& p) {
    if (!least || compare(p, *least, i.rank()) < 0) least = p;
  };
  for (const auto& x : a) {
    for (const auto& y : b) consider(compare(x, y, i.rank()) <= 0 ? x : y);
  }
  for (const auto& x : a) consider(x);  // x (+) infinity
  for (const auto& y : b) consider(y);
  return up_closure(i.rank(), window, least);
}

WindowSet brute_product(const CutIdeal& i, const CutIdeal& j, int window) {
  require_same_rank(i, j);
  auto a = members(i, window), b = members(j, window);
  std::optional<Point> least;
  for (const auto& x : a) {
    for (const auto& y : b) {
      auto s = add(x, y);
      if (!least || compare(s, *least, i.rank()) < 0) least = s;
    }
  }
  return up_closure(i.rank(), window, least);
}

WindowSet brute_power(const CutIdeal& i, int n, int window) {
  if (n < 1) throw PreconditionError("window oracle powers start at 1");
  auto a = members(i, window);
  if (a.empty()) return up_closure(i.rank(), window, std::nullopt);
  // Least n-fold sum, built one factor at a time.
  std::optional<Point> least;
  for (int k = 0; k < n; ++k) {
    std::optional<Point> next;
    for (const auto& x : a) {
      auto s = least ? add(*least, x) : x;
      if (!next || compare(s, *next, i.rank()) < 0) next = s;
    }
    least = next;
  }
  return up_closure(i.rank(), window, least);
}

WindowSet brute_radical(const CutIdeal& i, int window) {
  WindowSet out{i.rank(), window / 2, {}};
  for (const auto& v : grid(i.rank(), window / 2)) {
    bool hit = false;
    for (int n = 1; n <= 2 * window && !hit; ++n) hit = in_cut(i, scale(v, n));
    out.members.push_back(hit);
  }
  return out;
}

bool brute_is_prime(const CutIdeal& i, int window) {
  if (in_cut(i, Point{})) return false;  // prime ideals are proper
  auto inner = grid(i.rank(), window / 2);
  for (const auto& x : inner) {
    if (!in_v(x, i.rank()) || in_cut(i, x)) continue;
    for (const auto& y : inner) {
      if (!in_v(y, i.rank()) || in_cut(i, y)) continue;
      if (in_cut(i, add(x, y))) return false;
    }
  }
  return true;
}

bool brute_is_primary(const CutIdeal& i, int window) {
  if (in_cut(i, Point{})) return false;
  auto inner = grid(i.rank(), window / 2);
  auto in_radical = [&](const Point& y) {
    for (int n = 1; n <= 2 * window; ++n) {
      if (in_cut(i, scale(y, n))) return true;
    }
    return false;
  };
  for (const auto& x : inner) {
    if (!in_v(x, i.rank()) || in_cut(i, x)) continue;
    for (const auto& y : inner) {
      if (!in_v(y, i.rank()) || in_radical(y)) continue;
      if (in_cut(i, add(x, y))) return false;
    }
  }
  return true;
}

std::optional<std::string> first_difference(const WindowSet& a,
                                            const WindowSet& b) {
  if (a.rank != b.rank || a.radius != b.radius ||
      a.members.size() != b.members.size()) {
    return "incomparable windows";
  }
  auto points = grid(a.rank, a.radius);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (a.members[k] != b.members[k]) {
      return render(points[k], a.rank) + (a.members[k] ? " (only in first)"
                                                       : " (only in second)");
    }
  }
  return std::nullopt;
}

CutIdeal checked_cut_sum(const CutIdeal& i, const CutIdeal& j, int window) {
  auto out = cut_sum(i, j);
  require_agreement("sum", restrict_to_window(out, window),
                    brute_sum(i, j, window), i.to_string() + ", " + j.to_string());
  return out;
}

CutIdeal checked_cut_product(const CutIdeal& i, const CutIdeal& j, int window) {
  auto out = cut_product(i, j);
  require_agreement("product", restrict_to_window(out, window),
                    brute_product(i, j, window),
                    i.to_string() + ", " + j.to_string());
  return out;
}

CutIdeal checked_cut_power(const CutIdeal& i, int n, int window) {
  auto out = cut_power(i, n);
  require_agreement("power", restrict_to_window(out, window),
                    brute_power(i, n, window),
                    i.to_string() + ", " + std::to_string(n));
  return out;
}

CutIdeal checked_cut_radical(const CutIdeal& i, int window) {
  auto out = cut_radical(i);
  require_agreement("radical", restrict_to_window(out, window),
                    brute_radical(i, window), i.to_string());
  return out;
}

bool checked_cut_is_prime(const CutIdeal& i, int window) {
  bool closed = cut_is_prime(i);
  if (closed != brute_is_prime(i, window)) {
    throw InternalConsistencyError("primality of " + i.to_string() +
                                   " disagrees with the window oracle");
  }
  return closed;
}

bool checked_cut_is_primary(const CutIdeal& i, int window) {
  bool closed = cut_is_primary(i);
  if (closed != brute_is_primary(i, window)) {
    throw InternalConsistencyError("primarity of " + i.to_string() +
                                   " disagrees with the window oracle");
  }
  return closed;
}

CutIdeal random_cut(Rng& rng, int rank) {
  auto roll = draw(rng, 0, 15);
  if (roll == 0) return CutIdeal::zero(rank);
  if (roll == 1) return CutIdeal::unit(rank);
  auto level = static_cast<int>(draw(rng, 1, rank));
  while (true) {
    Vector p;
    for (int i = 0; i < level; ++i) p.push_back(draw(rng, -3, 3));
    auto lead = std::find_if(p.begin(), p.end(), [](auto x) { return x != 0; });
    if (lead != p.end() && *lead > 0) return CutIdeal::cut(rank, level, p);
  }
}

Value random_element_of_v(Rng& rng, int rank, int radius) {
  while (true) {
    Vector v;
    for (int i = 0; i < rank; ++i) v.push_back(draw(rng, -radius, radius));
    Value out(v);
    if (ValuationSubring::minimal(rank).contains(out)) return out;
  }
}

}  // namespace hyperring::value
