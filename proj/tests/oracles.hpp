#pragma once

// Independent reference implementations used as test oracles. They work on
// raw tables and share no code with the library.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "hyperring/catalog.hpp"
#include "hyperring/kernel.hpp"

namespace oracle {

struct Raw {
  int n = 0;
  int zero = 0;
  int one = 1;
  std::vector<std::vector<std::set<int>>> add;
  std::vector<std::vector<int>> mul;
};

inline Raw from_ring(const hyperring::FiniteHyperring& r) {
  Raw raw;
  raw.n = static_cast<int>(r.size());
  raw.zero = static_cast<int>(r.zero());
  raw.one = static_cast<int>(r.one());
  raw.add.assign(raw.n, std::vector<std::set<int>>(raw.n));
  raw.mul.assign(raw.n, std::vector<int>(raw.n));
  for (int x = 0; x < raw.n; ++x) {
    for (int y = 0; y < raw.n; ++y) {
      for (auto z : r.add(x, y)) raw.add[x][y].insert(static_cast<int>(z));
      raw.mul[x][y] = static_cast<int>(r.mul(x, y));
    }
  }
  return raw;
}

inline hyperring::FiniteHyperring to_ring(const Raw& raw) {
  std::vector<std::string> labels;
  for (int i = 0; i < raw.n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::vector<hyperring::FiniteHyperring::AddCell>> add(
      raw.n, std::vector<hyperring::FiniteHyperring::AddCell>(raw.n));
  std::vector<std::vector<hyperring::Element>> mul(
      raw.n, std::vector<hyperring::Element>(raw.n));
  for (int x = 0; x < raw.n; ++x) {
    for (int y = 0; y < raw.n; ++y) {
      for (int z : raw.add[x][y]) add[x][y].push_back(z);
      mul[x][y] = raw.mul[x][y];
    }
  }
  return {"raw", labels, static_cast<hyperring::Element>(raw.zero),
          static_cast<hyperring::Element>(raw.one), add, mul};
}

inline std::set<int> as_set(const hyperring::ElementSet& s) {
  std::set<int> out;
  for (auto x : s) out.insert(static_cast<int>(x));
  return out;
}

inline hyperring::ElementSet as_elements(const hyperring::FiniteHyperring& r,
                                         const std::set<int>& s) {
  auto out = r.empty_set();
  for (int x : s) out.insert(static_cast<hyperring::Element>(x));
  return out;
}

inline std::set<int> plus(const Raw& r, const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  for (int x : a) {
    for (int y : b) out.insert(r.add[x][y].begin(), r.add[x][y].end());
  }
  return out;
}

// Every Krasner axiom, written straight from the definition.
inline bool is_krasner(const Raw& r) {
  const int n = r.n;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.add[x][y].empty() || r.add[x][y] != r.add[y][x]) return false;
      if (r.mul[x][y] != r.mul[y][x]) return false;
      for (int z = 0; z < n; ++z) {
        if (plus(r, r.add[x][y], {z}) != plus(r, {x}, r.add[y][z])) return false;
        if (r.mul[r.mul[x][y]][z] != r.mul[x][r.mul[y][z]]) return false;
        std::set<int> left, right;
        for (int w : r.add[y][z]) left.insert(r.mul[x][w]);
        right = r.add[r.mul[x][y]][r.mul[x][z]];
        if (left != right) return false;
      }
    }
    if (r.add[x][r.zero] != std::set<int>{x}) return false;
    if (r.mul[x][r.one] != x || r.mul[x][r.zero] != r.zero) return false;
  }
  std::vector<int> neg(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.add[x][y].count(r.zero)) {
        if (neg[x] != -1) return false;
        neg[x] = y;
      }
    }
    if (neg[x] == -1) return false;
  }
  // z in x + y implies x in z - y
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z : r.add[x][y]) {
        if (!r.add[z][neg[y]].count(x)) return false;
      }
    }
  }
  return true;
}

inline int negate(const Raw& r, int x) {
  for (int y = 0; y < r.n; ++y) {
    if (r.add[x][y].count(r.zero)) return y;
  }
  return -1;
}

inline bool is_ideal(const Raw& r, const std::set<int>& s) {
  if (s.empty()) return false;
  for (int a : s) {
    for (int b : s) {
      for (int z : r.add[a][negate(r, b)]) {
        if (!s.count(z)) return false;
      }
    }
    for (int x = 0; x < r.n; ++x) {
      if (!s.count(r.mul[x][a])) return false;
    }
  }
  return true;
}

inline std::vector<std::set<int>> all_ideals(const Raw& r) {
  std::vector<std::set<int>> out;
  for (unsigned mask = 1; mask < (1u << r.n); ++mask) {
    std::set<int> s;
    for (int i = 0; i < r.n; ++i) {
      if (mask >> i & 1u) s.insert(i);
    }
    if (is_ideal(r, s)) out.push_back(s);
  }
  return out;
}

inline bool is_prime_number(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

// Integral closure of the ideal (d) in Z/n, classically: r is integral iff
// -r^k lies in the subgroup generated by gcd(d^i, n) r^(k-i), i = 1..k,
// for some k <= n + 1.
inline std::set<int> zn_ideal_closure(int n, int d) {
  auto powmod = [n](long long b, int e) {
    long long out = 1 % n;
    while (e-- > 0) out = out * b % n;
    return out;
  };
  std::set<int> out;
  for (int r = 0; r < n; ++r) {
    for (int k = 1; k <= n + 1; ++k) {
      long long g = n;
      long long di = 1;
      for (int i = 1; i <= k; ++i) {
        di = di * d % n;
        long long gi = std::gcd(di, static_cast<long long>(n));
        g = std::gcd(g, gi * powmod(r, k - i) % n);
      }
      long long target = (n - powmod(r, k)) % n;
      if (target % g == 0) {
        out.insert(r);
        break;
      }
    }
  }
  return out;
}

inline std::set<int> multiples(int n, int d) {
  std::set<int> out;
  for (int x = 0; x < n; x += d) out.insert(x);
  return out;
}

}  // namespace oracle
