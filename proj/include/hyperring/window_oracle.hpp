#pragma once

// Brute-force oracles for cut ideals over a finite window of Z^k.
//
// Ideals are enumerated point by point inside the outer window
// [-W, W]^k and results are compared on the inner window [-W/2, W/2]^k,
// where truncation of the outer window cannot affect membership for the
// small prefixes used in tests.

#include <optional>
#include <string>

#include "hyperring/random.hpp"
#include "hyperring/valuefield.hpp"

namespace hyperring::value {

inline constexpr int kDefaultWindow = 16;

// A subset of V restricted to the inner window, one flag per point in
// window order (see ValueHyperfield::window).
struct WindowSet {
  int rank = 1;
  int radius = 0;
  std::vector<bool> members;

  bool operator==(const WindowSet&) const = default;
};

// Membership of each inner point in a closed-form cut.
WindowSet restrict_to_window(const CutIdeal& i, int window = kDefaultWindow);

WindowSet brute_sum(const CutIdeal& i, const CutIdeal& j,
                    int window = kDefaultWindow);
WindowSet brute_product(const CutIdeal& i, const CutIdeal& j,
                        int window = kDefaultWindow);
WindowSet brute_power(const CutIdeal& i, int n, int window = kDefaultWindow);
// {v : n*v in I for some 1 <= n <= 2W}.
WindowSet brute_radical(const CutIdeal& i, int window = kDefaultWindow);
// Pair searches over the inner window. Proper cuts or zero.
bool brute_is_prime(const CutIdeal& i, int window = kDefaultWindow);
bool brute_is_primary(const CutIdeal& i, int window = kDefaultWindow);

// The first inner point where the two sets disagree, rendered.
std::optional<std::string> first_difference(const WindowSet& a,
                                            const WindowSet& b);

// Closed forms re-checked against the brute-force oracle; a disagreement
// throws InternalConsistencyError.
CutIdeal checked_cut_sum(const CutIdeal& i, const CutIdeal& j,
                         int window = kDefaultWindow);
CutIdeal checked_cut_product(const CutIdeal& i, const CutIdeal& j,
                             int window = kDefaultWindow);
CutIdeal checked_cut_power(const CutIdeal& i, int n,
                           int window = kDefaultWindow);
CutIdeal checked_cut_radical(const CutIdeal& i, int window = kDefaultWindow);
bool checked_cut_is_prime(const CutIdeal& i, int window = kDefaultWindow);
bool checked_cut_is_primary(const CutIdeal& i, int window = kDefaultWindow);

// A random cut with prefix coordinates in [-3, 3]: occasionally zero or the
// unit ideal, otherwise proper.
CutIdeal random_cut(Rng& rng, int rank);
// A random element of V with coordinates in [-radius, radius].
Value random_element_of_v(Rng& rng, int rank, int radius);

}  // namespace hyperring::value
