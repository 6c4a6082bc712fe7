#pragma once

#include <cstdint>
#include <vector>

#include "mo/polynomial.hpp"
#include "mo/poset.hpp"
#include "mo/rational.hpp"

namespace mo {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;  // DFS assignments

// Number of order preserving maps P -> {1..n}, by pruned DFS along a fixed
// linear extension. The empty poset has exactly one map for every n >= 0.
Int count_maps_bruteforce(const Poset& p, long long n,
                          std::uint64_t node_budget = kDefaultNodeBudget);

// The order polynomial: the unique polynomial agreeing with
// count_maps_bruteforce at every n >= 1. Computed by the multichain dynamic
// program over the ideal lattice (an order preserving map into [n] is the same
// as a multichain of ideals of length n ending at the full set), evaluated at
// n = 1..|P|+1 and interpolated. The empty poset yields the constant 1.
UniPoly omega(const Poset& p, std::size_t ideal_cap = kDefaultIdealCap);

// Cross-check engine from linear-extension descent statistics:
// sum over extensions w of binom(n + |P| - 1 - des(w), |P|). The labeling must
// be natural: position i before position j whenever element_i < element_j.
UniPoly omega_via_descents(const Poset& p, const std::vector<int>& natural_labeling);

// binom(n + shift, k) as a polynomial in n.
UniPoly binomial_poly(long long shift, int k);

}  // namespace mo
