#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "mo/order_poly.hpp"
#include "mo/polynomial.hpp"
#include "mo/poset.hpp"

namespace mo {

inline constexpr std::size_t kDefaultChainCap = std::size_t{1} << 22;

// A poset with an integer marking on a subset A that contains every minimal
// and maximal element. The marking need not be order preserving; whether it
// lies in the order cone is a separate query.
class MarkedPoset {
 public:
  static MarkedPoset create(Poset poset, const std::map<int, long long>& marks);

  const Poset& poset() const { return poset_; }
  Subset marked() const { return marked_; }
  Subset free() const { return poset_.all() - marked_; }
  long long mark(int a) const { return mark_[a]; }

 private:
  Poset poset_;
  Subset marked_;
  std::vector<long long> mark_;
};

// Ordering a_0, ..., a_r of the marked elements with i < j whenever a_i < a_j.
struct NaturalLabeling {
  std::vector<int> order;
  int rank() const { return static_cast<int>(order.size()) - 1; }
};

// Strict chain I_0 c I_1 c ... c I_r of order ideals with a_i in I_i \ I_{i-1}.
struct IdealChain {
  std::vector<Subset> ideals;
};

// Marking values along a labeling, and their consecutive differences.
std::vector<long long> labeling_values(const MarkedPoset& m, const NaturalLabeling& l);
std::vector<long long> labeling_gaps(const MarkedPoset& m, const NaturalLabeling& l);

// True iff the marking is order preserving on the marked subposet.
bool in_order_cone(const MarkedPoset& m);

// Canonical natural labeling: marked elements sorted by (mark value,
// topological index of the induced marked subposet). The resulting value
// sequence is weakly increasing. Requires in_order_cone.
NaturalLabeling natural_labeling_for(const MarkedPoset& m);

// Exact number of integer order preserving extensions of the marking, by DFS
// over the unmarked elements in a fixed linear-extension order. Bounds come
// from assigned predecessors below and marked elements above; both are finite
// because min(P) and max(P) are marked. Returns 0 outside the order cone.
Int count_bruteforce(const MarkedPoset& m, std::uint64_t node_budget = kDefaultNodeBudget);

// Visits every integer extension (full value vector, marked entries included).
void for_each_lattice_point(const MarkedPoset& m,
                            const std::function<void(const std::vector<long long>&)>& visit,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// All qualifying chains of ideals in deterministic order (levels follow the
// canonical ideal order). Every returned chain ends at the full ground set.
std::vector<IdealChain> enumerate_chains(const MarkedPoset& m, const NaturalLabeling& l,
                                         std::size_t cap = kDefaultChainCap);

// The chain-of-ideals counting polynomial in the gap variables t_1..t_r:
// sum over chains of the product over levels of the order polynomial of
// I_i \ (I_{i-1} u up(a_i)) in variable t_i. Computed by a level-by-level
// recursion memoized per (level, ideal); factor order polynomials are cached
// per subposet mask within the call. Depends on the labeling only, not on the
// mark values.
MultiPoly product_formula_polynomial(const MarkedPoset& m, const NaturalLabeling& l);

// f at t_i = mark(a_i) - mark(a_{i-1}). The value sequence along l must be
// weakly increasing; the result is always an integer.
Int evaluate_marked(const MarkedPoset& m, const NaturalLabeling& l, const MultiPoly& f);

// Ehrhart polynomial of the marked order polytope: the counting polynomial
// specialized along n times the gap vector. Requires in_order_cone.
UniPoly ehrhart_polynomial(const MarkedPoset& m);

// Level data of the chain decomposition of a lattice point: for each level
// i = 1..r, the shifted restriction to I_i \ (I_{i-1} u up(a_i)), with values
// in [0, t_i - 1].
struct PointDecomposition {
  IdealChain chain;
  std::vector<std::map<int, long long>> level_maps;  // index i-1 holds level i
};

// The level-set bijection behind the product formula. Requires all gaps >= 1;
// the point must be an order preserving extension of the marking.
PointDecomposition decompose_point(const MarkedPoset& m, const NaturalLabeling& l,
                                   const std::vector<long long>& point);
std::vector<long long> reconstruct_point(const MarkedPoset& m, const NaturalLabeling& l,
                                         const PointDecomposition& d);

}  // namespace mo
