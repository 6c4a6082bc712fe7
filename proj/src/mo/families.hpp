#pragma once

#include <optional>
#include <vector>

#include "mo/marked.hpp"
#include "mo/poset.hpp"

namespace mo {

// Row/column data for the grid-shaped marked poset families. y and z have
// length k with nonnegative entries; the marks are the prefix sums.
struct GridSpec {
  int k = 0;
  int m = 0;
  std::vector<long long> y;
  std::vector<long long> z;

  static GridSpec create(int k, int m, std::vector<long long> y, std::vector<long long> z);
  std::vector<long long> y_prefix() const;
  std::vector<long long> z_prefix() const;
};
using PsSpec = GridSpec;
using GtSpec = GridSpec;

// Row flags: weakly increasing a, b of length k with 0 <= a_i < b_i <= m+1.
struct FlagSpec {
  std::vector<long long> a;
  std::vector<long long> b;

  static FlagSpec create(std::vector<long long> a, std::vector<long long> b, int k, int m);
};

// Grid poset on [k] x [0, m+1] (product order), column 0 marked with the
// z prefix sums and column m+1 with the y prefix sums. Elements are row-major,
// labeled "x{i}_{j}".
MarkedPoset pitman_stanley_marked(const PsSpec& spec);

// Poset on [k] x [0, m+1] with covers (i,j) < (i,j+1) < (i+1,j), marked the
// same way. Same element ids and labels as the grid family.
MarkedPoset gelfand_tsetlin_marked(const GtSpec& spec);

// Face of the Gelfand-Tsetlin polytope cut out by x_{i,j} = x_{i,j-1} for
// j outside [a_i+1, b_i], realized by identifying the equated elements.
MarkedPoset flagged_face_marked(const GtSpec& spec, const FlagSpec& flags);

// Fillings of the shape weakly decreasing along rows and down columns,
// entries in [1, max_entry]. Independent DFS enumerator.
Int count_plane_partitions(const SkewShape& shape, long long max_entry,
                           std::uint64_t node_budget = kDefaultNodeBudget);

// Rows weakly increasing, columns strictly increasing, entries in [1, max_entry].
Int count_ssyt(const SkewShape& shape, long long max_entry,
               std::uint64_t node_budget = kDefaultNodeBudget);

// The shape whose fillings correspond to the family's lattice points:
// (y~_k, ..., y~_1)/(z~_k, ..., z~_1). Empty when some row is infeasible
// (z~_i > y~_i), in which case the polytope is empty too.
std::optional<SkewShape> family_skew_shape(const GridSpec& spec);

// Lattice point of the PS family -> plane partition of family_skew_shape,
// top-to-bottom rows: x_{i,j} - z~_i counts the entries <= j in the row of i.
std::vector<std::vector<long long>> ps_point_to_plane_partition(
    const PsSpec& spec, const std::vector<long long>& point);

// The lattice point count of the z = 0 family as one polynomial in y_1..y_k:
// the counting polynomial for the structural labeling (z block before y
// block), z gaps set to zero and the remaining gaps renamed to y.
MultiPoly ps_polynomial_in_y(int k, int m);

}  // namespace mo
