#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mo/subset.hpp"

namespace mo {

// Engine limits. Ground sets live in one machine word; ideal enumeration and
// linear-extension listing guard against combinatorial blowup.
inline constexpr int kMaxElements = 64;
inline constexpr std::size_t kDefaultIdealCap = std::size_t{1} << 24;
inline constexpr int kMaxLinearExtensionElements = 12;

// Skew shape lambda/mu: cells (i,j) with mu_i < j <= lambda_i, rows 1-based.
struct SkewShape {
  std::vector<long long> lambda;
  std::vector<long long> mu;

  // Validates: partitions weakly decreasing, nonnegative, mu_i <= lambda_i.
  static SkewShape create(std::vector<long long> lambda, std::vector<long long> mu);

  long long cell_count() const;
  // mu padded with zeros to lambda's length.
  long long mu_at(std::size_t i) const { return i < mu.size() ? mu[i] : 0; }
};

class Poset;

// Result of restricting a poset to a subset of its elements.
struct InducedSubposet;

// Finite poset on elements 0..n-1. Immutable after construction; covers are
// stored as the transitive reduction and leq as the full closure.
class Poset {
 public:
  Poset() = default;

  // Normalizes: computes the transitive closure, rejects cycles and duplicate
  // labels, reduces the cover list to the transitive reduction.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // Transitive reduction, sorted ascending.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool leq(int a, int b) const { return above_[a].contains(b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  // Filter {q : p <= q}, including p.
  Subset up_set(int p) const { return above_[p]; }
  // Ideal {q : q <= p}, including p.
  Subset down_set(int p) const { return below_[p]; }

  Subset all() const { return Subset::full(n_); }
  Subset minimal_elements() const;
  Subset maximal_elements() const;

  bool is_ideal(Subset s) const;
  bool is_filter(Subset s) const;

  // All order ideals, ascending by popcount then by mask value.
  std::vector<Subset> ideals(std::size_t cap = kDefaultIdealCap) const;

  // Subposet on S with the inherited order; elements keep their relative id order.
  InducedSubposet induced(Subset s) const;

  // All linear extensions in lexicographic order (sequences of element ids).
  std::vector<std::vector<int>> linear_extensions() const;

  // One fixed linear extension: repeatedly the smallest-id minimal element.
  std::vector<int> topo_order() const;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<Subset> above_;
  std::vector<Subset> below_;
};

struct InducedSubposet {
  Poset poset;
  std::vector<int> parent;  // new index -> index in the parent poset
};

Poset chain(int k);
Poset antichain(int k);
// Product order on [a] x [b], row-major element ids.
Poset grid(int a, int b);
// Cell poset of a skew shape: covers (i+1,j) < (i,j) and (i,j+1) < (i,j),
// cells ordered row-major (this fixes element ids). Labels are "c{i}_{j}".
Poset skew_shape_poset(const SkewShape& shape);

}  // namespace mo
