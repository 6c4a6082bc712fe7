#pragma once

#include <cstdint>

#include "mo/marked.hpp"
#include "mo/poset.hpp"

namespace mo {

// Fixed, documented generator so seeded trials reproduce across platforms:
// splitmix64 (Steele-Lea-Flood finalizer), values reduced by modulo.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform-enough value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

struct RandomMarkedOptions {
  int max_elements = 8;
  int max_marked = 4;
  long long max_mark = 5;
  bool strict_gaps = false;  // force pairwise distinct values along the labeling
};

// Random poset on up to max_elements elements; cover candidates only go from
// lower to higher index, so the digraph is acyclic by construction.
Poset random_poset(Rng& rng, int max_elements);

// Random marked poset with the marking inside the order cone, at most
// max_marked marked elements, and marks in [0, max_mark] (strict_gaps may push
// values above max_mark to keep them distinct). Retries until the minima and
// maxima fit into max_marked elements.
MarkedPoset random_marked_poset(Rng& rng, const RandomMarkedOptions& options);

// Random skew shape with at most max_cells cells (at least one).
SkewShape random_skew_shape(Rng& rng, int max_cells);

}  // namespace mo
