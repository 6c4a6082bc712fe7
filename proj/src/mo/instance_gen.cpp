#include "mo/instance_gen.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mo {

Poset random_poset(Rng& rng, int max_elements) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_elements)));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(5) < 2) covers.emplace_back(i, j);
  return Poset::from_covers(std::move(labels), covers);
}

MarkedPoset random_marked_poset(Rng& rng, const RandomMarkedOptions& options) {
  for (;;) {
    Poset p = random_poset(rng, options.max_elements);
    Subset required = p.minimal_elements() | p.maximal_elements();
    if (required.count() > options.max_marked) continue;

    Subset marked = required;
    for (int v = 0; v < p.size() && marked.count() < options.max_marked; ++v)
      if (!marked.contains(v) && rng.below(2) == 0) marked.add(v);

    // assign marks along a topological pass so the marking is order preserving
    InducedSubposet induced = p.induced(marked);
    std::map<int, long long> marks;
    long long running_max = -1;
    for (int local : induced.poset.topo_order()) {
      int a = induced.parent[local];
      long long lo = 0;
      (p.down_set(a) & marked).for_each([&](int b) {
        auto it = marks.find(b);
        if (it != marks.end()) lo = std::max(lo, it->second);
      });
      long long value;
      if (options.strict_gaps) {
        value = std::max(lo, running_max + 1) + static_cast<long long>(rng.below(3));
        running_max = value;
      } else {
        value = std::max(lo, static_cast<long long>(rng.below(options.max_mark + 1)));
      }
      marks[a] = value;
    }
    return MarkedPoset::create(std::move(p), marks);
  }
}

SkewShape random_skew_shape(Rng& rng, int max_cells) {
  for (;;) {
    const int rows = 1 + static_cast<int>(rng.below(3));
    std::vector<long long> lambda(rows), mu(rows);
    lambda[0] = 1 + static_cast<long long>(rng.below(6));
    for (int i = 1; i < rows; ++i) lambda[i] = 1 + static_cast<long long>(rng.below(lambda[i - 1]));
    mu[0] = static_cast<long long>(rng.below(lambda[0]));
    for (int i = 1; i < rows; ++i)
      mu[i] = std::min(mu[i - 1], static_cast<long long>(rng.below(lambda[i] + 1)));
    SkewShape shape = SkewShape::create(std::move(lambda), std::move(mu));
    if (shape.cell_count() >= 1 && shape.cell_count() <= max_cells) return shape;
  }
}

}  // namespace mo
