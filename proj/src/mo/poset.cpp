#include "mo/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "mo/error.hpp"

namespace mo {

SkewShape SkewShape::create(std::vector<long long> lambda, std::vector<long long> mu) {
  if (mu.size() > lambda.size())
    raise(Errc::invalid_argument, "skew shape: mu longer than lambda");
  auto weakly_decreasing = [](const std::vector<long long>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] > v[i - 1]) return false;
    return v.empty() || v.back() >= 0;
  };
  if (!weakly_decreasing(lambda) || !weakly_decreasing(mu))
    raise(Errc::invalid_argument, "skew shape: parts must be weakly decreasing and nonnegative");
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i]) raise(Errc::invalid_argument, "skew shape: mu_i > lambda_i");
  return SkewShape{std::move(lambda), std::move(mu)};
}

long long SkewShape::cell_count() const {
  long long total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) total += lambda[i] - mu_at(i);
  return total;
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxElements) raise(Errc::size_limit, "poset exceeds 64 elements");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) raise(Errc::duplicate_element, "duplicate label: " + l);
  }
  std::vector<Subset> succ(n);  // strict successors via given covers
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      raise(Errc::invalid_argument, "cover index out of range");
    if (lo == hi) raise(Errc::cycle_detected, "self-loop on element " + labels[lo]);
    succ[lo].add(hi);
  }

  // Closure by iterating to a fixed point; cycle check via Kahn afterwards.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      Subset acc = succ[v];
      succ[v].for_each([&](int w) { acc = acc | succ[w]; });
      if (!(acc == succ[v])) {
        succ[v] = acc;
        changed = true;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (succ[v].contains(v)) raise(Errc::cycle_detected, "cover digraph has a directed cycle");

  Poset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.above_.resize(n);
  p.below_.resize(n);
  for (int v = 0; v < n; ++v) {
    p.above_[v] = succ[v];
    p.above_[v].add(v);
  }
  for (int v = 0; v < n; ++v)
    p.above_[v].for_each([&](int w) { p.below_[w].add(v); });

  // Transitive reduction: a < b is a cover iff nothing sits strictly between.
  for (int a = 0; a < n; ++a) {
    Subset strict = p.above_[a];
    strict.remove(a);
    strict.for_each([&](int b) {
      Subset between = strict & p.below_[b];
      between.remove(b);
      if (between.empty()) p.covers_.emplace_back(a, b);
    });
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

Subset Poset::minimal_elements() const {
  Subset out;
  for (int v = 0; v < n_; ++v) {
    Subset strictly_below = below_[v];
    strictly_below.remove(v);
    if (strictly_below.empty()) out.add(v);
  }
  return out;
}

Subset Poset::maximal_elements() const {
  Subset out;
  for (int v = 0; v < n_; ++v) {
    Subset strictly_above = above_[v];
    strictly_above.remove(v);
    if (strictly_above.empty()) out.add(v);
  }
  return out;
}

bool Poset::is_ideal(Subset s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (!below_[v].subset_of(s)) ok = false;
  });
  return ok;
}

bool Poset::is_filter(Subset s) const { return is_ideal(all() - s); }

std::vector<Subset> Poset::ideals(std::size_t cap) const {
  // Breadth-first closure in the ideal lattice: grow each ideal by a minimal
  // element of its complement, deduplicate by mask.
  std::vector<Subset> out;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Subset> queue{Subset{}};
  seen.insert(0);
  while (!queue.empty()) {
    Subset ideal = queue.back();
    queue.pop_back();
    out.push_back(ideal);
    if (out.size() > cap) raise(Errc::size_limit, "ideal count exceeds cap");
    (all() - ideal).for_each([&](int v) {
      Subset strictly_below = below_[v];
      strictly_below.remove(v);
      if (!strictly_below.subset_of(ideal)) return;
      Subset next = ideal;
      next.add(v);
      if (seen.insert(next.bits()).second) queue.push_back(next);
    });
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits() < b.bits();
  });
  return out;
}

InducedSubposet Poset::induced(Subset s) const {
  std::vector<int> parent;
  std::vector<std::string> labels;
  s.for_each([&](int v) {
    parent.push_back(v);
    labels.push_back(labels_[v]);
  });
  std::vector<std::pair<int, int>> relations;
  for (std::size_t i = 0; i < parent.size(); ++i)
    for (std::size_t j = 0; j < parent.size(); ++j)
      if (i != j && leq(parent[i], parent[j]))
        relations.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return InducedSubposet{from_covers(std::move(labels), relations), std::move(parent)};
}

std::vector<std::vector<int>> Poset::linear_extensions() const {
  if (n_ > kMaxLinearExtensionElements)
    raise(Errc::size_limit, "too many elements for linear extension listing");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  Subset placed;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == n_) {
      out.push_back(current);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (placed.contains(v)) continue;
      Subset strictly_below = below_[v];
      strictly_below.remove(v);
      if (!strictly_below.subset_of(placed)) continue;
      placed.add(v);
      current.push_back(v);
      self(self);
      current.pop_back();
      placed.remove(v);
    }
  };
  rec(rec);
  return out;
}

std::vector<int> Poset::topo_order() const {
  std::vector<int> order;
  Subset placed;
  while (static_cast<int>(order.size()) < n_) {
    for (int v = 0; v < n_; ++v) {
      if (placed.contains(v)) continue;
      Subset strictly_below = below_[v];
      strictly_below.remove(v);
      if (strictly_below.subset_of(placed)) {
        placed.add(v);
        order.push_back(v);
        break;
      }
    }
  }
  return order;
}

Poset chain(int k) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < k; ++i) {
    labels.push_back("e" + std::to_string(i));
    if (i + 1 < k) covers.emplace_back(i, i + 1);
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset antichain(int k) {
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("e" + std::to_string(i));
  return Poset::from_covers(std::move(labels), {});
}

Poset grid(int a, int b) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  auto id = [b](int i, int j) { return i * b + j; };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      labels.push_back("g" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      if (i + 1 < a) covers.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < b) covers.emplace_back(id(i, j), id(i, j + 1));
    }
  return Poset::from_covers(std::move(labels), covers);
}

Poset skew_shape_poset(const SkewShape& shape) {
  struct Cell {
    long long i, j;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < shape.lambda.size(); ++r)
    for (long long j = shape.mu_at(r) + 1; j <= shape.lambda[r]; ++j)
      cells.push_back({static_cast<long long>(r + 1), j});
  if (cells.empty()) raise(Errc::empty_shape, "skew shape has no cells");
  if (cells.size() > static_cast<std::size_t>(kMaxElements))
    raise(Errc::size_limit, "skew shape exceeds 64 cells");

  auto find = [&](long long i, long long j) -> int {
    for (std::size_t t = 0; t < cells.size(); ++t)
      if (cells[t].i == i && cells[t].j == j) return static_cast<int>(t);
    return -1;
  };
  std::vector<std::string> labels;
  for (const auto& c : cells)
    labels.push_back("c" + std::to_string(c.i) + "_" + std::to_string(c.j));
  std::vector<std::pair<int, int>> covers;
  for (std::size_t t = 0; t < cells.size(); ++t) {
    // (i+1, j) < (i, j) and (i, j+1) < (i, j)
    if (int lo = find(cells[t].i + 1, cells[t].j); lo >= 0)
      covers.emplace_back(lo, static_cast<int>(t));
    if (int lo = find(cells[t].i, cells[t].j + 1); lo >= 0)
      covers.emplace_back(lo, static_cast<int>(t));
  }
  return Poset::from_covers(std::move(labels), covers);
}

}  // namespace mo
