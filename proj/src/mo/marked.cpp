#include "mo/marked.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "mo/error.hpp"

namespace mo {

MarkedPoset MarkedPoset::create(Poset poset, const std::map<int, long long>& marks) {
  MarkedPoset m;
  m.mark_.assign(poset.size(), 0);
  for (auto [a, value] : marks) {
    if (a < 0 || a >= poset.size()) raise(Errc::invalid_argument, "marked element out of range");
    m.marked_.add(a);
    m.mark_[a] = value;
  }
  Subset extremes = poset.minimal_elements() | poset.maximal_elements();
  if (!extremes.subset_of(m.marked_))
    raise(Errc::invalid_argument, "marking must cover all minimal and maximal elements");
  m.poset_ = std::move(poset);
  return m;
}

namespace {

void validate_labeling(const MarkedPoset& m, const NaturalLabeling& l) {
  if (l.order.size() != static_cast<std::size_t>(m.marked().count()))
    raise(Errc::not_natural_labeling, "labeling size != marked subset size");
  Subset seen;
  for (int a : l.order) {
    if (a < 0 || a >= m.poset().size() || !m.marked().contains(a) || seen.contains(a))
      raise(Errc::not_natural_labeling, "labeling must list each marked element once");
    seen.add(a);
  }
  for (std::size_t i = 0; i < l.order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m.poset().less(l.order[i], l.order[j]))
        raise(Errc::not_natural_labeling, "labeling violates the poset order");
}

}  // namespace

std::vector<long long> labeling_values(const MarkedPoset& m, const NaturalLabeling& l) {
  std::vector<long long> out;
  out.reserve(l.order.size());
  for (int a : l.order) out.push_back(m.mark(a));
  return out;
}

std::vector<long long> labeling_gaps(const MarkedPoset& m, const NaturalLabeling& l) {
  std::vector<long long> out;
  for (std::size_t i = 1; i < l.order.size(); ++i)
    out.push_back(m.mark(l.order[i]) - m.mark(l.order[i - 1]));
  return out;
}

bool in_order_cone(const MarkedPoset& m) {
  bool ok = true;
  m.marked().for_each([&](int a) {
    (m.poset().up_set(a) & m.marked()).for_each([&](int b) {
      if (m.mark(a) > m.mark(b)) ok = false;
    });
  });
  return ok;
}

NaturalLabeling natural_labeling_for(const MarkedPoset& m) {
  if (!in_order_cone(m))
    raise(Errc::outside_order_cone, "marking is not order preserving on the marked subposet");
  InducedSubposet induced = m.poset().induced(m.marked());
  std::vector<int> topo_index(m.poset().size(), 0);
  {
    std::vector<int> order = induced.poset.topo_order();
    for (std::size_t k = 0; k < order.size(); ++k)
      topo_index[induced.parent[order[k]]] = static_cast<int>(k);
  }
  NaturalLabeling l;
  m.marked().for_each([&](int a) { l.order.push_back(a); });
  std::sort(l.order.begin(), l.order.end(), [&](int a, int b) {
    if (m.mark(a) != m.mark(b)) return m.mark(a) < m.mark(b);
    return topo_index[a] < topo_index[b];
  });
  return l;
}

namespace {

struct SearchPlan {
  std::vector<int> element;                // unmarked elements in assignment order
  std::vector<std::vector<int>> pred_pos;  // positions of assigned predecessors
  std::vector<long long> static_lo;        // max mark strictly below
  std::vector<long long> static_hi;        // min mark strictly above
};

SearchPlan make_plan(const MarkedPoset& m) {
  SearchPlan plan;
  const Poset& p = m.poset();
  for (int v : p.topo_order())
    if (!m.marked().contains(v)) plan.element.push_back(v);
  const int count = static_cast<int>(plan.element.size());
  plan.pred_pos.resize(count);
  plan.static_lo.assign(count, std::numeric_limits<long long>::min());
  plan.static_hi.assign(count, std::numeric_limits<long long>::max());
  for (int k = 0; k < count; ++k) {
    int v = plan.element[k];
    for (int j = 0; j < k; ++j)
      if (p.less(plan.element[j], v)) plan.pred_pos[k].push_back(j);
    (p.down_set(v) & m.marked()).for_each([&](int a) {
      plan.static_lo[k] = std::max(plan.static_lo[k], m.mark(a));
    });
    (p.up_set(v) & m.marked()).for_each([&](int a) {
      plan.static_hi[k] = std::min(plan.static_hi[k], m.mark(a));
    });
  }
  return plan;
}

}  // namespace

Int count_bruteforce(const MarkedPoset& m, std::uint64_t node_budget) {
  if (!in_order_cone(m)) return 0;
  const SearchPlan plan = make_plan(m);
  const int count = static_cast<int>(plan.element.size());
  if (count == 0) return 1;

  std::vector<long long> value(count);
  std::uint64_t nodes = 0;
  Int total = 0;
  unsigned long long leaves = 0;

  auto rec = [&](auto&& self, int k) -> void {
    long long lo = plan.static_lo[k];
    for (int j : plan.pred_pos[k]) lo = std::max(lo, value[j]);
    const long long hi = plan.static_hi[k];
    if (k == count - 1) {
      if (lo <= hi) leaves += static_cast<unsigned long long>(hi - lo + 1);
      if (++nodes > node_budget) raise(Errc::size_limit, "node budget exceeded");
      return;
    }
    for (long long v = lo; v <= hi; ++v) {
      if (++nodes > node_budget) raise(Errc::size_limit, "node budget exceeded");
      value[k] = v;
      self(self, k + 1);
    }
    if (leaves > (1ull << 62)) {
      total += static_cast<unsigned long>(leaves);
      leaves = 0;
    }
  };
  rec(rec, 0);
  total += static_cast<unsigned long>(leaves);
  return total;
}

void for_each_lattice_point(const MarkedPoset& m,
                            const std::function<void(const std::vector<long long>&)>& visit,
                            std::uint64_t node_budget) {
  if (!in_order_cone(m)) return;
  const SearchPlan plan = make_plan(m);
  const int count = static_cast<int>(plan.element.size());

  std::vector<long long> point(m.poset().size(), 0);
  m.marked().for_each([&](int a) { point[a] = m.mark(a); });
  if (count == 0) {
    visit(point);
    return;
  }
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, int k) -> void {
    long long lo = plan.static_lo[k];
    int v = plan.element[k];
    (m.poset().down_set(v) - m.marked()).for_each([&](int q) {
      if (q != v) lo = std::max(lo, point[q]);
    });
    for (long long x = lo; x <= plan.static_hi[k]; ++x) {
      if (++nodes > node_budget) raise(Errc::size_limit, "node budget exceeded");
      point[v] = x;
      if (k == count - 1)
        visit(point);
      else
        self(self, k + 1);
    }
  };
  rec(rec, 0);
}

namespace {

// Shared machinery for chain enumeration and the counting polynomial.
struct ChainContext {
  const MarkedPoset& m;
  const NaturalLabeling& l;
  std::vector<Subset> ideals;
  std::unordered_map<std::uint64_t, int> ideal_index;
  std::vector<Subset> forbidden_after;  // forbidden_after[i] = {a_j : j > i}

  ChainContext(const MarkedPoset& marked, const NaturalLabeling& labeling)
      : m(marked), l(labeling) {
    validate_labeling(marked, labeling);
    ideals = m.poset().ideals();
    for (std::size_t i = 0; i < ideals.size(); ++i)
      ideal_index.emplace(ideals[i].bits(), static_cast<int>(i));
    const int r = l.rank();
    forbidden_after.assign(r + 1, Subset{});
    for (int i = r - 1; i >= 0; --i) {
      forbidden_after[i] = forbidden_after[i + 1];
      forbidden_after[i].add(l.order[i + 1]);
    }
  }

  bool candidate(Subset ideal, Subset prev, int level) const {
    int a = l.order[level];
    return ideal.contains(a) && prev.subset_of(ideal) &&
           (ideal & forbidden_after[level]).empty();
  }
};

}  // namespace

std::vector<IdealChain> enumerate_chains(const MarkedPoset& m, const NaturalLabeling& l,
                                         std::size_t cap) {
  ChainContext ctx(m, l);
  const int r = l.rank();
  std::vector<IdealChain> out;
  std::vector<Subset> current;

  auto rec = [&](auto&& self, int level) -> void {
    if (level == r + 1) {
      if (!(current.back() == m.poset().all()))
        throw std::logic_error("chain does not end at the full ground set");
      if (out.size() >= cap) raise(Errc::size_limit, "chain count exceeds cap");
      out.push_back(IdealChain{current});
      return;
    }
    Subset prev = level == 0 ? Subset{} : current.back();
    for (Subset ideal : ctx.ideals) {
      if (!ctx.candidate(ideal, prev, level)) continue;
      current.push_back(ideal);
      self(self, level + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

MultiPoly product_formula_polynomial(const MarkedPoset& m, const NaturalLabeling& l) {
  ChainContext ctx(m, l);
  const int r = l.rank();

  std::unordered_map<std::uint64_t, UniPoly> omega_cache;
  auto factor_omega = [&](Subset factor) -> const UniPoly& {
    auto it = omega_cache.find(factor.bits());
    if (it == omega_cache.end())
      it = omega_cache.emplace(factor.bits(), omega(m.poset().induced(factor).poset)).first;
    return it->second;
  };

  // suffix[level][ideal index] = polynomial contribution of chains continuing
  // from that ideal; memoized bottom-up on demand.
  std::vector<std::vector<std::optional<MultiPoly>>> suffix(
      r + 1, std::vector<std::optional<MultiPoly>>(ctx.ideals.size()));
  auto rec = [&](auto&& self, int level, int prev_index) -> const MultiPoly& {
    if (suffix[level][prev_index]) return *suffix[level][prev_index];
    Subset prev = ctx.ideals[prev_index];
    MultiPoly acc(r);
    for (std::size_t j = 0; j < ctx.ideals.size(); ++j) {
      Subset ideal = ctx.ideals[j];
      if (!ctx.candidate(ideal, prev, level)) continue;
      Subset factor = ideal - (prev | m.poset().up_set(l.order[level]));
      MultiPoly term = embed(factor_omega(factor), level - 1, r);
      if (level < r) term = term * self(self, level + 1, static_cast<int>(j));
      acc = acc + term;
    }
    suffix[level][prev_index] = std::move(acc);
    return *suffix[level][prev_index];
  };

  MultiPoly total(r);
  for (std::size_t j = 0; j < ctx.ideals.size(); ++j) {
    Subset first = ctx.ideals[j];
    if (!ctx.candidate(first, Subset{}, 0)) continue;
    if (r == 0) {
      total = total + MultiPoly::constant(0, Rat(1));
      continue;
    }
    total = total + rec(rec, 1, static_cast<int>(j));
  }
  return total;
}

Int evaluate_marked(const MarkedPoset& m, const NaturalLabeling& l, const MultiPoly& f) {
  validate_labeling(m, l);
  std::vector<long long> gaps = labeling_gaps(m, l);
  for (long long g : gaps)
    if (g < 0) raise(Errc::region_violation, "marking values must be weakly increasing along the labeling");
  if (static_cast<int>(gaps.size()) != f.nvars())
    raise(Errc::var_mismatch, "polynomial nvars != labeling rank");
  Rat value = f.evaluate_at_integers(gaps);
  if (value.get_den() != 1)
    throw std::logic_error("counting polynomial produced a non-integer value");
  return value.get_num();
}

UniPoly ehrhart_polynomial(const MarkedPoset& m) {
  if (!in_order_cone(m))
    raise(Errc::outside_order_cone, "marking is not order preserving on the marked subposet");
  NaturalLabeling l = natural_labeling_for(m);
  MultiPoly f = product_formula_polynomial(m, l);
  UniPoly g = specialize_dilation(f, labeling_gaps(m, l));
  // the all-equal marking admits exactly one extension
  if (!(g(Rat(0)) == 1))
    throw std::logic_error("ehrhart polynomial has constant term != 1");
  return g;
}

namespace {

void check_extension(const MarkedPoset& m, const std::vector<long long>& point) {
  const Poset& p = m.poset();
  if (point.size() != static_cast<std::size_t>(p.size()))
    raise(Errc::not_an_extension, "point size != poset size");
  bool ok = true;
  m.marked().for_each([&](int a) {
    if (point[a] != m.mark(a)) ok = false;
  });
  if (!ok) raise(Errc::not_an_extension, "point disagrees with the marking");
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.less(a, b) && point[a] > point[b])
        raise(Errc::not_an_extension, "point is not order preserving");
}

}  // namespace

PointDecomposition decompose_point(const MarkedPoset& m, const NaturalLabeling& l,
                                   const std::vector<long long>& point) {
  validate_labeling(m, l);
  check_extension(m, point);
  const std::vector<long long> gaps = labeling_gaps(m, l);
  for (long long g : gaps)
    if (g < 1) raise(Errc::gap_not_positive, "the level-set bijection needs all gaps >= 1");

  const Poset& p = m.poset();
  const int r = l.rank();
  PointDecomposition d;
  for (int i = 0; i <= r; ++i) {
    long long cutoff = m.mark(l.order[i]);
    Subset level;
    for (int v = 0; v < p.size(); ++v)
      if (point[v] <= cutoff) level.add(v);
    assert(p.is_ideal(level));
    d.chain.ideals.push_back(level);
  }
  for (int i = 1; i <= r; ++i) {
    Subset factor = d.chain.ideals[i] - (d.chain.ideals[i - 1] | p.up_set(l.order[i]));
    std::map<int, long long> g;
    long long base = m.mark(l.order[i - 1]) + 1;
    factor.for_each([&](int v) {
      long long shifted = point[v] - base;
      assert(shifted >= 0 && shifted <= gaps[i - 1] - 1);
      g.emplace(v, shifted);
    });
    d.level_maps.push_back(std::move(g));
  }
  return d;
}

std::vector<long long> reconstruct_point(const MarkedPoset& m, const NaturalLabeling& l,
                                         const PointDecomposition& d) {
  validate_labeling(m, l);
  const Poset& p = m.poset();
  const int r = l.rank();
  if (d.chain.ideals.size() != static_cast<std::size_t>(r + 1) ||
      d.level_maps.size() != static_cast<std::size_t>(r))
    raise(Errc::invalid_argument, "decomposition shape does not match the labeling");

  std::vector<long long> point(p.size(), 0);
  d.chain.ideals[0].for_each([&](int v) { point[v] = m.mark(l.order[0]); });
  for (int i = 1; i <= r; ++i) {
    Subset fresh = d.chain.ideals[i] - d.chain.ideals[i - 1];
    long long base = m.mark(l.order[i - 1]) + 1;
    fresh.for_each([&](int v) {
      if (p.up_set(l.order[i]).contains(v)) {
        point[v] = m.mark(l.order[i]);
      } else {
        auto it = d.level_maps[i - 1].find(v);
        if (it == d.level_maps[i - 1].end())
          raise(Errc::invalid_argument, "level map is missing an element");
        point[v] = base + it->second;
      }
    });
  }
  return point;
}

}  // namespace mo
