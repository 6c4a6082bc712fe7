#include "mo/order_poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "mo/error.hpp"

namespace mo {

Int count_maps_bruteforce(const Poset& p, long long n, std::uint64_t node_budget) {
  if (n < 0) raise(Errc::invalid_argument, "count_maps_bruteforce: n < 0");
  if (p.empty()) return 1;
  if (n == 0) return 0;

  const std::vector<int> order = p.topo_order();
  const int count = p.size();
  // preds[k] = positions (in assignment order) of elements strictly below order[k]
  std::vector<std::vector<int>> preds(count);
  for (int k = 0; k < count; ++k)
    for (int j = 0; j < k; ++j)
      if (p.less(order[j], order[k])) preds[k].push_back(j);

  std::vector<long long> value(count);
  std::uint64_t nodes = 0;
  Int total = 0;
  unsigned long long leaves = 0;  // flushed into total periodically

  auto rec = [&](auto&& self, int k) -> void {
    long long lo = 1;
    for (int j : preds[k]) lo = std::max(lo, value[j]);
    if (k == count - 1) {
      // every value in [lo, n] completes a map
      if (lo <= n) leaves += static_cast<unsigned long long>(n - lo + 1);
      if (++nodes > node_budget) raise(Errc::size_limit, "node budget exceeded");
      return;
    }
    for (long long v = lo; v <= n; ++v) {
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

UniPoly omega(const Poset& p, std::size_t ideal_cap) {
  if (p.empty()) return UniPoly::constant(Rat(1));

  const std::vector<Subset> ideals = p.ideals(ideal_cap);
  const std::size_t m = ideals.size();
  if (m > (std::size_t{1} << 17))
    raise(Errc::size_limit, "ideal lattice too large for the multichain engine");
  // sub[i] = indices of ideals contained in ideals[i] (including itself)
  std::vector<std::vector<std::uint32_t>> sub(m);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (ideals[j].subset_of(ideals[i])) {
        if (++pairs > (std::size_t{1} << 26))
          raise(Errc::size_limit, "ideal lattice too large for the multichain engine");
        sub[i].push_back(static_cast<std::uint32_t>(j));
      }

  // ideals are sorted by popcount, so the full set is last
  const std::size_t full = m - 1;
  std::vector<Int> v(m, 1), next(m);
  std::vector<std::pair<Int, Rat>> points;
  points.reserve(p.size() + 1);
  points.push_back({Int(1), Rat(1)});  // one multichain of length 1 ends at P
  for (int n = 2; n <= p.size() + 1; ++n) {
    for (std::size_t i = 0; i < m; ++i) {
      Int acc = 0;
      for (std::uint32_t j : sub[i]) acc += v[j];
      next[i] = acc;
    }
    v.swap(next);
    points.push_back({Int(n), Rat(v[full])});
  }
  return interpolate(points);
}

UniPoly binomial_poly(long long shift, int k) {
  // binom(n + shift, k) = (n+shift)(n+shift-1)...(n+shift-k+1) / k!
  UniPoly acc = UniPoly::constant(Rat(1));
  Rat kfact(1);
  for (int j = 0; j < k; ++j) {
    acc = acc * UniPoly({make_rat(shift - j), Rat(1)});
    kfact *= Rat(j + 1);
  }
  return acc * UniPoly::constant(1 / kfact);
}

UniPoly omega_via_descents(const Poset& p, const std::vector<int>& natural_labeling) {
  const int count = p.size();
  if (static_cast<int>(natural_labeling.size()) != count)
    raise(Errc::not_natural_labeling, "labeling must list every element once");
  std::vector<int> pos(count, -1);
  for (int i = 0; i < count; ++i) {
    int e = natural_labeling[i];
    if (e < 0 || e >= count || pos[e] != -1)
      raise(Errc::not_natural_labeling, "labeling must list every element once");
    pos[e] = i;
  }
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < i; ++j)
      if (p.less(natural_labeling[i], natural_labeling[j]))
        raise(Errc::not_natural_labeling, "labeling is not natural");

  if (p.empty()) return UniPoly::constant(Rat(1));

  UniPoly acc;
  for (const std::vector<int>& ext : p.linear_extensions()) {
    int descents = 0;
    for (int i = 0; i + 1 < count; ++i)
      if (pos[ext[i + 1]] < pos[ext[i]]) ++descents;
    acc = acc + binomial_poly(count - 1 - descents, count);
  }
  return acc;
}

}  // namespace mo
