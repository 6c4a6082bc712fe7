#include "mo/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mo/error.hpp"

namespace mo {

GridSpec GridSpec::create(int k, int m, std::vector<long long> y, std::vector<long long> z) {
  if (k < 1 || m < 1) raise(Errc::invalid_argument, "family spec needs k >= 1 and m >= 1");
  if (y.size() != static_cast<std::size_t>(k) || z.size() != static_cast<std::size_t>(k))
    raise(Errc::invalid_argument, "y and z must have length k");
  for (long long v : y)
    if (v < 0) raise(Errc::invalid_argument, "y entries must be nonnegative");
  for (long long v : z)
    if (v < 0) raise(Errc::invalid_argument, "z entries must be nonnegative");
  return GridSpec{k, m, std::move(y), std::move(z)};
}

std::vector<long long> GridSpec::y_prefix() const {
  std::vector<long long> out(y.size());
  std::partial_sum(y.begin(), y.end(), out.begin());
  return out;
}

std::vector<long long> GridSpec::z_prefix() const {
  std::vector<long long> out(z.size());
  std::partial_sum(z.begin(), z.end(), out.begin());
  return out;
}

FlagSpec FlagSpec::create(std::vector<long long> a, std::vector<long long> b, int k, int m) {
  if (a.size() != static_cast<std::size_t>(k) || b.size() != static_cast<std::size_t>(k))
    raise(Errc::invalid_argument, "flags must have length k");
  for (int i = 0; i < k; ++i) {
    if (!(0 <= a[i] && a[i] < b[i] && b[i] <= m + 1))
      raise(Errc::invalid_argument, "flags need 0 <= a_i < b_i <= m+1");
    if (i > 0 && (a[i] < a[i - 1] || b[i] < b[i - 1]))
      raise(Errc::invalid_argument, "flags must be weakly increasing");
  }
  return FlagSpec{std::move(a), std::move(b)};
}

namespace {

// Shared id/label scheme for the grid families: (i, j), i in [1,k],
// j in [0,m+1], row-major.
int cell_id(int i, int j, int m) { return (i - 1) * (m + 2) + j; }

std::vector<std::string> cell_labels(int k, int m) {
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j <= m + 1; ++j)
      labels.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  return labels;
}

std::map<int, long long> boundary_marks(const GridSpec& spec) {
  std::map<int, long long> marks;
  const auto yp = spec.y_prefix();
  const auto zp = spec.z_prefix();
  for (int i = 1; i <= spec.k; ++i) {
    marks[cell_id(i, 0, spec.m)] = zp[i - 1];
    marks[cell_id(i, spec.m + 1, spec.m)] = yp[i - 1];
  }
  return marks;
}

}  // namespace

MarkedPoset pitman_stanley_marked(const PsSpec& spec) {
  const int k = spec.k, m = spec.m;
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j <= m + 1; ++j) {
      if (j + 1 <= m + 1) covers.emplace_back(cell_id(i, j, m), cell_id(i, j + 1, m));
      if (i + 1 <= k) covers.emplace_back(cell_id(i, j, m), cell_id(i + 1, j, m));
    }
  Poset p = Poset::from_covers(cell_labels(k, m), covers);
  return MarkedPoset::create(std::move(p), boundary_marks(spec));
}

MarkedPoset gelfand_tsetlin_marked(const GtSpec& spec) {
  const int k = spec.k, m = spec.m;
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j <= m; ++j) {
      covers.emplace_back(cell_id(i, j, m), cell_id(i, j + 1, m));
      if (i + 1 <= k) covers.emplace_back(cell_id(i, j + 1, m), cell_id(i + 1, j, m));
    }
  Poset p = Poset::from_covers(cell_labels(k, m), covers);
  return MarkedPoset::create(std::move(p), boundary_marks(spec));
}

MarkedPoset flagged_face_marked(const GtSpec& spec, const FlagSpec& flags) {
  const int k = spec.k, m = spec.m;
  const int n = k * (m + 2);

  // union-find over the forced equalities x_{i,j} = x_{i,j-1}
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= m + 1; ++j)
      if (j < flags.a[i - 1] + 1 || j > flags.b[i - 1]) {
        int x = find(cell_id(i, j, m)), y = find(cell_id(i, j - 1, m));
        if (x != y) root[x] = y;
      }

  // classes keep the smallest member's label; marks must agree within a class
  std::vector<int> class_of(n);
  std::vector<int> representative;
  std::map<int, int> index_of_root;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    auto [it, inserted] = index_of_root.emplace(r, static_cast<int>(representative.size()));
    if (inserted) representative.push_back(v);
    class_of[v] = it->second;
  }

  const auto marks = boundary_marks(spec);
  std::map<int, long long> class_marks;
  for (auto [v, value] : marks) {
    int c = class_of[v];
    auto [it, inserted] = class_marks.emplace(c, value);
    if (!inserted && it->second != value)
      raise(Errc::contradictory_marks, "flag equalities merge two different mark values");
  }

  MarkedPoset unflagged = gelfand_tsetlin_marked(spec);
  std::vector<std::string> labels;
  for (int v : representative) labels.push_back(unflagged.poset().label(v));
  std::vector<std::pair<int, int>> covers;
  for (auto [lo, hi] : unflagged.poset().covers())
    if (class_of[lo] != class_of[hi]) covers.emplace_back(class_of[lo], class_of[hi]);

  try {
    Poset quotient = Poset::from_covers(std::move(labels), covers);
    return MarkedPoset::create(std::move(quotient), class_marks);
  } catch (const Error& e) {
    if (e.code() == Errc::cycle_detected)
      raise(Errc::quotient_cycle, "flag equalities create a cycle between classes");
    throw;
  }
}

namespace {

struct ShapeCells {
  // cells (row, col) in row-major order, 1-based rows as stored in the shape
  std::vector<std::pair<long long, long long>> cells;
};

ShapeCells shape_cells(const SkewShape& shape) {
  ShapeCells out;
  for (std::size_t r = 0; r < shape.lambda.size(); ++r)
    for (long long j = shape.mu_at(r) + 1; j <= shape.lambda[r]; ++j)
      out.cells.push_back({static_cast<long long>(r + 1), j});
  return out;
}

Int count_fillings(const SkewShape& shape, long long max_entry, std::uint64_t node_budget,
                   bool decreasing) {
  if (max_entry < 1) raise(Errc::invalid_argument, "max_entry must be >= 1");
  ShapeCells sc = shape_cells(shape);
  const int count = static_cast<int>(sc.cells.size());
  if (count == 0) return 1;

  // index of the left and upper neighbor per cell, -1 when absent
  std::vector<int> left(count, -1), up(count, -1);
  for (int t = 0; t < count; ++t) {
    auto [i, j] = sc.cells[t];
    for (int s = 0; s < t; ++s) {
      if (sc.cells[s] == std::make_pair(i, j - 1)) left[t] = s;
      if (sc.cells[s] == std::make_pair(i - 1, j)) up[t] = s;
    }
  }

  std::vector<long long> value(count);
  std::uint64_t nodes = 0;
  Int total = 0;
  auto rec = [&](auto&& self, int t) -> void {
    long long lo = 1, hi = max_entry;
    if (decreasing) {
      // plane partition: rows and columns weakly decreasing
      if (left[t] >= 0) hi = std::min(hi, value[left[t]]);
      if (up[t] >= 0) hi = std::min(hi, value[up[t]]);
    } else {
      // SSYT: rows weakly increasing, columns strictly increasing
      if (left[t] >= 0) lo = std::max(lo, value[left[t]]);
      if (up[t] >= 0) lo = std::max(lo, value[up[t]] + 1);
    }
    for (long long v = lo; v <= hi; ++v) {
      if (++nodes > node_budget) raise(Errc::size_limit, "node budget exceeded");
      if (t == count - 1) {
        ++total;
      } else {
        value[t] = v;
        self(self, t + 1);
      }
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

Int count_plane_partitions(const SkewShape& shape, long long max_entry,
                           std::uint64_t node_budget) {
  return count_fillings(shape, max_entry, node_budget, /*decreasing=*/true);
}

Int count_ssyt(const SkewShape& shape, long long max_entry, std::uint64_t node_budget) {
  return count_fillings(shape, max_entry, node_budget, /*decreasing=*/false);
}

std::optional<SkewShape> family_skew_shape(const GridSpec& spec) {
  const auto yp = spec.y_prefix();
  const auto zp = spec.z_prefix();
  for (int i = 0; i < spec.k; ++i)
    if (zp[i] > yp[i]) return std::nullopt;
  std::vector<long long> lambda(yp.rbegin(), yp.rend());
  std::vector<long long> mu(zp.rbegin(), zp.rend());
  return SkewShape::create(std::move(lambda), std::move(mu));
}

std::vector<std::vector<long long>> ps_point_to_plane_partition(
    const PsSpec& spec, const std::vector<long long>& point) {
  const auto yp = spec.y_prefix();
  const auto zp = spec.z_prefix();
  std::vector<std::vector<long long>> rows;
  for (int r = 1; r <= spec.k; ++r) {
    const int i = spec.k + 1 - r;  // shape row r holds the data of grid row i
    const long long len = yp[i - 1] - zp[i - 1];
    // counts[j] = number of entries <= j in the row
    std::vector<long long> counts(spec.m + 2, 0);
    for (int j = 1; j <= spec.m; ++j) counts[j] = point[cell_id(i, j, spec.m)] - zp[i - 1];
    counts[spec.m + 1] = len;
    std::vector<long long> row;
    for (long long e = spec.m + 1; e >= 1; --e)
      for (long long c = 0; c < counts[e] - counts[e - 1]; ++c) row.push_back(e);
    rows.push_back(std::move(row));
  }
  return rows;
}

MultiPoly ps_polynomial_in_y(int k, int m) {
  GridSpec spec = GridSpec::create(k, m, std::vector<long long>(k, 0),
                                   std::vector<long long>(k, 0));
  MarkedPoset marked = pitman_stanley_marked(spec);
  // structural labeling: the z column bottom-up, then the y column bottom-up;
  // natural because z~_i <= y~_j holds in the poset order exactly when i <= j
  NaturalLabeling l;
  for (int i = 1; i <= k; ++i) l.order.push_back(cell_id(i, 0, m));
  for (int i = 1; i <= k; ++i) l.order.push_back(cell_id(i, m + 1, m));
  MultiPoly f = product_formula_polynomial(marked, l);

  // gaps t_1..t_{k-1} are differences inside the all-zero z block; kill them
  // and rename the remaining gaps (y~_1, y_2, ..., y_k) to y_1..y_k
  MultiPoly out(k);
  for (const auto& [exp, coeff] : f.terms()) {
    bool zero_block = true;
    for (int v = 0; v < k - 1; ++v)
      if (exp[v] > 0) zero_block = false;
    if (!zero_block) continue;
    std::vector<int> reduced(exp.begin() + (k - 1), exp.end());
    out.add_term(reduced, coeff);
  }
  return out;
}

}  // namespace mo
