#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "mo/error.hpp"
#include "mo/families.hpp"
#include "mo/instance_gen.hpp"
#include "mo/json_io.hpp"
#include "mo/marked.hpp"
#include "support/naive_oracles.hpp"

using namespace mo;

namespace {

bool raises(Errc code, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

GridSpec fig2() { return GridSpec::create(5, 3, {2, 2, 0, 3, 0}, {0, 1, 1, 2, 1}); }
GridSpec fig3() { return GridSpec::create(4, 2, {1, 0, 1, 2}, {0, 0, 1, 0}); }

Int formula_count(const MarkedPoset& m) {
  if (!in_order_cone(m)) return 0;
  NaturalLabeling l = natural_labeling_for(m);
  return evaluate_marked(m, l, product_formula_polynomial(m, l));
}

GridSpec random_spec(Rng& rng, long long max_entry) {
  int k = 1 + static_cast<int>(rng.below(3));
  int m = 1 + static_cast<int>(rng.below(2));
  std::vector<long long> y, z;
  for (int i = 0; i < k; ++i) {
    y.push_back(static_cast<long long>(rng.below(max_entry + 1)));
    z.push_back(static_cast<long long>(rng.below(max_entry + 1)));
  }
  return GridSpec::create(k, m, y, z);
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK(raises(Errc::invalid_argument, [] { GridSpec::create(0, 1, {}, {}); }));
  CHECK(raises(Errc::invalid_argument, [] { GridSpec::create(1, 0, {1}, {0}); }));
  CHECK(raises(Errc::invalid_argument, [] { GridSpec::create(2, 1, {1}, {0, 0}); }));
  CHECK(raises(Errc::invalid_argument, [] { GridSpec::create(1, 1, {-1}, {0}); }));
  CHECK(raises(Errc::invalid_argument, [] { FlagSpec::create({0, 0}, {2, 1}, 2, 1); }));
  CHECK(raises(Errc::invalid_argument, [] { FlagSpec::create({1, 0}, {2, 2}, 2, 1); }));
  CHECK(raises(Errc::invalid_argument, [] { FlagSpec::create({1}, {1}, 1, 1); }));
}

TEST_CASE("pitman-stanley fixture marks") {
  MarkedPoset ps = pitman_stanley_marked(fig2());
  CHECK(ps.poset().size() == 25);
  std::vector<long long> left, right;
  for (int i = 1; i <= 5; ++i) {
    left.push_back(ps.mark((i - 1) * 5 + 0));
    right.push_back(ps.mark((i - 1) * 5 + 4));
  }
  CHECK(left == std::vector<long long>{0, 1, 2, 4, 5});
  CHECK(right == std::vector<long long>{2, 4, 4, 7, 7});

  // grid poset: x_{1,1} below everything one step right and up
  CHECK(ps.poset().leq(0, 1));
  CHECK(ps.poset().leq(0, 5));
}

TEST_CASE("pitman-stanley counts") {
  MarkedPoset tiny = pitman_stanley_marked(GridSpec::create(1, 1, {1}, {0}));
  CHECK(tiny.free().count() == 1);
  CHECK(count_bruteforce(tiny) == 2);

  MarkedPoset ps = pitman_stanley_marked(fig2());
  Int count = count_bruteforce(ps);
  CHECK(count == 134375);
  CHECK(formula_count(ps) == count);
  auto shape = family_skew_shape(fig2());
  REQUIRE(shape.has_value());
  CHECK(count_plane_partitions(*shape, 4) == count);
}

TEST_CASE("pitman-stanley dilation fixture") {
  UniPoly g = ehrhart_polynomial(pitman_stanley_marked(fig2()));
  CHECK(coefficient_nonnegative(g).nonnegative);
  // frozen dilate counts, verified against the brute-force oracle separately
  CHECK(g(make_rat(1)) == make_rat(134375));
  CHECK(g(make_rat(2)) == make_rat(85848000));
  CHECK(g(make_rat(3)) == make_rat(7621231464LL));

  // nPS(y,z) = PS(ny,nz): the scaled instance recomputed from scratch
  GridSpec doubled = GridSpec::create(5, 3, {4, 4, 0, 6, 0}, {0, 2, 2, 4, 2});
  CHECK(formula_count(pitman_stanley_marked(doubled)) == make_int(85848000));
}

TEST_CASE("gelfand-tsetlin fixture") {
  MarkedPoset gt = gelfand_tsetlin_marked(fig3());
  CHECK(gt.poset().size() == 16);
  std::vector<long long> left, right;
  for (int i = 1; i <= 4; ++i) {
    left.push_back(gt.mark((i - 1) * 4 + 0));
    right.push_back(gt.mark((i - 1) * 4 + 3));
  }
  CHECK(left == std::vector<long long>{0, 0, 1, 1});
  CHECK(right == std::vector<long long>{1, 1, 2, 4});

  // covers (i,j) < (i,j+1) < (i+1,j)
  CHECK(gt.poset().leq(0, 1));       // (1,0) < (1,1)
  CHECK(gt.poset().leq(1, 4));       // (1,1) < (2,0)
  CHECK_FALSE(gt.poset().leq(4, 2));  // (2,0) not below (1,2)

  Int count = count_bruteforce(gt);
  CHECK(count == 45);
  CHECK(formula_count(gt) == count);
  auto shape = family_skew_shape(fig3());
  REQUIRE(shape.has_value());
  CHECK(shape->lambda == std::vector<long long>{4, 2, 1, 1});
  CHECK(shape->mu == std::vector<long long>{1, 1, 0, 0});
  CHECK(count_ssyt(*shape, 3) == count);

  UniPoly g = ehrhart_polynomial(gt);
  CHECK(coefficient_nonnegative(g).nonnegative);
  for (long long n = 1; n <= 3; ++n) {
    GridSpec scaled = GridSpec::create(4, 2, {n * 1, n * 0, n * 1, n * 2},
                                       {n * 0, n * 0, n * 1, n * 0});
    CHECK(g(make_rat(n)) == Rat(count_bruteforce(gelfand_tsetlin_marked(scaled))));
  }
  CHECK(g(make_rat(2)) == make_rat(360));
  CHECK(g(make_rat(3)) == make_rat(1540));
}

TEST_CASE("gelfand-tsetlin tiny") {
  MarkedPoset gt = gelfand_tsetlin_marked(GridSpec::create(1, 1, {2}, {0}));
  CHECK(gt.free().count() == 1);
  CHECK(count_bruteforce(gt) == 3);
}

TEST_CASE("tableau counters") {
  CHECK(count_plane_partitions(SkewShape::create({1}, {}), 4) == 4);
  CHECK(count_plane_partitions(SkewShape::create({2}, {}), 2) == 3);
  CHECK(count_ssyt(SkewShape::create({1, 1}, {}), 2) == 1);
  CHECK(count_ssyt(SkewShape::create({2, 1}, {}), 3) == 8);
  CHECK(raises(Errc::invalid_argument, [] { count_ssyt(SkewShape::create({1}, {}), 0); }));
  CHECK(raises(Errc::size_limit, [] { count_ssyt(SkewShape::create({8, 4}, {}), 9, 50); }));

  // straight shape (2,1) with entries <= 3 matches GT_2^2(y=(1,1), z=(0,0))
  MarkedPoset gt = gelfand_tsetlin_marked(GridSpec::create(2, 2, {1, 1}, {0, 0}));
  CHECK(count_bruteforce(gt) == 8);
}

TEST_CASE("three-way equality on random pitman-stanley specs") {
  Rng rng(9001);
  for (int trial = 0; trial < 20; ++trial) {
    GridSpec spec = random_spec(rng, 2);
    MarkedPoset m = pitman_stanley_marked(spec);
    Int count = count_bruteforce(m);
    CHECK(count == formula_count(m));
    if (auto shape = family_skew_shape(spec)) {
      CHECK(count == count_plane_partitions(*shape, spec.m + 1));
    } else {
      CHECK(count == 0);
      CHECK_FALSE(in_order_cone(m));
    }
  }
}

TEST_CASE("three-way equality on random gelfand-tsetlin specs") {
  Rng rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    GridSpec spec = random_spec(rng, 2);
    MarkedPoset m = gelfand_tsetlin_marked(spec);
    Int count = count_bruteforce(m);
    CHECK(count == formula_count(m));
    if (auto shape = family_skew_shape(spec)) {
      CHECK(count == count_ssyt(*shape, spec.m + 1));
    } else {
      CHECK(count == 0);
    }
  }
}

TEST_CASE("plane partition correspondence is a bijection") {
  Rng rng(818);
  for (int trial = 0; trial < 10; ++trial) {
    GridSpec spec = random_spec(rng, 2);
    auto shape = family_skew_shape(spec);
    if (!shape) continue;
    MarkedPoset m = pitman_stanley_marked(spec);
    std::set<std::vector<std::vector<long long>>> images;
    long long points = 0;
    for_each_lattice_point(m, [&](const std::vector<long long>& point) {
      ++points;
      auto filling = ps_point_to_plane_partition(spec, point);
      CHECK(testing::is_plane_partition(*shape, filling, spec.m + 1));
      images.insert(filling);
    });
    CHECK(static_cast<long long>(images.size()) == points);
    CHECK(make_int(points) == count_plane_partitions(*shape, spec.m + 1));
  }
}

TEST_CASE("flagged faces") {
  // full flags change nothing
  GridSpec spec = fig3();
  FlagSpec full = FlagSpec::create({0, 0, 0, 0}, {3, 3, 3, 3}, spec.k, spec.m);
  MarkedPoset face = flagged_face_marked(spec, full);
  MarkedPoset gt = gelfand_tsetlin_marked(spec);
  CHECK(face.poset().size() == gt.poset().size());
  CHECK(count_bruteforce(face) == count_bruteforce(gt));

  // a row fully collapsed onto its left mark contributes no free variables
  GridSpec single = GridSpec::create(1, 2, {2}, {0});
  MarkedPoset collapsed = flagged_face_marked(single, FlagSpec::create({2}, {3}, 1, 2));
  CHECK(collapsed.free().count() == 0);
  CHECK(count_bruteforce(collapsed) == 1);
  CHECK(testing::count_flagged_ssyt(*family_skew_shape(single), FlagSpec{{2}, {3}}, 1) == 1);

  // collapsing may also pinch the face empty; both routes must agree on that
  GridSpec pinched = GridSpec::create(2, 2, {2, 1}, {0, 1});
  FlagSpec collapse_all = FlagSpec::create({2, 2}, {3, 3}, 2, 2);
  CHECK(count_bruteforce(flagged_face_marked(pinched, collapse_all)) ==
        make_int(testing::count_flagged_ssyt(*family_skew_shape(pinched), collapse_all, 2)));

  // a nontrivial flag matches the flagged-SSYT brute force
  GridSpec gspec = GridSpec::create(3, 2, {2, 1, 1}, {0, 0, 1});
  FlagSpec flags = FlagSpec::create({0, 0, 1}, {2, 2, 3}, gspec.k, gspec.m);
  auto shape = family_skew_shape(gspec);
  REQUIRE(shape.has_value());
  CHECK(count_bruteforce(flagged_face_marked(gspec, flags)) ==
        make_int(testing::count_flagged_ssyt(*shape, flags, gspec.k)));

  // merging distinct marks is rejected (bypasses FlagSpec validation)
  CHECK(raises(Errc::contradictory_marks, [] {
    flagged_face_marked(GridSpec::create(1, 1, {2}, {0}), FlagSpec{{2}, {1}});
  }));
}

TEST_CASE("flagged faces with full flags reproduce random counts") {
  Rng rng(616);
  for (int trial = 0; trial < 10; ++trial) {
    GridSpec spec = random_spec(rng, 2);
    FlagSpec full = FlagSpec::create(std::vector<long long>(spec.k, 0),
                                     std::vector<long long>(spec.k, spec.m + 1), spec.k, spec.m);
    CHECK(count_bruteforce(flagged_face_marked(spec, full)) ==
          count_bruteforce(gelfand_tsetlin_marked(spec)));
  }
}

TEST_CASE("ps polynomial in y") {
  MultiPoly f = ps_polynomial_in_y(1, 1);
  CHECK(to_string(f, "y") == "y1 + 1");

  for (auto [k, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    MultiPoly p = ps_polynomial_in_y(k, m);
    std::vector<long long> ones(k, 1);
    GridSpec spec = GridSpec::create(k, m, ones, std::vector<long long>(k, 0));
    CHECK(p.evaluate_at_integers(ones) ==
          Rat(count_bruteforce(pitman_stanley_marked(spec))));
  }

  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 3; ++m)
      CHECK(coefficient_nonnegative(ps_polynomial_in_y(k, m)).nonnegative);
}

TEST_CASE("json round trips") {
  GridSpec spec = fig2();
  FamilyInstance inst{FamilyInstance::Kind::ps, spec, std::nullopt};
  FamilyInstance back = family_from_json(family_to_json(inst));
  CHECK(back.kind == inst.kind);
  CHECK(back.spec.y == spec.y);
  CHECK(back.spec.z == spec.z);

  MarkedPoset gt = gelfand_tsetlin_marked(fig3());
  MarkedPoset round = marked_from_json(marked_to_json(gt));
  CHECK(round.poset().covers() == gt.poset().covers());
  CHECK(round.marked() == gt.marked());
  CHECK(count_bruteforce(round) == count_bruteforce(gt));

  SkewShape shape = SkewShape::create({6, 5, 3, 3}, {2, 1, 1});
  SkewShape shape_back = skew_from_json(skew_to_json(shape));
  CHECK(shape_back.lambda == shape.lambda);
  CHECK(shape_back.mu == shape.mu);

  Poset p = skew_shape_poset(shape);
  Poset p_back = poset_from_json(poset_to_json(p));
  CHECK(p_back.covers() == p.covers());
  CHECK(p_back.labels() == p.labels());

  CHECK(raises(Errc::parse, [] { poset_from_json("{not json"); }));
  CHECK(raises(Errc::parse, [] { marked_from_json(R"({"elements":["a"],"covers":[]})"); }));
  CHECK(raises(Errc::parse, [] { family_from_json(R"({"family":"nope","k":1,"m":1,"y":[0],"z":[0]})"); }));

  // multivariate polynomial JSON: graded-lex descending, exact num/den strings
  MultiPoly poly(2);
  poly.add_term({1, 1}, make_rat(1, 2));
  poly.add_term({0, 0}, Rat(1));
  CHECK(multipoly_to_json(poly) ==
        R"({"nvars":2,"terms":[{"den":"2","exp":[1,1],"num":"1"},{"den":"1","exp":[0,0],"num":"1"}]})");

  // flagged spec documents round trip too
  FamilyInstance flagged{FamilyInstance::Kind::gt_flagged, fig3(),
                         FlagSpec::create({0, 0, 1, 1}, {2, 2, 3, 3}, 4, 2)};
  FamilyInstance fb = family_from_json(family_to_json(flagged));
  REQUIRE(fb.flags.has_value());
  CHECK(fb.flags->a == flagged.flags->a);
  CHECK(fb.flags->b == flagged.flags->b);
  CHECK(count_bruteforce(fb.to_marked()) == count_bruteforce(flagged.to_marked()));
}
