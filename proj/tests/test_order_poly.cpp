#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "mo/error.hpp"
#include "mo/instance_gen.hpp"
#include "mo/order_poly.hpp"
#include "mo/polynomial.hpp"
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

std::vector<int> identity_labeling(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

TEST_CASE("brute force map counts") {
  CHECK(count_maps_bruteforce(chain(3), 2) == 4);
  CHECK(count_maps_bruteforce(antichain(2), 3) == 9);

  // fixed by this oracle, cross-checked against the polynomial engine below
  Poset skew = skew_shape_poset(SkewShape::create({2, 2}, {1}));
  CHECK(count_maps_bruteforce(skew, 3) == 14);
  CHECK(omega(skew)(make_rat(3)) == Rat(14));

  CHECK(count_maps_bruteforce(chain(0), 0) == 1);
  CHECK(count_maps_bruteforce(chain(0), 5) == 1);
  CHECK(count_maps_bruteforce(chain(2), 0) == 0);
  CHECK(raises(Errc::size_limit, [] { count_maps_bruteforce(antichain(8), 9, 100); }));
}

TEST_CASE("omega closed forms") {
  for (int k = 0; k <= 6; ++k) {
    CHECK(omega(chain(k)) == binomial_poly(k - 1, k));
    UniPoly power = UniPoly::constant(Rat(1));
    for (int i = 0; i < k; ++i) power = power * UniPoly::variable();
    CHECK(omega(antichain(k)) == power);
  }
  CHECK(omega(chain(0)) == UniPoly::constant(Rat(1)));
}

TEST_CASE("omega matches brute force on the grid") {
  UniPoly g = omega(grid(2, 2));
  for (long long n = 1; n <= 6; ++n)
    CHECK(g(make_rat(n)) == Rat(count_maps_bruteforce(grid(2, 2), n)));
}

TEST_CASE("descent engine") {
  for (int k = 1; k <= 6; ++k)
    CHECK(omega_via_descents(chain(k), identity_labeling(k)) == omega(chain(k)));

  // antichain(2): one extension with no descent, one with a descent
  UniPoly square = UniPoly::variable() * UniPoly::variable();
  CHECK(omega_via_descents(antichain(2), identity_labeling(2)) == square);

  CHECK(omega_via_descents(grid(2, 2), identity_labeling(4)) == omega(grid(2, 2)));

  CHECK(raises(Errc::not_natural_labeling,
               [] { omega_via_descents(chain(2), {1, 0}); }));
  CHECK(raises(Errc::not_natural_labeling, [] { omega_via_descents(chain(2), {0, 0}); }));
  CHECK(raises(Errc::size_limit,
               [] { omega_via_descents(antichain(13), identity_labeling(13)); }));
}

TEST_CASE("order polynomial properties on random posets") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Poset p = random_poset(rng, 7);
    UniPoly f = omega(p);

    CHECK(f(make_rat(1)) == Rat(1));
    CHECK(f(make_rat(2)) == make_rat(static_cast<long long>(p.ideals().size())));
    if (!p.empty()) CHECK(f(make_rat(0)) == Rat(0));
    CHECK(f.degree() == p.size());

    auto extensions = p.linear_extensions();
    Rat factorial(1);
    for (int i = 2; i <= p.size(); ++i) factorial *= Rat(i);
    CHECK(f.coeff(p.size()) == make_rat(static_cast<long long>(extensions.size())) / factorial);

    UniPoly d = omega_via_descents(p, identity_labeling(p.size()));
    CHECK(d == f);
    for (long long n = 1; n <= 5; ++n)
      CHECK(f(make_rat(n)) == Rat(count_maps_bruteforce(p, n)));
  }
}

TEST_CASE("skew shape order polynomials have nonnegative coefficients") {
  Rng rng(314);
  for (int trial = 0; trial < 15; ++trial) {
    SkewShape shape = random_skew_shape(rng, 10);
    CHECK(coefficient_nonnegative(omega(skew_shape_poset(shape))).nonnegative);
  }
}

TEST_CASE("non-skew posets can have negative coefficients") {
  // one minimum below a 5-antichain: omega(n) = sum of j^5 for j=1..n, whose
  // n^2 coefficient is -1/12
  std::vector<std::string> labels{"r"};
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= 5; ++i) {
    labels.push_back("p" + std::to_string(i));
    covers.push_back({0, i});
  }
  UniPoly f = omega(Poset::from_covers(labels, covers));
  for (long long n = 1; n <= 6; ++n) {
    long long sum = 0;
    for (long long j = 1; j <= n; ++j) sum += j * j * j * j * j;
    CHECK(f(make_rat(n)) == make_rat(sum));
  }
  auto report = coefficient_nonnegative(f);
  CHECK_FALSE(report.nonnegative);
  REQUIRE(report.offenders.size() == 1);
  CHECK(report.offenders[0].first == std::vector<int>{2});
  CHECK(report.offenders[0].second == make_rat(-1, 12));
}

TEST_CASE("twenty-cell staircase shape") {
  Poset p = skew_shape_poset(SkewShape::create({5, 5, 4, 3, 2, 1}, {}));
  REQUIRE(p.size() == 20);
  UniPoly f = omega(p);
  CHECK(f.degree() == 20);
  CHECK(f(make_rat(1)) == Rat(1));
  CHECK(f(make_rat(2)) == make_rat(static_cast<long long>(p.ideals().size())));
  CHECK(f(make_rat(3)) == Rat(count_maps_bruteforce(p, 3)));
  CHECK(coefficient_nonnegative(f).nonnegative);
}
