#include "doctest.h"

#include "coble/dualscan.hpp"
#include "oracle.hpp"

using namespace coble;

namespace {

FPoly var(const FieldPtr& f, int n, int i) { return FPoly::variable(f, n, i); }

FPoly conic(const FieldPtr& f, int a, int b, int c) {
  auto x = var(f, 3, 0), y = var(f, 3, 1), z = var(f, 3, 2);
  return (x * x).scale(f->from_int(a)) + (y * y).scale(f->from_int(b)) + (z * z).scale(f->from_int(c));
}

}  // namespace

TEST_CASE("point sampling") {
  auto f = FiniteField::prime(31);
  auto F = conic(f, 1, 1, 1);
  auto hs = sample_points(F, 10, 1);
  REQUIRE(hs.pairs.size() == 10);
  std::set<Point> seen;
  for (auto& [p, g] : hs.pairs) {
    CHECK(F.evaluate(p) == 0);
    CHECK(seen.insert(p).second);
  }
  auto x = var(f, 3, 0);
  CHECK_THROWS_AS(sample_points(x * x, 5, 1), SamplingError);
  CHECK_THROWS_AS(sample_points(FPoly(f, 3), 5, 1), SamplingError);
}

TEST_CASE("sampling the cubic at p = 10009") {
  auto f = FiniteField::prime(10009);
  auto G = build_cubic(CobleParams<FiniteField>::from_ints(f, {4, -15, 7, 6, -3}));
  auto hs = sample_points(G, 3200, 1);
  REQUIRE(hs.pairs.size() == 3200);
  auto grad = G.gradient();
  std::set<Point> seen;
  size_t smooth = 0;
  for (auto& [p, g] : hs.pairs) {
    CHECK(G.evaluate(p) == 0);
    seen.insert(p);
    bool nz = false;
    for (auto& d : grad) nz = nz || d.evaluate(p) != 0;
    smooth += nz;
  }
  CHECK(seen.size() == 3200);
  CHECK(smooth == 3200);
}

TEST_CASE("plane conic duals") {
  auto f = FiniteField::prime(10009);
  DualOptions o;
  o.d_max = 3;
  o.heldout = 50;
  auto r = dual_interpolate(conic(f, 1, 1, 1), o);
  REQUIRE(r.found);
  CHECK(r.degree == 2);
  CHECK(r.verified);
  CHECK(r.nullity[1] == 0);
  CHECK(r.dual.proportional(conic(f, 1, 1, 1)));
  auto r2 = dual_interpolate(conic(f, 1, 2, 1), o);
  REQUIRE(r2.found);
  CHECK(r2.dual.proportional(conic(f, 2, 1, 2)));
}

TEST_CASE("interpolation runs out of points over a tiny field") {
  // a conic over F_31 has 32 points, fewer than the held-out set
  DualOptions o;
  o.d_max = 3;
  o.heldout = 50;
  CHECK_THROWS_AS(dual_interpolate(conic(FiniteField::prime(31), 1, 1, 1), o), SamplingError);
}

TEST_CASE("Fermat plane cubic has a sextic dual") {
  auto f = FiniteField::prime(10009);
  auto x = var(f, 3, 0), y = var(f, 3, 1), z = var(f, 3, 2);
  DualOptions o;
  o.heldout = 100;
  auto r = dual_interpolate(x.pow(3) + y.pow(3) + z.pow(3), o);
  REQUIRE(r.found);
  CHECK(r.degree == 6);
  CHECK(r.nullity[5] == 0);
  CHECK(r.verified);
  // the dual of x^3+y^3+z^3 is the classical sextic: check against the
  // elimination-free description u^6+v^6+w^6 - 2(u^3v^3+v^3w^3+w^3u^3)
  auto u = x, v = y, w = z;
  auto known = u.pow(6) + v.pow(6) + w.pow(6) -
               (u.pow(3) * v.pow(3) + v.pow(3) * w.pow(3) + w.pow(3) * u.pow(3)).scale(2);
  CHECK(r.dual.proportional(known));
}

TEST_CASE("biduality on quadrics") {
  auto f = FiniteField::prime(10009);
  auto b = biduality_check(conic(f, 1, 3, 5), 3, 2);
  CHECK(b.proportional);
  auto q = var(f, 4, 0).pow(2) + var(f, 4, 1).pow(2).scale(2) + var(f, 4, 2).pow(2).scale(3) +
           var(f, 4, 3).pow(2).scale(5);
  CHECK(biduality_check(q, 3, 3).proportional);
}

TEST_CASE("Gauss classes of line arrangements") {
  auto f = FiniteField::prime(31);
  auto x = var(f, 3, 0), y = var(f, 3, 1), z = var(f, 3, 2);
  CHECK(gauss_class_count(x * y, 40, 1, 1).classes == 2);
  CHECK(gauss_class_count(x * y * z * (x + y + z), 60, 1, 1).classes == 4);
  CHECK(gauss_class_count(x * y * z * (x + y + z), 200, 1, 2).classes == 4);
}

TEST_CASE("singular scans") {
  auto f7 = FiniteField::prime(7), f31 = FiniteField::prime(31);
  auto x = var(f7, 3, 0), y = var(f7, 3, 1);
  auto s = singular_scan(x * y, f7);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0] == Point{0, 0, 1});
  CHECK(singular_scan(conic(f31, 1, 1, 1), f31).points.empty());
  CHECK(singular_scan(conic(f31, 1, 1, 1), FiniteField::extension(31, 2)).points.empty());
  CHECK_THROWS_AS(common_zeros({}), std::invalid_argument);
  CHECK_THROWS_AS(common_zeros({var(f7, 6, 0)}), std::invalid_argument);
  auto big = FiniteField::prime(10009);
  CHECK_THROWS_AS(singular_scan(var(big, 5, 0).pow(3), FiniteField::extension(10009, 2)), ScanBudgetError);
}

TEST_CASE("singular scan agrees with exhaustive enumeration") {
  std::mt19937_64 rng(21);
  for (uint32_t p : {7u, 13u}) {
    auto f = FiniteField::prime(p);
    oracle::Zp z{p};
    for (int t = 0; t < 12; ++t) {
      // products of random forms, so singular points actually occur
      FPoly L1(f, 4), L2(f, 4), Q(f, 4);
      for (int i = 0; i < 4; ++i) {
        L1 = L1 + var(f, 4, i).scale(rng() % p);
        L2 = L2 + var(f, 4, i).scale(rng() % p);
        for (int j = i; j < 4; ++j) Q = Q + (var(f, 4, i) * var(f, 4, j)).scale(rng() % p);
      }
      FPoly F = t % 2 ? L1 * Q : L1 * L2 * (L1 + L2);
      if (F.is_zero()) continue;
      oracle::Poly<oracle::Zp> O(z, 4);
      for (auto& [m, c] : F.terms()) O.add_term(mono::exps(m, 4), c);
      std::vector<Point> want;
      oracle::each_projective_point(z, 3, p, [&](const std::vector<uint64_t>& pt) {
        if (O.singular_at(pt)) want.push_back(pt);
      });
      std::sort(want.begin(), want.end());
      auto got = singular_scan(F, f).points;
      std::sort(got.begin(), got.end());
      CHECK(got == want);
      CHECK(singular_scan_bruteforce(F, f) == want);
    }
  }
}

TEST_CASE("special alpha search guards") {
  CHECK_THROWS_AS(find_special_alpha(29, 1), FieldError);
  CHECK_THROWS_AS(find_special_alpha(67, 1), FieldError);
  auto r = find_special_alpha(7, 1, 5);
  CHECK_FALSE(r.found);
  CHECK(r.candidates == 5);
  // Fermat-type parameter: the restriction is smooth, not 10-nodal
  auto f = FiniteField::prime(31);
  auto S = segre_restriction(CobleParams<FiniteField>::from_ints(f, {3, 0, 0, 0, 0}));
  CHECK(singular_scan(S, FiniteField::extension(31, 2)).points.size() != 10);
}

TEST_CASE("hyperplane fits") {
  auto f = FiniteField::prime(31);
  std::mt19937_64 rng(8);
  std::vector<Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({f->random(rng), f->random(rng), f->random(rng), f->random(rng), 0});
  auto h = hyperplane_fit(*f, pts);
  REQUIRE(h.ok);
  CHECK(h.form == Point{0, 0, 0, 0, 1});
  std::vector<Point> six = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 3, 4}};
  auto g = hyperplane_fit(*f, six);
  CHECK_FALSE(g.ok);
  CHECK(g.dim == 0);
  // majority fit ignores a few points off the plane
  auto more = pts;
  for (int i = 0; i < 20; ++i) more.push_back({f->random(rng), f->random(rng), f->random(rng), f->random(rng), 0});
  more.push_back({1, 2, 3, 4, 5});
  more.push_back({0, 1, 0, 0, 7});
  auto mj = majority_hyperplane(*f, more, 3);
  REQUIRE(mj.fit.ok);
  CHECK(mj.fit.form == Point{0, 0, 0, 0, 1});
  CHECK(mj.outliers.size() == 2);
}
