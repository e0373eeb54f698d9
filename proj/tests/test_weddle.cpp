#include "doctest.h"

#include "coble/weddle.hpp"
#include "oracle.hpp"

using namespace coble;
using namespace coble::weddle;

namespace {

FieldPtr f31() { return FiniteField::prime(31); }

std::array<Elem, 6> params(const FieldPtr& f) {
  std::array<Elem, 6> t;
  for (int i = 0; i < 6; ++i) t[i] = f->from_int(i);
  return t;
}

SixPoints general() {
  return SixPoints::make(f31(), {Point{1, 6, 9, 1}, Point{1, 24, 13, 0}, Point{1, 18, 0, 29}, Point{1, 15, 18, 14},
                                 Point{1, 0, 25, 25}, Point{1, 6, 25, 11}});
}

bool singular_at(const FPoly& F, const Point& p) {
  for (auto& d : F.gradient())
    if (d.evaluate(p)) return false;
  return true;
}

}  // namespace

TEST_CASE("six point configurations") {
  auto f = f31();
  auto tc = SixPoints::twisted_cubic(f, params(f));
  CHECK(tc.general_position);
  CHECK(tc.pts[2] == Point{1, 2, 4, 8});
  auto web = quadrics_through(tc);
  for (auto& Q : web.basis)
    for (auto& P : tc.pts) CHECK(Q.evaluate(P) == 0);
  auto r = SixPoints::random(f, 7);
  CHECK(r.general_position);
  CHECK_NOTHROW(quadrics_through(r));

  std::array<Point, 6> coplanar = {Point{1, 0, 0, 0}, Point{0, 1, 0, 0}, Point{1, 1, 0, 0}, Point{1, 2, 0, 0},
                                   Point{0, 0, 1, 0}, Point{0, 0, 0, 1}};
  CHECK_THROWS_AS(SixPoints::make(f, coplanar), GeneralPositionError);
  auto t = params(f);
  t[3] = t[1];
  CHECK_THROWS_AS(SixPoints::twisted_cubic(f, t), std::invalid_argument);
  CHECK_THROWS_AS(twisted_cubic_contraction(f, t), std::invalid_argument);
}

TEST_CASE("Weddle quartic") {
  auto s = general();
  auto web = quadrics_through(s);
  auto W = weddle_quartic(web);
  CHECK(W.degree() == 4);
  for (auto& P : s.pts) CHECK(singular_at(W, P));
  // reordering the basis only rescales the determinant
  auto web2 = web;
  std::swap(web2.basis[0], web2.basis[3]);
  CHECK(weddle_quartic(web2).proportional(W));

  auto tc = SixPoints::twisted_cubic(f31(), params(f31()));
  auto Wt = weddle_quartic(quadrics_through(tc));
  for (int s2 = 0; s2 < 31; ++s2) {
    Elem t = static_cast<Elem>(s2);
    CHECK(Wt.evaluate({1, t, f31()->mul(t, t), f31()->pow(t, 3)}) == 0);
  }
}

TEST_CASE("fiber histogram of the squaring map") {
  auto f = FiniteField::prime(7);
  auto x = FPoly::variable(f, 2, 0), y = FPoly::variable(f, 2, 1);
  auto h = fiber_histogram(std::vector<FPoly>{x * x, y * y});
  // (1:0), (0:1) have one preimage; the other squares (a:1) with a a nonzero square have two
  CHECK(h.sizes[1] == 2);
  CHECK(h.sizes[2] == 3);
  CHECK(h.sizes.size() == 2);
  CHECK(h.base_points == 0);
  auto big = FiniteField::prime(101);
  auto u = FPoly::variable(big, 2, 0), v = FPoly::variable(big, 2, 1);
  CHECK_THROWS_AS(fiber_histogram(std::vector<FPoly>{u * u, v * v}), ScanBudgetError);
}

TEST_CASE("web fibers") {
  auto web = quadrics_through(general());
  auto W = weddle_quartic(web);
  auto h = fiber_histogram(web);
  CHECK(h.dominant() == 2);
  CHECK(h.base_points == 6);
  for (auto& p : h.ramification) CHECK(W.evaluate(p) == 0);
  CHECK(exceptional_planes(web).size() == 6);
}

TEST_CASE("branch quartic and its nodes") {
  auto web = quadrics_through(general());
  auto br = branch_quartic(web, 1);
  CHECK(br.nullity3 == 0);
  CHECK(br.nullity4 == 1);
  CHECK(br.verified);
  auto sec = secant_contractions(web);
  REQUIRE(sec.size() == 15);
  for (auto& p : sec) {
    CHECK(br.K.evaluate(p) == 0);
    CHECK(singular_at(br.K, p));
  }
  auto nr = sixteenth_node(web, br.K);
  CHECK(nr.extension.size() == 16);
  CHECK(nr.secant_hits == 15);
  CHECK(nr.base_field.size() >= 15);
  CHECK(nr.base_field.size() <= 16);
  CHECK_THROWS_AS(branch_quartic(web, 1, 10), std::invalid_argument);
}

TEST_CASE("coincident secant contractions are rejected") {
  // P0P1 and P2P3 meet at (1:1:0:0), so both secants contract to one image.
  // Built directly because make() refuses four coplanar points.
  auto f = f31();
  SixPoints s{f,
              {Point{1, 0, 0, 0}, Point{0, 1, 0, 0}, Point{1, 2, 1, 0}, Point{1, 0, 30, 0}, Point{1, 3, 5, 1},
               Point{2, 7, 1, 9}},
              false};
  auto web = quadrics_through(s);
  CHECK_THROWS_AS(secant_contractions(web), GeneralPositionError);
}

TEST_CASE("Fermat quartics have no nodes") {
  auto f = f31();
  FPoly F(f, 4);
  for (int i = 0; i < 4; ++i) F = F + FPoly::variable(f, 4, i).pow(4);
  CHECK(singular_scan(F, FiniteField::extension(31, 2)).points.empty());
  auto f7 = FiniteField::prime(7);
  FPoly G(f7, 5);
  for (int i = 0; i < 5; ++i) G = G + FPoly::variable(f7, 5, i).pow(4);
  auto ig = igusa_config_check(G);
  CHECK(ig.lines.empty());
  CHECK(ig.nodes.empty());
  CHECK_FALSE(ig.pass);
}

TEST_CASE("twisted cubic contraction") {
  auto f = f31();
  auto r = twisted_cubic_contraction(f, params(f));
  REQUIRE(r.ok);
  for (int i = 1; i < 4; ++i) {
    // all four restricted sextics are multiples of the first nonzero one
    oracle::Zp z{31};
    std::vector<std::vector<uint64_t>> m = {r.sextics[0], r.sextics[i]};
    bool any0 = std::any_of(r.sextics[0].begin(), r.sextics[0].end(), [](Elem e) { return e != 0; });
    if (any0) CHECK(oracle::rank(z, m) <= 1);
  }
}
