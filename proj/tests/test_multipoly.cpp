#include "doctest.h"

#include "coble/coble.hpp"
#include "oracle.hpp"

using namespace coble;
using FP = MPoly<FiniteField>;

namespace {

FP X(const FieldPtr& f, int i, int j) { return FP::variable(f, 9, 3 * i + j); }

FP sum_cubes(const FieldPtr& f) {
  FP s(f, 9);
  for (int b = 0; b < 9; ++b) s = s + FP::variable(f, 9, b).pow(3);
  return s;
}

}  // namespace

TEST_CASE("evaluation examples") {
  auto f = FiniteField::prime(31);
  std::vector<uint64_t> e00(9, 0), ones(9, 1);
  e00[0] = 1;
  CHECK(sum_cubes(f).evaluate(e00) == 1);
  CHECK((X(f, 0, 0) * X(f, 1, 1) * X(f, 2, 2)).evaluate(ones) == 1);
  auto f7 = FiniteField::prime(7);
  auto G = build_cubic(CobleParams<FiniteField>::from_ints(f7, {3, 0, 0, 0, 0}));
  CHECK(G.evaluate(ones) == 2);
  CHECK_THROWS_AS(G.evaluate({1, 2}), PolyError);
}

TEST_CASE("derivatives and Euler") {
  auto f = FiniteField::prime(31);
  auto g = sum_cubes(f).gradient();
  for (int b = 0; b < 9; ++b) CHECK(g[b] == FP::variable(f, 9, b).pow(2).scale(3));
  CHECK((X(f, 0, 0) * X(f, 0, 1) * X(f, 0, 2)).derivative(0) == X(f, 0, 1) * X(f, 0, 2));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    CobleParams<FiniteField> a{f, {}};
    for (auto& c : a.alpha) c = f->random_nonzero(rng);
    CHECK(build_cubic(a).euler_identity());
  }
  auto inhom = FP::variable(f, 3, 0) + FP::variable(f, 3, 1).pow(2);
  CHECK_FALSE(inhom.euler_identity());
}

TEST_CASE("degree and variable caps") {
  auto f = FiniteField::prime(31);
  CHECK_THROWS_AS(FP(f, 11), PolyError);
  CHECK_THROWS_AS(FP::variable(f, 2, 0).pow(9), PolyError);
  CHECK_THROWS_AS(FP::variable(f, 2, 0) + FP::variable(f, 3, 0), PolyError);
  auto f7 = FiniteField::prime(7);
  CHECK_THROWS_AS(FP::variable(f, 2, 0) + FP::variable(f7, 2, 0), FieldError);
}

TEST_CASE("monomial counts") {
  CHECK(monomial_basis(9, 6).size() == 3003);
  CHECK(monomial_basis(9, 3).size() == 165);
  CHECK(monomial_basis(4, 4).size() == 35);
  CHECK(binomial(14, 8) == 3003);
  auto b = monomial_basis(3, 2);
  CHECK(b.front() == mono::make({2, 0, 0}));
}

TEST_CASE("substitution into the fixed loci") {
  auto f = FiniteField::prime(31);
  auto gm = gamma_minus(f), gp = gamma_plus(f);
  CHECK(substitute_linear(X(f, 0, 0), gm).is_zero());
  CHECK(substitute_linear(X(f, 0, 1) + X(f, 0, 2), gm).is_zero());
  CHECK(substitute_linear(X(f, 0, 1) - X(f, 0, 2), gp).is_zero());
  CHECK_THROWS_AS(substitute_linear(FP::variable(f, 4, 0), gm), PolyError);
}

TEST_CASE("chain rule for linear substitution") {
  auto f = FiniteField::prime(101);
  oracle::Zp z{101};
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    FP F(f, 4);
    for (int k = 0; k < 12; ++k) {
      std::vector<int> e(4, 0);
      for (int d = 0; d < 3; ++d) ++e[rng() % 4];
      F = F + FP::monomial(f, 4, e, f->random(rng));
    }
    LinearChange<FiniteField> A{f, std::vector<std::vector<uint64_t>>(4, std::vector<uint64_t>(3))};
    for (auto& row : A.a)
      for (auto& c : row) c = f->random(rng);
    auto H = substitute_linear(F, A);
    for (int s = 0; s < 5; ++s) {
      std::vector<uint64_t> x(3);
      for (auto& c : x) c = f->random(rng);
      auto y = A.apply(x);
      CHECK(H.evaluate(x) == F.evaluate(y));
      // dH/dx_j = sum_i A_ij (dF/dy_i)(A x)
      for (int j = 0; j < 3; ++j) {
        uint64_t want = 0;
        for (int i = 0; i < 4; ++i) want = z.add(want, z.mul(A.a[i][j], F.derivative(i).evaluate(y)));
        CHECK(H.derivative(j).evaluate(x) == want);
      }
    }
  }
}

TEST_CASE("extract_coordinate_power") {
  auto q = Rationals::get();
  using QP = MPoly<Rationals>;
  auto x = QP::variable(q, 3, 0), y = QP::variable(q, 3, 1), z = QP::variable(q, 3, 2);
  auto r = extract_coordinate_power(x * x * y, {1, 0, 0}, 2);
  CHECK(r.ok);
  CHECK(r.quotient == y);
  auto r3 = extract_coordinate_power(x * x * y, {1, 0, 0}, 3);
  CHECK_FALSE(r3.ok);
  CHECK(r3.valuation == 2);
  auto F = (x + y).pow(2) * (x * x + z * z);
  auto r2 = extract_coordinate_power(F, {1, 1, 0}, 2);
  CHECK(r2.ok);
  CHECK(r2.quotient == x * x + z * z);
  CHECK_THROWS_AS(extract_coordinate_power(F, {0, 0, 0}, 1), PolyError);
}

TEST_CASE("text format") {
  auto f = FiniteField::prime(31);
  auto G = build_cubic(CobleParams<FiniteField>::from_ints(f, {4, 16, 7, 6, 28}));
  CHECK(from_text(to_text(G), f) == G);
  auto q = Rationals::get();
  auto Gq = build_cubic(CobleParams<Rationals>::from_ints(q, {4, -15, 7, 6, -3}));
  CHECK(from_text(to_text(Gq), q) == Gq);
  auto fx = FiniteField::extension(31, 2);
  auto Gx = lift(G, fx);
  CHECK(from_text(to_text(Gx), fx) == Gx);
  CHECK_THROWS_AS(from_text(to_text(G), FiniteField::prime(7)), PolyError);
  CHECK_THROWS_AS(from_text("vars=2 degree=1 field=GF(31)\n1 0 : 40\n", f), PolyError);
  CHECK_THROWS_AS(from_text("vars=2 degree=1 field=GF(31)\n1 0 : 4\n1 0 : 5\n", f), PolyError);
  CHECK_THROWS_AS(from_text("vars=2 degree=1 field=Q\n1 0 : 2/4\n", q), PolyError);
  CHECK_THROWS_AS(from_text("garbage", f), PolyError);
}

TEST_CASE("reduction mod p") {
  auto q = Rationals::get();
  auto G = build_cubic(CobleParams<Rationals>::from_ints(q, {4, -15, 7, 6, -3}));
  auto f = FiniteField::prime(31);
  CHECK(reduce_mod(G, f) == build_cubic(CobleParams<FiniteField>::from_ints(f, {4, -15, 7, 6, -3})));
}
