#include "doctest.h"

#include "coble/coble.hpp"
#include "coble/dualscan.hpp"
#include "oracle.hpp"

using namespace coble;

TEST_CASE("nullspace small cases") {
  auto f = FiniteField::prime(31);
  Matrix<FiniteField> I(f, 3, 3);
  for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
  CHECK(nullspace(I).empty());
  Matrix<FiniteField> row(f, 1, 2);
  row.at(0, 0) = row.at(0, 1) = 1;
  auto k = nullspace(row);
  REQUIRE(k.size() == 1);
  CHECK(f->add(k[0][0], k[0][1]) == 0);
  CHECK(rank(Matrix<FiniteField>(f, 4, 4)) == 0);
}

TEST_CASE("Vandermonde rank") {
  auto f = FiniteField::prime(31);
  Matrix<FiniteField> V(f, 5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) V.at(i, j) = f->pow(f->from_int(3 + 2 * i), j);
  CHECK(rank(V) == 5);
}

TEST_CASE("quadrics through six points") {
  auto f = FiniteField::prime(31);
  std::vector<std::vector<uint64_t>> pts = {{1, 6, 9, 1}, {1, 24, 13, 0}, {1, 18, 0, 29},
                                            {1, 15, 18, 14}, {1, 0, 25, 25}, {1, 6, 25, 11}};
  auto basis = monomial_basis(4, 2);
  Matrix<FiniteField> M(f, 6, basis.size());
  for (size_t r = 0; r < 6; ++r)
    for (size_t c = 0; c < basis.size(); ++c) {
      uint64_t v = 1;
      for (int i = 0; i < 4; ++i) v = f->mul(v, f->pow(pts[r][i], mono::exp(basis[c], i)));
      M.at(r, c) = v;
    }
  CHECK(nullspace(M).size() == 4);
}

TEST_CASE("segre groups are independent") {
  auto q = Rationals::get();
  auto g = segre_groups(q);
  auto b = monomial_basis(5, 3);
  Matrix<Rationals> M(q, 5, b.size());
  for (int r = 0; r < 5; ++r)
    for (size_t c = 0; c < b.size(); ++c) M.at(r, c) = g[r].coeff(b[c]);
  CHECK(rank(M) == 5);
}

TEST_CASE("nullspace exactness against an independent rank") {
  std::mt19937_64 rng(17);
  for (uint32_t p : {31u, 10009u}) {
    auto f = FiniteField::prime(p);
    oracle::Zp z{p};
    for (int t = 0; t < 20; ++t) {
      size_t rows = 2 + rng() % 12, cols = 2 + rng() % 12, rk = 1 + rng() % std::min(rows, cols);
      // product of random rows x rk and rk x cols factors
      std::vector<std::vector<uint64_t>> A(rows, std::vector<uint64_t>(rk)), B(rk, std::vector<uint64_t>(cols));
      for (auto& r : A)
        for (auto& c : r) c = rng() % p;
      for (auto& r : B)
        for (auto& c : r) c = rng() % p;
      Matrix<FiniteField> M(f, rows, cols);
      std::vector<std::vector<uint64_t>> dense(rows, std::vector<uint64_t>(cols, 0));
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
          for (size_t k = 0; k < rk; ++k) dense[i][j] = z.add(dense[i][j], z.mul(A[i][k], B[k][j]));
          M.at(i, j) = dense[i][j];
        }
      size_t r = oracle::rank(z, dense);
      auto ker = nullspace(M);
      CHECK(rank(M) == r);
      CHECK(ker.size() == cols - r);
      for (auto& v : ker)
        for (auto x : M.mul_vec(v)) CHECK(x == 0);
      // fast kernel agrees on the dimension and is exact
      std::vector<uint64_t> flat;
      for (auto& row : dense) flat.insert(flat.end(), row.begin(), row.end());
      auto fast = nullspace_modp(flat, rows, cols, p);
      CHECK(fast.nullspace.size() == cols - r);
      for (auto& v : fast.nullspace)
        for (size_t i = 0; i < rows; ++i) {
          uint64_t s = 0;
          for (size_t j = 0; j < cols; ++j) s = z.add(s, z.mul(dense[i][j], v[j]));
          CHECK(s == 0);
        }
      auto gen = kernel(*f, flat, rows, cols);
      CHECK(gen.size() == cols - r);
    }
  }
}

TEST_CASE("solve") {
  auto f = FiniteField::prime(31);
  Matrix<FiniteField> M(f, 2, 2);
  M.at(0, 0) = 1;
  M.at(0, 1) = 1;
  M.at(1, 0) = 1;
  M.at(1, 1) = 1;
  CHECK_FALSE(solve(M, {1, 2}).has_value());
  auto s = solve(M, {3, 3});
  REQUIRE(s.has_value());
  CHECK(f->add((*s)[0], (*s)[1]) == 3);
  CHECK_THROWS(solve(M, {1}));
}
