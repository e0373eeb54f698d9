#include "doctest.h"

#include "coble/fields.hpp"
#include "coble/upoly.hpp"
#include "oracle.hpp"

using namespace coble;

TEST_CASE("prime field small cases") {
  auto f7 = FiniteField::prime(7), f31 = FiniteField::prime(31);
  CHECK(f31->mul(4, 8) == 1);
  CHECK(f7->inv(3) == 5);
  CHECK(f7->from_int(-1) == 6);
  CHECK_THROWS_AS(f7->inv(0), FieldError);
  CHECK_THROWS_AS(FiniteField::prime(21), FieldError);
}

TEST_CASE("rationals") {
  auto q = Rationals::get();
  CHECK(q->add(mpq_class(1, 3), mpq_class(1, 6)) == mpq_class(1, 2));
  CHECK_THROWS_AS(q->inv(0), FieldError);
}

TEST_CASE("cube roots of unity") {
  CHECK(cube_root_of_unity(*FiniteField::prime(7)) == 2);
  CHECK(cube_root_of_unity(*FiniteField::prime(31)) == 5);
  auto f = FiniteField::prime(10009);
  auto w = cube_root_of_unity(*f);
  oracle::Zp z{10009};
  uint64_t first = 0;
  for (uint64_t x = 2; x < 10009 && !first; ++x)
    if (z.pow(x, 3) == 1) first = x;
  CHECK(w == first);
  CHECK_THROWS_AS(cube_root_of_unity(*FiniteField::prime(29)), FieldError);
}

TEST_CASE("univariate roots against exhaustive search") {
  auto f7 = FiniteField::prime(7), f31 = FiniteField::prime(31);
  CHECK(univariate_roots({6, 0, 1}, *f7) == std::vector<uint64_t>{1, 6});
  CHECK(univariate_roots({29, 0, 0, 1}, *f31) == std::vector<uint64_t>{4, 7, 20});
  CHECK(univariate_roots({1, 0, 1}, *f7).empty());

  std::mt19937_64 rng(5);
  for (uint32_t p : {7u, 31u, 101u}) {
    auto f = FiniteField::prime(p);
    oracle::Zp z{p};
    for (int t = 0; t < 40; ++t) {
      std::vector<uint64_t> c(1 + rng() % 6);
      for (auto& x : c) x = rng() % p;
      c.back() = 1 + rng() % (p - 1);
      std::vector<uint64_t> want;
      for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = 0;
        for (size_t i = c.size(); i-- > 0;) v = z.add(z.mul(v, x), c[i]);
        if (!v) want.push_back(x);
      }
      CHECK(univariate_roots(c, *f) == want);
    }
  }
}

TEST_CASE("extension field matches pair arithmetic") {
  for (uint32_t p : {31u, 10009u}) {
    auto f = FiniteField::extension(p, 2);
    auto m = f->modulus();
    REQUIRE(m.size() == 3);
    oracle::Zp2 o{{p}, m[0], m[1]};
    std::mt19937_64 rng(p);
    auto to = [&](uint64_t a) {
      auto c = f->coeffs(a);
      c.resize(2);
      return oracle::Zp2::E{c[0], c[1]};
    };
    for (int i = 0; i < 1000; ++i) {
      auto a = f->random(rng), b = f->random(rng);
      CHECK(to(f->mul(a, b)) == o.mul(to(a), to(b)));
      CHECK(to(f->add(a, b)) == o.add(to(a), to(b)));
      if (b) CHECK(to(f->div(a, b)) == o.mul(to(a), o.inv(to(b))));
    }
  }
  // no root of the modulus in the base field
  auto f = FiniteField::extension(31, 2);
  auto m = f->modulus();
  for (uint64_t x = 0; x < 31; ++x) CHECK((m[0] + m[1] * x + x * x) % 31 != 0);
}

TEST_CASE("field specs round-trip") {
  for (std::string s : {"Q", "GF(31)", "GF(10009)"}) CHECK(FieldSpec::parse(s).str() == s);
  auto e = FieldSpec::extension_field(31, 2);
  CHECK(FieldSpec::parse(e.str()) == e);
  CHECK_THROWS_AS(FieldSpec::parse("GF(x)"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("F7"), FieldError);
}

TEST_CASE("dynamic elements") {
  auto gf = FieldSpec::prime_field(31);
  auto a = FieldElem::from_int(gf, 4), b = FieldElem::from_int(gf, 8);
  CHECK(arith(a, b, ArithOp::mul) == FieldElem::from_int(gf, 1));
  CHECK(inverse(FieldElem::from_int(FieldSpec::prime_field(7), 3)) == FieldElem::from_int(FieldSpec::prime_field(7), 5));
  auto q1 = FieldElem::rational(mpq_class(1, 3)), q2 = FieldElem::rational(mpq_class(1, 6));
  CHECK(arith(q1, q2, ArithOp::add) == FieldElem::rational(mpq_class(1, 2)));
  CHECK_THROWS_AS(arith(a, q1, ArithOp::add), FieldError);
  CHECK_THROWS_AS(arith(a, FieldElem::from_int(gf, 0), ArithOp::div), FieldError);
}

TEST_CASE("upoly gcd and division") {
  auto f = FiniteField::prime(31);
  using namespace upoly;
  UPoly a = {30, 0, 1}, b = {1, 1};  // x^2 - 1, x + 1
  CHECK(gcd(*f, a, b) == UPoly{1, 1});
  UPoly qq, r;
  divrem(*f, a, b, qq, r);
  CHECK(qq == UPoly{30, 1});
  CHECK(r.empty());
  CHECK_THROWS_AS(roots(*f, UPoly{}), FieldError);
}
