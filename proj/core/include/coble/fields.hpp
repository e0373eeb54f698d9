#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace coble {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime_u32(uint64_t n);

// F_q, q = p^k.  Elements are packed coefficient vectors: coefficient i of the
// residue polynomial sits in bits [i*w, (i+1)*w) with w = bit width of p-1.
// Packed order coincides with the base-p index order c0 + c1 p + ... .
class FiniteField {
 public:
  using elem = uint64_t;

  static std::shared_ptr<const FiniteField> prime(uint32_t p);
  // lexicographically first monic irreducible of degree k
  static std::shared_ptr<const FiniteField> extension(uint32_t p, int k);
  // modulus given low -> high, monic, length k+1
  static std::shared_ptr<const FiniteField> extension(uint32_t p, std::vector<uint32_t> modulus);

  uint32_t p() const { return p_; }
  int k() const { return k_; }
  uint64_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }
  bool same(const FiniteField& o) const { return p_ == o.p_ && mod_ == o.mod_; }

  elem zero() const { return 0; }
  elem one() const { return 1; }
  bool is_zero(elem a) const { return a == 0; }
  bool is_one(elem a) const { return a == 1; }

  elem add(elem a, elem b) const {
    if (k_ == 1) {
      uint64_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    elem r = 0;
    for (int i = 0; i < k_; ++i) {
      uint64_t s = ((a >> (w_ * i)) & mask_) + ((b >> (w_ * i)) & mask_);
      if (s >= p_) s -= p_;
      r |= s << (w_ * i);
    }
    return r;
  }
  elem neg(elem a) const {
    if (k_ == 1) return a ? p_ - a : 0;
    elem r = 0;
    for (int i = 0; i < k_; ++i) {
      uint64_t c = (a >> (w_ * i)) & mask_;
      if (c) r |= (p_ - c) << (w_ * i);
    }
    return r;
  }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const {
    if (k_ == 1) return (a * b) % p_;
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  elem inv(elem a) const;
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  elem pow(elem a, uint64_t e) const;

  elem from_int(int64_t n) const {
    int64_t r = n % static_cast<int64_t>(p_);
    return static_cast<elem>(r < 0 ? r + p_ : r);
  }
  elem from_coeffs(const std::vector<uint32_t>& c) const;
  std::vector<uint32_t> coeffs(elem a) const;
  uint64_t index(elem a) const;
  elem from_index(uint64_t i) const;
  elem random(std::mt19937_64& rng) const { return from_index(rng() % q_); }
  elem random_nonzero(std::mt19937_64& rng) const { return from_index(1 + rng() % (q_ - 1)); }

  // element of the prime subfield?  (used when printing / comparing)
  bool in_prime_field(elem a) const { return k_ == 1 || a <= mask_; }

  std::string name() const;

 private:
  FiniteField(uint32_t p, std::vector<uint32_t> modulus);
  elem mul_slow(elem a, elem b) const;
  void build_tables();

  uint32_t p_;
  int k_;
  uint64_t q_;
  int w_;
  uint64_t mask_;
  std::vector<uint32_t> mod_;
  std::vector<uint32_t> log_, exp_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

class Rationals {
 public:
  using elem = mpq_class;
  static std::shared_ptr<const Rationals> get();

  elem zero() const { return 0; }
  elem one() const { return 1; }
  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  bool is_one(const elem& a) const { return a == 1; }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem inv(const elem& a) const {
    if (sgn(a) == 0) throw FieldError("division by zero in Q");
    return 1 / a;
  }
  elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }
  elem pow(elem a, uint64_t e) const {
    elem r = 1;
    for (; e; e >>= 1, a *= a)
      if (e & 1) r *= a;
    return r;
  }
  elem from_int(int64_t n) const { return elem(static_cast<long>(n)); }
  // small random rationals num/den, |num| <= 50, 1 <= den <= 9
  elem random(std::mt19937_64& rng) const {
    elem r(static_cast<long>(rng() % 101) - 50, static_cast<long>(1 + rng() % 9));
    r.canonicalize();
    return r;
  }
  std::string name() const { return "Q"; }
  bool same(const Rationals&) const { return true; }
};

using QPtr = std::shared_ptr<const Rationals>;

// ---- dynamic field description / element, used at API boundaries ----

struct FieldSpec {
  enum class Kind { rational, prime, extension };
  Kind kind = Kind::rational;
  uint32_t p = 0;
  int k = 1;
  std::vector<uint32_t> modulus;  // low -> high, monic

  static FieldSpec rational() { return {}; }
  static FieldSpec prime_field(uint32_t p);
  static FieldSpec extension_field(uint32_t p, int k);
  static FieldSpec parse(const std::string& s);
  static FieldSpec of(const FiniteField& f);

  bool finite() const { return kind != Kind::rational; }
  FieldPtr finite_field() const;
  std::string str() const;
  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p && k == o.k && modulus == o.modulus;
  }
};

struct FieldElem {
  FieldSpec field;
  std::variant<mpq_class, uint64_t> v;

  static FieldElem from_int(const FieldSpec& f, int64_t n);
  static FieldElem rational(const mpq_class& q);
  std::string str() const;
  bool operator==(const FieldElem& o) const;
};

enum class ArithOp { add, sub, mul, div };

FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op);
FieldElem inverse(const FieldElem& a);

// smallest residue w > 1 with w^3 = 1; needs p = 1 mod 3
FiniteField::elem cube_root_of_unity(const FiniteField& f);

// distinct roots in f, sorted by canonical index; c low -> high
std::vector<FiniteField::elem> univariate_roots(const std::vector<FiniteField::elem>& c,
                                                const FiniteField& f);

}  // namespace coble
