#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coble/fields.hpp"

namespace coble {

constexpr int kMaxVars = 10;
constexpr int kMaxDegree = 8;

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent vector packed into 4-bit nibbles, variable 0 most significant,
// total degree in bits 40..47.  Integer order on Mono == graded lex order.
using Mono = uint64_t;

namespace mono {

inline int shift(int i) { return 4 * (kMaxVars - 1 - i); }
inline int exp(Mono m, int i) { return static_cast<int>((m >> shift(i)) & 15); }
inline int deg(Mono m) { return static_cast<int>(m >> 40); }
inline Mono var(int i) { return (Mono{1} << shift(i)) | (Mono{1} << 40); }

inline Mono make(const std::vector<int>& e) {
  if (e.size() > static_cast<size_t>(kMaxVars)) throw PolyError("variable cap exceeded");
  Mono m = 0;
  int d = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw PolyError("negative exponent");
    d += e[i];
    if (d > kMaxDegree) throw PolyError("degree cap exceeded");
    m |= static_cast<Mono>(e[i]) << shift(static_cast<int>(i));
  }
  return m | (static_cast<Mono>(d) << 40);
}

inline std::vector<int> exps(Mono m, int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = exp(m, i);
  return e;
}

inline Mono mul(Mono a, Mono b) {
  if (deg(a) + deg(b) > kMaxDegree) throw PolyError("degree cap exceeded");
  return a + b;  // nibbles cannot carry below the cap
}

inline bool divides(Mono a, Mono b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp(a, i) > exp(b, i)) return false;
  return true;
}

}  // namespace mono

// all exponent vectors of degree d in n variables, x0^d first (descending lex)
std::vector<Mono> monomial_basis(int n, int d);
uint64_t binomial(int n, int k);

template <class K>
class MPoly {
 public:
  using E = typename K::elem;
  using FPtr = std::shared_ptr<const K>;

  MPoly() = default;
  MPoly(FPtr f, int nvars) : f_(std::move(f)), n_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw PolyError("variable count out of range");
  }

  static MPoly constant(FPtr f, int n, const E& c) {
    MPoly r(f, n);
    r.add_term(0, c);
    return r;
  }
  static MPoly variable(FPtr f, int n, int i) {
    MPoly r(f, n);
    r.add_term(mono::var(i), r.f_->one());
    return r;
  }
  static MPoly monomial(FPtr f, int n, const std::vector<int>& e, const E& c) {
    if (static_cast<int>(e.size()) != n) throw PolyError("exponent length mismatch");
    MPoly r(f, n);
    r.add_term(mono::make(e), c);
    return r;
  }

  int nvars() const { return n_; }
  const K& field() const { return *f_; }
  const FPtr& field_ptr() const { return f_; }
  const std::map<Mono, E>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }

  int degree() const { return t_.empty() ? -1 : mono::deg(t_.rbegin()->first); }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = mono::deg(t_.begin()->first);
    return mono::deg(t_.rbegin()->first) == d;
  }

  E coeff(Mono m) const {
    auto it = t_.find(m);
    return it == t_.end() ? f_->zero() : it->second;
  }
  E coeff(const std::vector<int>& e) const { return coeff(mono::make(e)); }

  void add_term(Mono m, const E& c) {
    if (f_->is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second = f_->add(it->second, c);
      if (f_->is_zero(it->second)) t_.erase(it);
    }
  }

  MPoly operator+(const MPoly& o) const {
    check(o);
    MPoly r = *this;
    for (auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    check(o);
    MPoly r = *this;
    for (auto& [m, c] : o.t_) r.add_term(m, f_->neg(c));
    return r;
  }
  MPoly operator-() const { return scale(f_->neg(f_->one())); }
  MPoly operator*(const MPoly& o) const {
    check(o);
    MPoly r(f_, n_);
    for (auto& [m1, c1] : t_)
      for (auto& [m2, c2] : o.t_) r.add_term(mono::mul(m1, m2), f_->mul(c1, c2));
    return r;
  }
  MPoly scale(const E& s) const {
    MPoly r(f_, n_);
    if (f_->is_zero(s)) return r;
    for (auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, f_->mul(c, s));
    return r;
  }
  MPoly pow(int e) const {
    MPoly r = constant(f_, n_, f_->one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  bool operator==(const MPoly& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly derivative(int i) const {
    if (i < 0 || i >= n_) throw PolyError("derivative index out of range");
    MPoly r(f_, n_);
    for (auto& [m, c] : t_) {
      int e = mono::exp(m, i);
      if (!e) continue;
      Mono md = m - mono::var(i);
      r.add_term(md, f_->mul(c, f_->from_int(e)));
    }
    return r;
  }

  std::vector<MPoly> gradient() const {
    std::vector<MPoly> g;
    for (int i = 0; i < n_; ++i) g.push_back(derivative(i));
    return g;
  }

  E evaluate(const std::vector<E>& pt) const {
    if (static_cast<int>(pt.size()) != n_)
      throw PolyError("evaluate: point has " + std::to_string(pt.size()) + " coordinates, expected " +
                      std::to_string(n_));
    int d = std::max(degree(), 0);
    std::vector<std::vector<E>> pw(n_, std::vector<E>(d + 1));
    for (int i = 0; i < n_; ++i) {
      pw[i][0] = f_->one();
      for (int e = 1; e <= d; ++e) pw[i][e] = f_->mul(pw[i][e - 1], pt[i]);
    }
    E s = f_->zero();
    for (auto& [m, c] : t_) {
      E v = c;
      for (int i = 0; i < n_; ++i) {
        int e = mono::exp(m, i);
        if (e) v = f_->mul(v, pw[i][e]);
      }
      s = f_->add(s, v);
    }
    return s;
  }

  // leading (grlex-largest) coefficient scaled to 1
  MPoly normalized() const {
    if (t_.empty()) return *this;
    return scale(f_->inv(t_.rbegin()->second));
  }

  bool proportional(const MPoly& o) const {
    check(o);
    if (t_.empty() || o.t_.empty()) return t_.empty() && o.t_.empty();
    Mono m0 = t_.rbegin()->first;
    E a0 = t_.rbegin()->second, b0 = o.coeff(m0);
    if (f_->is_zero(b0)) return false;
    for (auto& [m, c] : t_)
      if (f_->mul(c, b0) != f_->mul(o.coeff(m), a0)) return false;
    for (auto& [m, c] : o.t_)
      if (f_->mul(c, a0) != f_->mul(coeff(m), b0)) return false;
    return true;
  }

  // Euler: sum x_i dF/dx_i == deg * F
  bool euler_identity() const {
    if (!is_homogeneous()) return false;
    MPoly s(f_, n_);
    for (int i = 0; i < n_; ++i) s = s + variable(f_, n_, i) * derivative(i);
    return s == scale(f_->from_int(std::max(degree(), 0)));
  }

 private:
  void check(const MPoly& o) const {
    if (o.n_ != n_) throw PolyError("variable count mismatch");
    if (!f_->same(*o.f_)) throw FieldError("mixed-field polynomial operands");
  }

  FPtr f_;
  int n_ = 0;
  std::map<Mono, E> t_;
};

// X = A Z: column j is the image of source basis vector j.
template <class K>
struct LinearChange {
  using E = typename K::elem;
  std::shared_ptr<const K> f;
  std::vector<std::vector<E>> a;  // n_out rows, n_in columns

  int n_out() const { return static_cast<int>(a.size()); }
  int n_in() const { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

  static LinearChange from_ints(std::shared_ptr<const K> f, const std::vector<std::vector<int>>& m) {
    LinearChange L{f, {}};
    for (auto& row : m) {
      std::vector<E> r;
      for (int v : row) r.push_back(f->from_int(v));
      L.a.push_back(r);
    }
    return L;
  }

  LinearChange compose(const LinearChange& b) const {  // this * b
    if (n_in() != b.n_out()) throw PolyError("linear change dimension mismatch");
    LinearChange r{f, std::vector<std::vector<E>>(n_out(), std::vector<E>(b.n_in(), f->zero()))};
    for (int i = 0; i < n_out(); ++i)
      for (int k = 0; k < n_in(); ++k)
        for (int j = 0; j < b.n_in(); ++j) r.a[i][j] = f->add(r.a[i][j], f->mul(a[i][k], b.a[k][j]));
    return r;
  }

  std::vector<E> apply(const std::vector<E>& z) const {
    if (static_cast<int>(z.size()) != n_in()) throw PolyError("linear change dimension mismatch");
    std::vector<E> x(n_out(), f->zero());
    for (int i = 0; i < n_out(); ++i)
      for (int j = 0; j < n_in(); ++j) x[i] = f->add(x[i], f->mul(a[i][j], z[j]));
    return x;
  }

  LinearChange transpose() const {
    LinearChange r{f, std::vector<std::vector<E>>(n_in(), std::vector<E>(n_out()))};
    for (int i = 0; i < n_out(); ++i)
      for (int j = 0; j < n_in(); ++j) r.a[j][i] = a[i][j];
    return r;
  }
};

template <class K>
MPoly<K> substitute_linear(const MPoly<K>& F, const LinearChange<K>& A) {
  if (A.n_out() != F.nvars())
    throw PolyError("substitute_linear: change maps into " + std::to_string(A.n_out()) + " coordinates, polynomial has " +
                    std::to_string(F.nvars()));
  const auto& f = F.field_ptr();
  int m = A.n_in();
  std::vector<MPoly<K>> lin(F.nvars(), MPoly<K>(f, m));
  for (int i = 0; i < F.nvars(); ++i)
    for (int j = 0; j < m; ++j) lin[i].add_term(mono::var(j), A.a[i][j]);
  std::vector<std::vector<MPoly<K>>> pw(F.nvars());
  auto power = [&](int i, int e) -> const MPoly<K>& {
    auto& v = pw[i];
    if (v.empty()) v.push_back(MPoly<K>::constant(f, m, f->one()));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * lin[i]);
    return v[e];
  };
  MPoly<K> r(f, m);
  for (auto& [mo, c] : F.terms()) {
    MPoly<K> t = MPoly<K>::constant(f, m, c);
    for (int i = 0; i < F.nvars(); ++i) {
      int e = mono::exp(mo, i);
      if (e) t = t * power(i, e);
    }
    r = r + t;
  }
  return r;
}

// coefficient-wise field change (embedding F_p into F_{p^k}, reducing integers, ...)
template <class K2, class K1, class Fn>
MPoly<K2> map_coeffs(const MPoly<K1>& F, std::shared_ptr<const K2> f2, Fn fn) {
  MPoly<K2> r(f2, F.nvars());
  for (auto& [m, c] : F.terms()) r.add_term(m, fn(c));
  return r;
}

inline MPoly<FiniteField> lift(const MPoly<FiniteField>& F, FieldPtr ext) {
  if (ext->p() != F.field().p() || F.field().k() != 1) throw FieldError("lift: not an extension of the prime field");
  return map_coeffs(F, ext, [&](uint64_t c) { return ext->from_int(static_cast<int64_t>(c)); });
}

// integer/rational polynomial reduced mod p (denominators must be invertible)
inline MPoly<FiniteField> reduce_mod(const MPoly<Rationals>& F, FieldPtr f) {
  return map_coeffs(F, f, [&](const mpq_class& c) {
    mpz_class n = c.get_num() % f->p(), d = c.get_den() % f->p();
    return f->div(f->from_int(n.get_si()), f->from_int(d.get_si()));
  });
}

template <class K>
struct ExtractResult {
  bool ok = false;
  int valuation = 0;
  MPoly<K> quotient;
};

// F = L^m * Q ?  L given by its coefficient vector.
template <class K>
ExtractResult<K> extract_coordinate_power(const MPoly<K>& F, const std::vector<typename K::elem>& L, int m) {
  const auto& f = F.field_ptr();
  int n = F.nvars();
  if (static_cast<int>(L.size()) != n) throw PolyError("linear form length mismatch");
  int j = -1;
  for (int i = 0; i < n; ++i)
    if (!f->is_zero(L[i])) {
      j = i;
      break;
    }
  if (j < 0) throw PolyError("extract_coordinate_power: zero linear form");
  // new coordinates w: w0 = L(x), then x_i (i != j) in order
  std::vector<int> pos(n, -1);
  for (int i = 0, c = 1; i < n; ++i)
    if (i != j) pos[i] = c++;
  using E = typename K::elem;
  LinearChange<K> A{f, std::vector<std::vector<E>>(n, std::vector<E>(n, f->zero()))};
  E lj = f->inv(L[j]);
  for (int i = 0; i < n; ++i) {
    if (i == j) {
      A.a[i][0] = lj;
      for (int l = 0; l < n; ++l)
        if (l != j) A.a[i][pos[l]] = f->neg(f->mul(L[l], lj));
    } else {
      A.a[i][pos[i]] = f->one();
    }
  }
  MPoly<K> G = substitute_linear(F, A);
  ExtractResult<K> res;
  if (G.is_zero()) throw PolyError("extract_coordinate_power: zero polynomial");
  int val = kMaxDegree + 1;
  for (auto& [mo, c] : G.terms()) val = std::min(val, mono::exp(mo, 0));
  res.valuation = val;
  if (val < m) return res;
  MPoly<K> Q(f, n);
  Mono sh = static_cast<Mono>(m) << mono::shift(0) | static_cast<Mono>(m) << 40;
  for (auto& [mo, c] : G.terms()) Q.add_term(mo - sh, c);
  LinearChange<K> B{f, std::vector<std::vector<E>>(n, std::vector<E>(n, f->zero()))};
  for (int l = 0; l < n; ++l) B.a[0][l] = L[l];
  for (int i = 0; i < n; ++i)
    if (i != j) B.a[pos[i]][i] = f->one();
  res.ok = true;
  res.quotient = substitute_linear(Q, B);
  return res;
}

// ---- text format ----

template <class K>
std::string coeff_text(const K& f, const typename K::elem& c);
template <class K>
typename K::elem parse_coeff(const K& f, const std::string& s);

template <>
inline std::string coeff_text(const FiniteField& f, const uint64_t& c) {
  return std::to_string(f.index(c));
}
template <>
inline std::string coeff_text(const Rationals&, const mpq_class& c) {
  return c.get_str();
}
template <>
inline uint64_t parse_coeff(const FiniteField& f, const std::string& s) {
  size_t used = 0;
  uint64_t v = std::stoull(s, &used);
  if (used != s.size() || v >= f.q()) throw PolyError("bad coefficient '" + s + "'");
  return f.from_index(v);
}
template <>
inline mpq_class parse_coeff(const Rationals&, const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw PolyError("bad coefficient '" + s + "'");
  if (q.get_den() == 0) throw PolyError("zero denominator");
  mpq_class c = q;
  c.canonicalize();
  if (c.get_str() != s) throw PolyError("non-canonical rational '" + s + "'");
  return c;
}

template <class K>
std::string to_text(const MPoly<K>& F) {
  std::ostringstream s;
  s << "vars=" << F.nvars() << " degree=" << F.degree() << " field=" << F.field().name() << '\n';
  for (auto it = F.terms().rbegin(); it != F.terms().rend(); ++it) {
    for (int i = 0; i < F.nvars(); ++i) s << (i ? " " : "") << mono::exp(it->first, i);
    s << " : " << coeff_text(F.field(), it->second) << '\n';
  }
  return s.str();
}

// header of a polynomial file: (nvars, degree, field spec string)
std::tuple<int, int, std::string> parse_poly_header(const std::string& text);

template <class K>
MPoly<K> from_text(const std::string& text, std::shared_ptr<const K> f) {
  auto [n, d, fs] = parse_poly_header(text);
  if (fs != f->name()) throw PolyError("field mismatch: file has " + fs + ", expected " + f->name());
  MPoly<K> F(f, n);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw PolyError("malformed term line '" + line + "'");
    std::istringstream es(line.substr(0, colon));
    std::vector<int> e;
    for (int v; es >> v;) e.push_back(v);
    if (static_cast<int>(e.size()) != n) throw PolyError("exponent count mismatch in '" + line + "'");
    std::string c = line.substr(colon + 1);
    c.erase(0, c.find_first_not_of(' '));
    c.erase(c.find_last_not_of(" \r") + 1);
    Mono m = mono::make(e);
    if (F.terms().count(m)) throw PolyError("duplicate monomial");
    F.add_term(m, parse_coeff(*f, c));
  }
  if (F.degree() != d) throw PolyError("degree mismatch with header");
  return F;
}

}  // namespace coble
