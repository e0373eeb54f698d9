#include "coble/fields.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

#include "coble/upoly.hpp"

namespace coble {

bool is_prime_u32(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> r;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      r.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) r.push_back(n);
  return r;
}

std::mutex cache_mu;
std::map<std::string, std::shared_ptr<const FiniteField>>& field_cache() {
  static std::map<std::string, std::shared_ptr<const FiniteField>> c;
  return c;
}

std::string cache_key(uint32_t p, const std::vector<uint32_t>& m) {
  std::ostringstream s;
  s << p << ':';
  for (auto c : m) s << c << ',';
  return s.str();
}

bool irreducible_over_prime(uint32_t p, const std::vector<uint32_t>& m) {
  auto fp = FiniteField::prime(p);
  upoly::UPoly f(m.begin(), m.end());
  int k = static_cast<int>(m.size()) - 1;
  if (k == 1) return true;
  // gcd(x^(p^i) - x, f) = 1 for i <= k/2
  upoly::UPoly xp = {0, 1};
  for (int i = 1; i <= k / 2; ++i) {
    xp = upoly::powmod(*fp, xp, p, f);
    auto h = upoly::sub(*fp, xp, {0, 1});
    auto g = upoly::gcd(*fp, f, h);
    if (upoly::deg(g) != 0) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::prime(uint32_t p) {
  return extension(p, std::vector<uint32_t>{0, 1});
}

std::shared_ptr<const FiniteField> FiniteField::extension(uint32_t p, int k) {
  if (k < 1) throw FieldError("extension degree must be >= 1");
  if (k == 1) return prime(p);
  if (!is_prime_u32(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  // (c_{k-1}, ..., c_0) in lexicographic order
  for (uint64_t n = 0; n < total; ++n) {
    std::vector<uint32_t> m(k + 1);
    m[k] = 1;
    uint64_t t = n;
    for (int i = 0; i < k; ++i) {
      m[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    if (m[0] == 0) continue;
    if (irreducible_over_prime(p, m)) return extension(p, m);
  }
  throw FieldError("no irreducible polynomial found");
}

std::shared_ptr<const FiniteField> FiniteField::extension(uint32_t p, std::vector<uint32_t> modulus) {
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = field_cache().find(cache_key(p, modulus));
    if (it != field_cache().end()) return it->second;
  }
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw FieldError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  if (modulus.size() < 2 || modulus.back() != 1) throw FieldError("extension modulus must be monic");
  for (auto c : modulus)
    if (c >= p) throw FieldError("modulus coefficient out of range");
  if (modulus.size() > 2 && !irreducible_over_prime(p, modulus))
    throw FieldError("extension modulus is reducible");
  std::shared_ptr<const FiniteField> f(new FiniteField(p, modulus));
  std::lock_guard<std::mutex> lk(cache_mu);
  auto& slot = field_cache()[cache_key(p, modulus)];
  if (!slot) slot = f;
  return slot;
}

FiniteField::FiniteField(uint32_t p, std::vector<uint32_t> modulus)
    : p_(p), k_(static_cast<int>(modulus.size()) - 1), mod_(std::move(modulus)) {
  w_ = std::max(1, static_cast<int>(std::bit_width(p_ - 1)));
  mask_ = (uint64_t{1} << w_) - 1;
  if (w_ * k_ > 62) throw FieldError("extension too large for packed representation");
  q_ = 1;
  for (int i = 0; i < k_; ++i) {
    if (q_ > (uint64_t{1} << 62) / p_) throw FieldError("field too large");
    q_ *= p_;
  }
  if (k_ > 1 && q_ <= (1u << 16) && w_ * k_ <= 20) build_tables();
}

void FiniteField::build_tables() {
  auto facs = prime_factors(q_ - 1);
  elem g = 0;
  for (uint64_t i = 2; i < q_ && !g; ++i) {
    elem c = from_index(i);
    bool prim = true;
    for (auto r : facs) {
      elem t = 1, b = c;
      for (uint64_t e = (q_ - 1) / r; e; e >>= 1, b = mul_slow(b, b))
        if (e & 1) t = mul_slow(t, b);
      if (t == 1) {
        prim = false;
        break;
      }
    }
    if (prim) g = c;
  }
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(size_t{1} << (w_ * k_), 0);
  elem x = 1;
  for (uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = exp_[i + q_ - 1] = static_cast<uint32_t>(x);
    log_[x] = static_cast<uint32_t>(i);
    x = mul_slow(x, g);
  }
}

FiniteField::elem FiniteField::mul_slow(elem a, elem b) const {
  uint64_t ca[16], cb[16], t[32] = {0};
  for (int i = 0; i < k_; ++i) {
    ca[i] = (a >> (w_ * i)) & mask_;
    cb[i] = (b >> (w_ * i)) & mask_;
  }
  for (int i = 0; i < k_; ++i) {
    if (!ca[i]) continue;
    for (int j = 0; j < k_; ++j) t[i + j] = (t[i + j] + ca[i] * cb[j]) % p_;
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    uint64_t c = t[i];
    if (!c) continue;
    for (int j = 0; j < k_; ++j)
      if (mod_[j]) t[i - k_ + j] = (t[i - k_ + j] + c * (p_ - mod_[j])) % p_;
  }
  elem r = 0;
  for (int i = 0; i < k_; ++i) r |= t[i] << (w_ * i);
  return r;
}

FiniteField::elem FiniteField::inv(elem a) const {
  if (a == 0) throw FieldError("division by zero in " + name());
  if (k_ == 1) {
    int64_t r0 = p_, r1 = static_cast<int64_t>(a), s0 = 0, s1 = 1;
    while (r1) {
      int64_t qq = r0 / r1;
      std::swap(r0, r1);
      r1 -= qq * r0;
      std::swap(s0, s1);
      s1 -= qq * s0;
    }
    return from_int(s0);
  }
  if (!log_.empty()) return exp_[(q_ - 1) - log_[a]];
  return pow(a, q_ - 2);
}

FiniteField::elem FiniteField::pow(elem a, uint64_t e) const {
  elem r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

FiniteField::elem FiniteField::from_coeffs(const std::vector<uint32_t>& c) const {
  if (static_cast<int>(c.size()) > k_) throw FieldError("too many coefficients for " + name());
  elem r = 0;
  for (size_t i = 0; i < c.size(); ++i) r |= static_cast<uint64_t>(c[i] % p_) << (w_ * i);
  return r;
}

std::vector<uint32_t> FiniteField::coeffs(elem a) const {
  std::vector<uint32_t> c(k_);
  for (int i = 0; i < k_; ++i) c[i] = static_cast<uint32_t>((a >> (w_ * i)) & mask_);
  return c;
}

uint64_t FiniteField::index(elem a) const {
  if (k_ == 1) return a;
  uint64_t r = 0;
  for (int i = k_ - 1; i >= 0; --i) r = r * p_ + ((a >> (w_ * i)) & mask_);
  return r;
}

FiniteField::elem FiniteField::from_index(uint64_t i) const {
  if (k_ == 1) return i % p_;
  elem r = 0;
  for (int j = 0; j < k_; ++j) {
    r |= (i % p_) << (w_ * j);
    i /= p_;
  }
  return r;
}

std::string FiniteField::name() const {
  std::ostringstream s;
  if (k_ == 1) {
    s << "GF(" << p_ << ")";
  } else {
    s << "GF(" << p_ << '^' << k_ << ';';
    for (size_t i = 0; i < mod_.size(); ++i) s << (i ? "," : "") << mod_[i];
    s << ')';
  }
  return s.str();
}

std::shared_ptr<const Rationals> Rationals::get() {
  static auto q = std::make_shared<const Rationals>();
  return q;
}

// ---------------------------------------------------------------------------

FieldSpec FieldSpec::prime_field(uint32_t p) { return of(*FiniteField::prime(p)); }
FieldSpec FieldSpec::extension_field(uint32_t p, int k) { return of(*FiniteField::extension(p, k)); }

FieldSpec FieldSpec::of(const FiniteField& f) {
  FieldSpec s;
  s.kind = f.k() == 1 ? Kind::prime : Kind::extension;
  s.p = f.p();
  s.k = f.k();
  s.modulus = f.modulus();
  return s;
}

FieldSpec FieldSpec::parse(const std::string& str) {
  if (str == "Q") return rational();
  auto fail = [&] { return FieldError("unparseable field spec '" + str + "'"); };
  if (str.rfind("GF(", 0) != 0 || str.back() != ')') throw fail();
  std::string body = str.substr(3, str.size() - 4);
  std::string mod;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    mod = body.substr(semi + 1);
    body = body.substr(0, semi);
  }
  uint64_t p = 0;
  int k = 1;
  try {
    auto caret = body.find('^');
    p = std::stoull(body.substr(0, caret));
    if (caret != std::string::npos) k = std::stoi(body.substr(caret + 1));
  } catch (const std::exception&) {
    throw fail();
  }
  if (p >= (1ull << 31)) throw fail();
  if (mod.empty()) return k == 1 ? prime_field(static_cast<uint32_t>(p)) : extension_field(static_cast<uint32_t>(p), k);
  std::vector<uint32_t> m;
  std::stringstream ss(mod);
  for (std::string tok; std::getline(ss, tok, ',');) m.push_back(static_cast<uint32_t>(std::stoul(tok)));
  if (static_cast<int>(m.size()) != k + 1) throw fail();
  return of(*FiniteField::extension(static_cast<uint32_t>(p), m));
}

FieldPtr FieldSpec::finite_field() const {
  if (!finite()) throw FieldError("Q is not a finite field");
  return FiniteField::extension(p, modulus);
}

std::string FieldSpec::str() const {
  if (!finite()) return "Q";
  return finite_field()->name();
}

FieldElem FieldElem::from_int(const FieldSpec& f, int64_t n) {
  if (!f.finite()) return rational(mpq_class(static_cast<long>(n)));
  return {f, f.finite_field()->from_int(n)};
}

FieldElem FieldElem::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return {FieldSpec::rational(), c};
}

std::string FieldElem::str() const {
  if (!field.finite()) return std::get<mpq_class>(v).get_str();
  return std::to_string(field.finite_field()->index(std::get<uint64_t>(v)));
}

bool FieldElem::operator==(const FieldElem& o) const { return field == o.field && v == o.v; }

FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  if (!(a.field == b.field))
    throw FieldError("mixed-field operands: " + a.field.str() + " vs " + b.field.str());
  if (!a.field.finite()) {
    auto& x = std::get<mpq_class>(a.v);
    auto& y = std::get<mpq_class>(b.v);
    const auto& Q = *Rationals::get();
    switch (op) {
      case ArithOp::add: return FieldElem::rational(x + y);
      case ArithOp::sub: return FieldElem::rational(x - y);
      case ArithOp::mul: return FieldElem::rational(x * y);
      case ArithOp::div: return FieldElem::rational(Q.div(x, y));
    }
  }
  auto f = a.field.finite_field();
  auto x = std::get<uint64_t>(a.v), y = std::get<uint64_t>(b.v);
  switch (op) {
    case ArithOp::add: return {a.field, f->add(x, y)};
    case ArithOp::sub: return {a.field, f->sub(x, y)};
    case ArithOp::mul: return {a.field, f->mul(x, y)};
    case ArithOp::div: return {a.field, f->div(x, y)};
  }
  throw FieldError("unknown operation");
}

FieldElem inverse(const FieldElem& a) { return arith(FieldElem::from_int(a.field, 1), a, ArithOp::div); }

FiniteField::elem cube_root_of_unity(const FiniteField& f) {
  if (f.p() % 3 != 1)
    throw FieldError("no primitive cube root of unity in " + f.name() + ": p = " + std::to_string(f.p()) +
                     " is not congruent to 1 mod 3");
  for (uint64_t w = 2; w < f.p(); ++w)
    if (w * w % f.p() * w % f.p() == 1) return f.from_int(static_cast<int64_t>(w));
  throw FieldError("cube root of unity not found");
}

std::vector<FiniteField::elem> univariate_roots(const std::vector<FiniteField::elem>& c, const FiniteField& f) {
  return upoly::roots(f, c);
}

}  // namespace coble
