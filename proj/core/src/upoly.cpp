#include "coble/upoly.hpp"

#include <algorithm>
#include <random>

namespace coble::upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

UPoly add(const FiniteField& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly sub(const FiniteField& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPoly mul(const FiniteField& f, const UPoly& a, const UPoly& b) {
  int da = deg(a), db = deg(b);
  if (da < 0 || db < 0) return {};
  UPoly r(da + db + 1, 0);
  for (int i = 0; i <= da; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j <= db; ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void divrem(const FiniteField& f, UPoly a, const UPoly& m, UPoly& quot, UPoly& rem) {
  int dm = deg(m);
  if (dm < 0) throw FieldError("polynomial division by zero");
  trim(a);
  int da = deg(a);
  quot.assign(da >= dm ? da - dm + 1 : 0, 0);
  E li = f.inv(m[dm]);
  for (int i = da; i >= dm; --i) {
    E c = a[i];
    if (!c) continue;
    c = f.mul(c, li);
    quot[i - dm] = c;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = f.sub(a[i - dm + j], f.mul(c, m[j]));
  }
  trim(a);
  trim(quot);
  rem = std::move(a);
}

UPoly mod(const FiniteField& f, UPoly a, const UPoly& m) {
  int dm = deg(m);
  if (dm < 0) throw FieldError("polynomial division by zero");
  trim(a);
  E li = f.inv(m[dm]);
  for (int i = deg(a); i >= dm; --i) {
    E c = a[i];
    if (!c) continue;
    c = f.mul(c, li);
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = f.sub(a[i - dm + j], f.mul(c, m[j]));
  }
  trim(a);
  return a;
}

UPoly monic(const FiniteField& f, UPoly a) {
  trim(a);
  if (a.empty()) return a;
  E li = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, li);
  return a;
}

UPoly gcd(const FiniteField& f, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = mod(f, std::move(a), b);
    std::swap(a, b);
  }
  return monic(f, std::move(a));
}

UPoly powmod(const FiniteField& f, UPoly base, uint64_t e, const UPoly& m) {
  UPoly r = {1};
  base = mod(f, std::move(base), m);
  r = mod(f, r, m);
  for (; e; e >>= 1) {
    if (e & 1) r = mod(f, mul(f, r, base), m);
    if (e > 1) base = mod(f, mul(f, base, base), m);
  }
  return r;
}

E eval(const FiniteField& f, const UPoly& a, E x) {
  E r = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = f.add(f.mul(r, x), a[i]);
  return r;
}

UPoly derivative(const FiniteField& f, const UPoly& a) {
  UPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(f.from_int(static_cast<int64_t>(i)), a[i]));
  trim(r);
  return r;
}

namespace {

void split(const FiniteField& f, const UPoly& g, std::mt19937_64& rng, std::vector<E>& out) {
  int d = deg(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f.neg(f.div(g[0], g[1])));
    return;
  }
  uint64_t half = (f.q() - 1) / 2;
  for (;;) {
    UPoly t = powmod(f, {f.random(rng), 1}, half, g);
    t = sub(f, t, {1});
    UPoly h = gcd(f, g, t);
    int dh = deg(h);
    if (dh > 0 && dh < d) {
      UPoly qq, rr;
      divrem(f, g, h, qq, rr);
      split(f, h, rng, out);
      split(f, qq, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<E> roots(const FiniteField& f, const UPoly& a_in) {
  UPoly a = a_in;
  trim(a);
  if (a.empty()) throw FieldError("zero polynomial: every element is a root");
  std::vector<E> out;
  if (deg(a) == 0) return out;
  if (f.q() <= 64 || f.p() == 2) {
    for (uint64_t i = 0; i < f.q(); ++i) {
      E x = f.from_index(i);
      if (eval(f, a, x) == 0) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  a = monic(f, a);
  UPoly xq = powmod(f, {0, 1}, f.q(), a);
  UPoly g = gcd(f, a, sub(f, xq, {0, 1}));
  std::mt19937_64 rng(0x5eed);
  split(f, g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coble::upoly
