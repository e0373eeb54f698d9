#include "coble/dualscan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "coble/upoly.hpp"

namespace coble {

Point normalize(const FiniteField& f, Point v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) {
      if (v[i] == 1) return v;
      auto inv = f.inv(v[i]);
      for (size_t j = i; j < v.size(); ++j) v[j] = f.mul(v[j], inv);
      return v;
    }
  return v;
}

// ---------------------------------------------------------------------------
// sampling

PointSampler::PointSampler(const FPoly& F, uint64_t seed) : F_(F), grad_(F.gradient()), rng_(seed) {
  if (F.is_zero()) throw SamplingError("cannot sample the zero polynomial");
}

bool PointSampler::next(Point& pt, Point& grad) {
  const auto& f = F_.field();
  int n = F_.nvars(), D = F_.degree();
  while (pending_.empty()) {
    if (lines_ >= budget_) return false;
    ++lines_;
    int j = static_cast<int>(rng_() % n);
    Point x(n);
    for (auto& c : x) c = f.random(rng_);
    std::vector<std::vector<Elem>> pw(n, std::vector<Elem>(D + 1));
    for (int i = 0; i < n; ++i) {
      pw[i][0] = 1;
      for (int e = 1; e <= D; ++e) pw[i][e] = f.mul(pw[i][e - 1], x[i]);
    }
    upoly::UPoly u(D + 1, 0);
    for (auto& [m, c] : F_.terms()) {
      Elem v = c;
      for (int i = 0; i < n; ++i) {
        int e = mono::exp(m, i);
        if (e && i != j) v = f.mul(v, pw[i][e]);
      }
      int ej = mono::exp(m, j);
      u[ej] = f.add(u[ej], v);
    }
    upoly::trim(u);
    if (u.empty()) continue;  // line inside the hypersurface
    for (auto r : upoly::roots(f, u)) {
      x[j] = r;
      Point g(n);
      bool nz = false;
      for (int i = 0; i < n; ++i) {
        g[i] = grad_[i].evaluate(x);
        nz = nz || g[i];
      }
      if (!nz) continue;
      Point p = normalize(f, x);
      if (!seen_.insert(p).second) continue;
      pending_.emplace_back(std::move(p), normalize(f, g));
    }
  }
  pt = std::move(pending_.front().first);
  grad = std::move(pending_.front().second);
  pending_.erase(pending_.begin());
  return true;
}

HypersurfaceSamples sample_points(const FPoly& F, size_t count, uint64_t seed) {
  HypersurfaceSamples hs{F, seed, {}};
  PointSampler s(F, seed);
  s.set_line_budget(10 * std::max<size_t>(count, 1));
  Point p, g;
  while (hs.pairs.size() < count) {
    if (!s.next(p, g))
      throw SamplingError("found only " + std::to_string(hs.pairs.size()) + " of " + std::to_string(count) +
                          " smooth points after " + std::to_string(s.lines_tried()) +
                          " lines; the hypersurface may be degenerate over " + F.field().name());
    hs.pairs.emplace_back(p, g);
  }
  return hs;
}

// ---------------------------------------------------------------------------
// interpolation

MonomialEvaluator::MonomialEvaluator(int nvars, int degree) : n_(nvars), d_(degree) {
  std::vector<Mono> prev = {0};
  steps_.resize(d_ + 1);
  for (int k = 1; k <= d_; ++k) {
    auto cur = monomial_basis(n_, k);
    std::unordered_map<Mono, uint32_t> pos;
    for (size_t i = 0; i < prev.size(); ++i) pos[prev[i]] = static_cast<uint32_t>(i);
    for (auto m : cur) {
      int v = 0;
      while (!mono::exp(m, v)) ++v;
      steps_[k].push_back({pos.at(m - mono::var(v)), static_cast<uint8_t>(v)});
    }
    prev = std::move(cur);
  }
  basis_ = d_ == 0 ? std::vector<Mono>{0} : prev;
}

void MonomialEvaluator::eval(const FiniteField& f, const Point& x, std::vector<Elem>& out) const {
  std::vector<Elem> prev = {1}, cur;
  for (int k = 1; k <= d_; ++k) {
    cur.resize(steps_[k].size());
    for (size_t i = 0; i < cur.size(); ++i) cur[i] = f.mul(prev[steps_[k][i].first], x[steps_[k][i].second]);
    std::swap(prev, cur);
  }
  out = std::move(prev);
}

std::vector<std::vector<Elem>> kernel(const FiniteField& f, const std::vector<Elem>& rows, size_t nrows, size_t ncols) {
  if (f.k() == 1 && f.p() < (1u << 24)) {
    auto e = nullspace_modp(rows, nrows, ncols, f.p());
    std::vector<std::vector<Elem>> out;
    for (auto& v : e.nullspace) out.emplace_back(v.begin(), v.end());
    return out;
  }
  Matrix<FiniteField> M(FiniteField::extension(f.p(), f.modulus()), nrows, ncols);
  M.d = rows;
  return nullspace(M);
}

namespace {

size_t oversampled(double factor, size_t n) { return static_cast<size_t>(std::ceil(factor * static_cast<double>(n))); }

std::vector<std::vector<Elem>> degree_kernel(const FiniteField& f, const MonomialEvaluator& ev,
                                             const std::vector<Point>& imgs, size_t m) {
  size_t N = ev.basis().size();
  std::vector<Elem> rows(m * N), tmp;
  for (size_t r = 0; r < m; ++r) {
    ev.eval(f, imgs[r], tmp);
    std::copy(tmp.begin(), tmp.end(), rows.begin() + r * N);
  }
  return kernel(f, rows, m, N);
}

}  // namespace

DualResult dual_interpolate(const FPoly& F, const DualOptions& opt) {
  if (opt.oversample < 1.05) throw std::invalid_argument("dual_interpolate: oversample must be >= 1.05");
  const auto& f = F.field();
  int n = F.nvars();
  DualResult res;
  res.nullity.assign(opt.d_max + 1, -1);
  res.columns.assign(opt.d_max + 1, 0);
  res.rows.assign(opt.d_max + 1, 0);
  PointSampler S(F, opt.seed);
  // finite budgets: over a small field the curve may simply run out of points
  S.set_line_budget(20 * oversampled(std::max(opt.oversample, opt.witness_oversample),
                                     binomial(n + opt.d_max - 1, opt.d_max)) +
                    1000);
  std::vector<Point> imgs;
  auto need = [&](size_t m) {
    Point p, g;
    while (imgs.size() < m) {
      if (!S.next(p, g))
        throw SamplingError("sampler exhausted after " + std::to_string(imgs.size()) + " points over " + f.name());
      imgs.push_back(g);
    }
  };
  for (int d = 1; d <= opt.d_max; ++d) {
    MonomialEvaluator ev(n, d);
    size_t N = ev.basis().size(), m = oversampled(opt.oversample, N);
    need(m);
    auto ker = degree_kernel(f, ev, imgs, m);
    res.nullity[d] = static_cast<int>(ker.size());
    res.columns[d] = N;
    res.rows[d] = m;
    if (ker.empty()) continue;
    res.found = true;
    res.degree = d;
    res.dual = FPoly(F.field_ptr(), n);
    for (size_t i = 0; i < N; ++i) res.dual.add_term(ev.basis()[i], ker[0][i]);
    if (ker.size() > 1)
      res.warning = "nullspace dimension " + std::to_string(ker.size()) +
                    " at the first nontrivial degree: too few samples or the dual is not a hypersurface";
    if (d >= 2) {
      MonomialEvaluator ev2(n, d - 1);
      size_t m2 = oversampled(opt.witness_oversample, ev2.basis().size());
      need(m2);
      res.witness_nullity = static_cast<int>(degree_kernel(f, ev2, imgs, m2).size());
      res.witness_rows = m2;
    }
    res.samples = imgs.size();
    PointSampler H(F, opt.seed ^ 0x9E3779B97F4A7C15ULL);
    H.set_line_budget(20 * opt.heldout + 1000);
    Point p, g;
    bool ok = true;
    for (size_t i = 0; i < opt.heldout; ++i) {
      if (!H.next(p, g)) throw SamplingError("held-out sampler exhausted");
      if (res.dual.evaluate(g) != 0) ok = false;
      ++res.heldout;
    }
    res.verified = ok;
    if (!ok) res.warning += (res.warning.empty() ? "" : "; ") + std::string("candidate fails on held-out images");
    return res;
  }
  res.samples = imgs.size();
  res.warning = "degree exceeds d_max = " + std::to_string(opt.d_max);
  return res;
}

GaussResult gauss_class_count(const FPoly& F, size_t samples, uint64_t seed, int ext_degree) {
  GaussResult r;
  r.field = ext_degree == 1 ? F.field_ptr() : FiniteField::extension(F.field().p(), ext_degree);
  FPoly G = ext_degree == 1 ? F : lift(F, r.field);
  auto hs = sample_points(G, samples, seed);
  std::map<Point, size_t> cls;
  for (auto& [p, g] : hs.pairs) ++cls[g];
  for (auto& [g, c] : cls) {
    r.representatives.push_back(g);
    r.class_sizes.push_back(c);
  }
  r.classes = cls.size();
  return r;
}

// ---------------------------------------------------------------------------
// exhaustive scans

namespace {

struct Bivar {
  int D = 0;
  std::vector<Elem> c;  // c[eu*(D+1)+ev]
  Elem at(int eu, int ev) const { return c[eu * (D + 1) + ev]; }
  bool zero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }
  int vdeg() const {
    for (int ev = D; ev >= 0; --ev)
      for (int eu = 0; eu + ev <= D; ++eu)
        if (at(eu, ev)) return ev;
    return -1;
  }
  int tdeg() const {
    for (int t = D; t >= 0; --t)
      for (int eu = 0; eu <= t; ++eu)
        if (at(eu, t - eu)) return t;
    return -1;
  }
  upoly::UPoly in_v(const FiniteField& f, Elem u) const {
    upoly::UPoly h(D + 1, 0);
    for (int ev = 0; ev <= D; ++ev) {
      Elem s = 0, up = 1;
      for (int eu = 0; eu + ev <= D; ++eu) {
        s = f.add(s, f.mul(at(eu, ev), up));
        up = f.mul(up, u);
      }
      h[ev] = s;
    }
    upoly::trim(h);
    return h;
  }
  upoly::UPoly in_u(int ev) const {  // coefficient of v^ev as polynomial in u
    upoly::UPoly h;
    for (int eu = 0; eu + ev <= D; ++eu) h.push_back(at(eu, ev));
    upoly::trim(h);
    return h;
  }
};

Elem det_small(const FiniteField& f, std::vector<Elem> a, int s) {
  Elem det = 1;
  for (int c = 0; c < s; ++c) {
    int p = -1;
    for (int r = c; r < s; ++r)
      if (a[r * s + c]) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < s; ++j) std::swap(a[p * s + j], a[c * s + j]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c * s + c]);
    Elem inv = f.inv(a[c * s + c]);
    for (int r = c + 1; r < s; ++r) {
      if (!a[r * s + c]) continue;
      Elem m = f.mul(a[r * s + c], inv);
      for (int j = c; j < s; ++j) a[r * s + j] = f.sub(a[r * s + j], f.mul(m, a[c * s + j]));
    }
  }
  return det;
}

class PlaneSolver {
 public:
  explicit PlaneSolver(const FiniteField& f) : f_(f) {}

  // calls emit(u, v) for each common zero in F_q^2; returns false if the caller should stop
  template <class Emit>
  bool solve(const std::vector<Bivar>& all, uint64_t& fallbacks, Emit&& emit) {
    std::vector<const Bivar*> g;
    for (auto& b : all)
      if (!b.zero()) g.push_back(&b);
    uint64_t q = f_.q();
    if (g.empty()) {
      for (uint64_t i = 0; i < q; ++i)
        for (uint64_t j = 0; j < q; ++j)
          if (!emit(f_.from_index(i), f_.from_index(j))) return false;
      return true;
    }
    std::vector<Elem> cand;
    bool all_u = false;
    upoly::UPoly vfree;
    bool have_vfree = false;
    for (auto* b : g)
      if (b->vdeg() == 0) {
        vfree = have_vfree ? upoly::gcd(f_, vfree, b->in_u(0)) : b->in_u(0);
        have_vfree = true;
      }
    if (have_vfree) {
      if (upoly::deg(vfree) > 0) cand = upoly::roots(f_, vfree);
    } else {
      bool done = false;
      for (size_t i = 0; i < g.size() && !done; ++i)
        for (size_t j = i + 1; j < g.size() && !done; ++j) {
          upoly::UPoly R;
          if (!resultant(*g[i], *g[j], R)) continue;
          if (R.empty()) continue;
          cand = upoly::roots(f_, R);
          done = true;
        }
      if (!done) {
        all_u = true;
        ++fallbacks;
      }
    }
    auto try_u = [&](Elem u) {
      upoly::UPoly h;
      bool any = false;
      for (auto* b : g) {
        auto hv = b->in_v(f_, u);
        if (hv.empty()) continue;
        h = any ? upoly::gcd(f_, h, hv) : hv;
        any = true;
      }
      if (!any) {
        for (uint64_t j = 0; j < q; ++j)
          if (!emit(u, f_.from_index(j))) return false;
        return true;
      }
      if (upoly::deg(h) <= 0) return true;
      for (auto v : upoly::roots(f_, h))
        if (!emit(u, v)) return false;
      return true;
    };
    if (all_u) {
      for (uint64_t i = 0; i < q; ++i)
        if (!try_u(f_.from_index(i))) return false;
    } else {
      for (auto u : cand)
        if (!try_u(u)) return false;
    }
    return true;
  }

 private:
  // Res_v(A, B)(u) by evaluation at deg+1 nodes and interpolation; false if q too small
  bool resultant(const Bivar& A, const Bivar& B, upoly::UPoly& R) {
    int ma = A.vdeg(), mb = B.vdeg();
    int Da = A.tdeg(), Db = B.tdeg();
    int Dr = mb * Da + ma * Db - ma * mb;
    if (static_cast<uint64_t>(Dr) + 1 > f_.q()) return false;
    const auto& Vi = vinv(Dr);
    int s = ma + mb, n = Dr + 1;
    std::vector<Elem> vals(n), mat(s * s);
    for (int k = 0; k < n; ++k) {
      Elem u = f_.from_index(k);
      auto a = A.in_v(f_, u), b = B.in_v(f_, u);
      a.resize(ma + 1, 0);
      b.resize(mb + 1, 0);
      std::fill(mat.begin(), mat.end(), 0);
      for (int i = 0; i < mb; ++i)
        for (int t = 0; t <= ma; ++t) mat[i * s + i + t] = a[ma - t];
      for (int i = 0; i < ma; ++i)
        for (int t = 0; t <= mb; ++t) mat[(mb + i) * s + i + t] = b[mb - t];
      vals[k] = det_small(f_, mat, s);
    }
    R.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) R[i] = f_.add(R[i], f_.mul(Vi[i * n + k], vals[k]));
    upoly::trim(R);
    return true;
  }

  // inverse Vandermonde at nodes from_index(0..D)
  const std::vector<Elem>& vinv(int D) {
    auto it = vinv_.find(D);
    if (it != vinv_.end()) return it->second;
    int n = D + 1;
    std::vector<Elem> a(n * 2 * n, 0);
    for (int k = 0; k < n; ++k) {
      Elem x = f_.from_index(k), xp = 1;
      for (int i = 0; i < n; ++i) {
        a[k * 2 * n + i] = xp;
        xp = f_.mul(xp, x);
      }
      a[k * 2 * n + n + k] = 1;
    }
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (!a[p * 2 * n + c]) ++p;
      for (int j = 0; j < 2 * n; ++j) std::swap(a[p * 2 * n + j], a[c * 2 * n + j]);
      Elem inv = f_.inv(a[c * 2 * n + c]);
      for (int j = 0; j < 2 * n; ++j) a[c * 2 * n + j] = f_.mul(a[c * 2 * n + j], inv);
      for (int r = 0; r < n; ++r) {
        if (r == c || !a[r * 2 * n + c]) continue;
        Elem m = a[r * 2 * n + c];
        for (int j = 0; j < 2 * n; ++j) a[r * 2 * n + j] = f_.sub(a[r * 2 * n + j], f_.mul(m, a[c * 2 * n + j]));
      }
    }
    // V c = vals, V[k][i] = x_k^i  =>  c = V^{-1} vals
    std::vector<Elem> inv(n * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) inv[i * n + k] = a[i * 2 * n + n + k];
    return vinv_[D] = inv;
  }

  const FiniteField& f_;
  std::map<int, std::vector<Elem>> vinv_;
};

struct ChartTerm {
  uint8_t pe[2];
  uint8_t eu, ev;
  Elem c;
};

}  // namespace

ScanResult common_zeros(const std::vector<FPoly>& sys, const ScanOptions& opt) {
  ScanResult res;
  if (sys.empty()) throw std::invalid_argument("common_zeros: empty system");
  const auto& f = sys[0].field();
  int N = sys[0].nvars(), n = N - 1;
  if (n > 4) throw std::invalid_argument("common_zeros: ambient dimension must be <= 4");
  for (auto& g : sys)
    if (g.nvars() != N || !g.field().same(f)) throw std::invalid_argument("common_zeros: inconsistent system");
  uint64_t q = f.q();
  PlaneSolver solver(f);
  auto emit_point = [&](Point p) {
    res.points.push_back(std::move(p));
    if (res.points.size() > opt.max_points) {
      res.truncated = true;
      return false;
    }
    return true;
  };
  for (int c = 0; c <= n; ++c) {
    int m = n - c;
    if (m == 0) {
      Point e(N, 0);
      e[c] = 1;
      bool z = true;
      for (auto& g : sys) z = z && g.evaluate(e) == 0;
      if (z && !emit_point(e)) return res;
      continue;
    }
    if (m == 1) {
      upoly::UPoly h;
      bool any = false;
      for (auto& g : sys) {
        upoly::UPoly u(std::max(g.degree(), 0) + 1, 0);
        for (auto& [mo, co] : g.terms()) {
          bool skip = false;
          for (int i = 0; i < c; ++i) skip = skip || mono::exp(mo, i);
          if (skip) continue;
          int e = mono::exp(mo, n);
          u[e] = f.add(u[e], co);
        }
        upoly::trim(u);
        if (u.empty()) continue;
        h = any ? upoly::gcd(f, h, u) : u;
        any = true;
      }
      std::vector<Elem> ts;
      if (!any) {
        for (uint64_t i = 0; i < q; ++i) ts.push_back(f.from_index(i));
      } else if (upoly::deg(h) > 0) {
        ts = upoly::roots(f, h);
      }
      for (auto t : ts) {
        Point p(N, 0);
        p[c] = 1;
        p[n] = t;
        if (!emit_point(p)) return res;
      }
      continue;
    }
    int npre = m - 2;
    uint64_t prefixes = 1;
    for (int i = 0; i < npre; ++i) prefixes *= q;
    if (prefixes > opt.budget / q)
      throw ScanBudgetError("scan budget exceeded: need " + std::to_string(prefixes) + " fibers over a field of " +
                                std::to_string(q) + " elements",
                            prefixes * q);
    std::vector<std::vector<ChartTerm>> terms(sys.size());
    std::vector<int> Dg(sys.size());
    for (size_t gi = 0; gi < sys.size(); ++gi) {
      Dg[gi] = std::max(sys[gi].degree(), 0);
      for (auto& [mo, co] : sys[gi].terms()) {
        bool skip = false;
        for (int i = 0; i < c; ++i) skip = skip || mono::exp(mo, i);
        if (skip) continue;
        ChartTerm t{{0, 0}, static_cast<uint8_t>(mono::exp(mo, n - 1)), static_cast<uint8_t>(mono::exp(mo, n)), co};
        for (int k = 0; k < npre; ++k) t.pe[k] = static_cast<uint8_t>(mono::exp(mo, c + 1 + k));
        terms[gi].push_back(t);
      }
    }
    int Dmax = *std::max_element(Dg.begin(), Dg.end());
    std::vector<Bivar> biv(sys.size());
    for (size_t gi = 0; gi < sys.size(); ++gi) {
      biv[gi].D = Dg[gi];
      biv[gi].c.assign((Dg[gi] + 1) * (Dg[gi] + 1), 0);
    }
    std::vector<std::vector<Elem>> pw(2, std::vector<Elem>(Dmax + 1, 1));
    for (uint64_t pi = 0; pi < prefixes; ++pi) {
      Point pre(npre);
      uint64_t t = pi;
      for (int k = npre - 1; k >= 0; --k) {
        pre[k] = f.from_index(t % q);
        t /= q;
      }
      for (int k = 0; k < npre; ++k)
        for (int e = 1; e <= Dmax; ++e) pw[k][e] = f.mul(pw[k][e - 1], pre[k]);
      for (size_t gi = 0; gi < sys.size(); ++gi) {
        auto& B = biv[gi];
        std::fill(B.c.begin(), B.c.end(), 0);
        for (auto& tm : terms[gi]) {
          Elem v = tm.c;
          if (npre > 0 && tm.pe[0]) v = f.mul(v, pw[0][tm.pe[0]]);
          if (npre > 1 && tm.pe[1]) v = f.mul(v, pw[1][tm.pe[1]]);
          auto& slot = B.c[tm.eu * (B.D + 1) + tm.ev];
          slot = f.add(slot, v);
        }
      }
      ++res.fibers;
      bool go = solver.solve(biv, res.fallbacks, [&](Elem u, Elem v) {
        Point p(N, 0);
        p[c] = 1;
        for (int k = 0; k < npre; ++k) p[c + 1 + k] = pre[k];
        p[n - 1] = u;
        p[n] = v;
        return emit_point(std::move(p));
      });
      if (!go) return res;
    }
  }
  return res;
}

ScanResult singular_scan(const FPoly& F, const FieldPtr& field, const ScanOptions& opt) {
  FPoly G = field->same(F.field()) ? F : lift(F, field);
  return common_zeros(G.gradient(), opt);
}

namespace {

struct CompiledSystem {
  int n;
  int D;
  std::vector<std::vector<std::pair<std::vector<uint8_t>, Elem>>> polys;
  explicit CompiledSystem(const std::vector<FPoly>& sys) : n(sys[0].nvars()), D(0) {
    for (auto& g : sys) {
      D = std::max(D, g.degree());
      std::vector<std::pair<std::vector<uint8_t>, Elem>> t;
      for (auto& [m, c] : g.terms()) {
        std::vector<uint8_t> e(n);
        for (int i = 0; i < n; ++i) e[i] = static_cast<uint8_t>(mono::exp(m, i));
        t.emplace_back(e, c);
      }
      polys.push_back(std::move(t));
    }
  }
  bool all_zero(const FiniteField& f, const Point& x, std::vector<Elem>& pw) const {
    int w = D + 1;
    pw.assign(n * w, 1);
    for (int i = 0; i < n; ++i)
      for (int e = 1; e <= D; ++e) pw[i * w + e] = f.mul(pw[i * w + e - 1], x[i]);
    for (auto& t : polys) {
      Elem s = 0;
      for (auto& [e, c] : t) {
        Elem v = c;
        for (int i = 0; i < n; ++i)
          if (e[i]) v = f.mul(v, pw[i * w + e[i]]);
        s = f.add(s, v);
      }
      if (s) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Point> singular_scan_bruteforce(const FPoly& F, const FieldPtr& field) {
  FPoly G = field->same(F.field()) ? F : lift(F, field);
  CompiledSystem cs(G.gradient());
  const auto& f = *field;
  int N = G.nvars();
  uint64_t q = f.q();
  std::vector<Point> out;
  std::vector<Elem> pw;
  // normalize on the last nonzero coordinate, enumerate the leading ones
  for (int l = N - 1; l >= 0; --l) {
    uint64_t total = 1;
    for (int i = 0; i < l; ++i) total *= q;
    Point x(N, 0);
    x[l] = 1;
    for (uint64_t idx = 0; idx < total; ++idx) {
      uint64_t t = idx;
      for (int i = 0; i < l; ++i) {
        x[i] = f.from_index(t % q);
        t /= q;
      }
      if (cs.all_zero(f, x, pw)) out.push_back(normalize(f, x));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

bool irreducible_looking(const FPoly& G, std::mt19937_64& rng, int planes) {
  const auto& f = G.field_ptr();
  auto f2 = FiniteField::extension(f->p(), 2), f3 = FiniteField::extension(f->p(), 3);
  for (int t = 0; t < planes; ++t) {
    LinearChange<FiniteField> A{f, std::vector<std::vector<Elem>>(G.nvars(), std::vector<Elem>(3))};
    for (auto& row : A.a)
      for (auto& c : row) c = f->random(rng);
    auto C = substitute_linear(G, A);
    if (C.is_zero()) continue;
    if (singular_scan(C, f2, {uint64_t{1} << 40, 0}).points.empty() &&
        singular_scan(C, f3, {uint64_t{1} << 40, 0}).points.empty())
      return true;
  }
  return false;
}

AlphaSearch find_special_alpha(uint32_t p, uint64_t seed, uint64_t max_candidates) {
  if (p % 3 != 1)
    throw FieldError("find_special_alpha: p = " + std::to_string(p) + " is not congruent to 1 mod 3");
  if (p > 64) throw FieldError("find_special_alpha: p must be <= 64 for the exhaustive scan");
  auto f = FiniteField::prime(p);
  auto f2 = FiniteField::extension(p, 2);
  AlphaSearch res;
  res.field = f;
  std::mt19937_64 rng(seed);
  for (res.candidates = 1; res.candidates <= max_candidates; ++res.candidates) {
    Point a(5);
    do {
      for (auto& c : a) c = f->random(rng);
    } while (std::all_of(a.begin(), a.end(), [](Elem e) { return e == 0; }));
    a = normalize(*f, a);
    CobleParams<FiniteField> cp{f, {a[0], a[1], a[2], a[3], a[4]}};
    auto S = segre_restriction(cp);
    auto scan = singular_scan(S, f2, {uint64_t{1} << 40, 10});
    if (scan.truncated || scan.points.size() != 10) continue;
    if (!irreducible_looking(build_cubic(cp), rng)) continue;
    res.found = true;
    res.alpha = cp.alpha;
    res.nodes = scan.points.size();
    return res;
  }
  res.candidates = max_candidates;
  return res;
}

HyperplaneFit hyperplane_fit(const FiniteField& f, const std::vector<Point>& pts) {
  HyperplaneFit r;
  if (pts.empty()) return r;
  size_t n = pts[0].size();
  std::vector<Elem> rows;
  for (auto& p : pts) rows.insert(rows.end(), p.begin(), p.end());
  auto ker = kernel(f, rows, pts.size(), n);
  r.dim = static_cast<int>(ker.size());
  if (r.dim == 1) {
    r.ok = true;
    r.form = normalize(f, ker[0]);
  }
  return r;
}

MajorityFit majority_hyperplane(const FiniteField& f, const std::vector<Point>& pts, uint64_t seed, int trials) {
  MajorityFit out;
  if (pts.empty()) return out;
  size_t n = pts[0].size();
  std::mt19937_64 rng(seed);
  std::vector<Elem> best;
  size_t best_count = 0;
  auto on = [&](const std::vector<Elem>& L, const Point& p) {
    Elem s = 0;
    for (size_t i = 0; i < n; ++i) s = f.add(s, f.mul(L[i], p[i]));
    return s == 0;
  };
  for (int t = 0; t < trials && pts.size() >= n - 1; ++t) {
    std::vector<Point> sub;
    for (size_t k = 0; k + 1 < n; ++k) sub.push_back(pts[rng() % pts.size()]);
    auto fit = hyperplane_fit(f, sub);
    if (!fit.ok) continue;
    size_t cnt = 0;
    for (auto& p : pts) cnt += on(fit.form, p);
    if (cnt > best_count) {
      best_count = cnt;
      best = fit.form;
    }
  }
  if (best.empty()) return out;
  for (auto& p : pts) (on(best, p) ? out.inliers : out.outliers).push_back(p);
  out.fit = hyperplane_fit(f, out.inliers);
  return out;
}

BidualResult biduality_check(const FPoly& F, int d_max, uint64_t seed) {
  BidualResult r;
  DualOptions o;
  o.d_max = d_max;
  o.seed = seed;
  r.dual = dual_interpolate(F, o);
  if (!r.dual.found) return r;
  o.seed = seed + 1;
  r.bidual = dual_interpolate(r.dual.dual, o);
  r.proportional = r.bidual.found && r.bidual.dual.proportional(F);
  return r;
}

}  // namespace coble
