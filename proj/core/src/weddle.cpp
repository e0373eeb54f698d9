#include "coble/weddle.hpp"

#include <algorithm>
#include <set>

namespace coble::weddle {

namespace {

bool coplanar(const FiniteField& f, const std::array<const Point*, 4>& q) {
  std::vector<Elem> rows;
  for (auto* p : q) rows.insert(rows.end(), p->begin(), p->end());
  return !kernel(f, rows, 4, 4).empty();
}

Point lift_point(const FiniteField& ext, const Point& p) {
  Point r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = ext.from_int(static_cast<int64_t>(p[i]));
  return r;
}

}  // namespace

SixPoints SixPoints::make(FieldPtr f, const std::array<Point, 6>& pts) {
  SixPoints s{f, {}, false};
  for (int i = 0; i < 6; ++i) {
    if (pts[i].size() != 4) throw std::invalid_argument("points must have 4 coordinates");
    s.pts[i] = normalize(*f, pts[i]);
    if (std::all_of(s.pts[i].begin(), s.pts[i].end(), [](Elem e) { return e == 0; }))
      throw GeneralPositionError("point " + std::to_string(i) + " is zero", {i});
  }
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d)
          if (coplanar(*f, {&s.pts[a], &s.pts[b], &s.pts[c], &s.pts[d]}))
            throw GeneralPositionError("points " + std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + "," + std::to_string(d) + " are coplanar",
                                       {a, b, c, d});
  s.general_position = true;
  return s;
}

SixPoints SixPoints::twisted_cubic(FieldPtr f, const std::array<Elem, 6>& t) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (t[i] == t[j]) throw std::invalid_argument("twisted cubic parameters must be distinct");
  std::array<Point, 6> pts;
  for (int i = 0; i < 6; ++i) {
    Elem t2 = f->mul(t[i], t[i]);
    pts[i] = {f->one(), t[i], t2, f->mul(t2, t[i])};
  }
  return make(f, pts);
}

SixPoints SixPoints::random(FieldPtr f, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    std::array<Point, 6> pts;
    for (auto& p : pts) {
      p.resize(4);
      do {
        for (auto& c : p) c = f->random(rng);
      } while (std::all_of(p.begin(), p.end(), [](Elem e) { return e == 0; }));
    }
    try {
      return make(f, pts);
    } catch (const GeneralPositionError&) {
    }
  }
}

std::vector<Elem> QuadricWeb::map(const Point& x) const {
  std::vector<Elem> y(4);
  for (int i = 0; i < 4; ++i) y[i] = basis[i].evaluate(x);
  return y;
}

QuadricWeb quadrics_through(const SixPoints& s) {
  const auto& f = *s.f;
  auto mons = monomial_basis(4, 2);
  std::vector<Elem> rows;
  for (auto& p : s.pts)
    for (auto m : mons) {
      Elem v = 1;
      for (int i = 0; i < 4; ++i)
        for (int e = 0; e < mono::exp(m, i); ++e) v = f.mul(v, p[i]);
      rows.push_back(v);
    }
  auto ker = kernel(f, rows, 6, mons.size());
  if (ker.size() != 4)
    throw GeneralPositionError("quadrics through the points form a space of dimension " + std::to_string(ker.size()),
                               {0, 1, 2, 3, 4, 5});
  QuadricWeb w;
  w.source = s;
  for (int i = 0; i < 4; ++i) {
    w.basis[i] = FPoly(s.f, 4);
    for (size_t c = 0; c < mons.size(); ++c) w.basis[i].add_term(mons[c], ker[i][c]);
  }
  return w;
}

FPoly weddle_quartic(const QuadricWeb& web) {
  const auto& f = web.source.f;
  FPoly J[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) J[i][j] = web.basis[i].derivative(j);
  std::array<int, 4> perm{0, 1, 2, 3};
  FPoly det(f, 4);
  do {
    int inv = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) inv += perm[a] > perm[b];
    FPoly t = J[0][perm[0]] * J[1][perm[1]] * J[2][perm[2]] * J[3][perm[3]];
    det = inv % 2 ? det - t : det + t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (det.is_zero()) throw PolyError("degenerate web: Jacobian determinant vanishes identically");
  return det;
}

size_t FiberHistogram::dominant() const {
  size_t best = 0, cnt = 0;
  for (auto& [s, c] : sizes)
    if (c > cnt) {
      best = s;
      cnt = c;
    }
  return best;
}

namespace {

using FiberMap = std::map<Point, std::pair<size_t, Point>>;  // image -> (count, first source)

FiberMap enumerate_fibers(const std::vector<FPoly>& forms, uint32_t max_p, size_t& base_points) {
  if (forms.empty()) throw std::invalid_argument("fiber_histogram: no forms");
  const auto& f = forms[0].field();
  if (f.k() != 1 || f.p() > max_p)
    throw ScanBudgetError("fiber_histogram: exhaustive enumeration needs a prime field with p <= " +
                              std::to_string(max_p),
                          f.q());
  int N = forms[0].nvars();
  uint64_t q = f.q();
  FiberMap fibers;
  Point x(N), y(forms.size());
  for (int lead = 0; lead < N; ++lead) {
    uint64_t total = 1;
    for (int i = lead + 1; i < N; ++i) total *= q;
    for (uint64_t idx = 0; idx < total; ++idx) {
      std::fill(x.begin(), x.end(), 0);
      x[lead] = 1;
      uint64_t t = idx;
      for (int i = N - 1; i > lead; --i) {
        x[i] = f.from_index(t % q);
        t /= q;
      }
      bool nz = false;
      for (size_t k = 0; k < forms.size(); ++k) {
        y[k] = forms[k].evaluate(x);
        nz = nz || y[k];
      }
      if (!nz) {
        ++base_points;
        continue;
      }
      auto& e = fibers[normalize(f, y)];
      if (e.first++ == 0) e.second = x;
    }
  }
  return fibers;
}

}  // namespace

FiberHistogram fiber_histogram(const std::vector<FPoly>& forms, uint32_t max_p) {
  FiberHistogram h;
  for (auto& [img, e] : enumerate_fibers(forms, max_p, h.base_points)) {
    ++h.sizes[e.first];
    if (e.first == 1) h.ramification.push_back(e.second);
  }
  h.naive = h.sizes;
  return h;
}

std::vector<std::vector<Elem>> exceptional_planes(const QuadricWeb& web) {
  const auto& f = *web.source.f;
  std::vector<std::vector<Elem>> planes;
  for (auto& P : web.source.pts) {
    std::vector<Elem> rows;  // transpose of the Jacobian at P
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) rows.push_back(web.basis[k].derivative(j).evaluate(P));
    auto ker = kernel(f, rows, 4, 4);
    if (ker.size() != 1) throw GeneralPositionError("web differential at a base point does not have rank 3", {});
    planes.push_back(normalize(f, ker[0]));
  }
  return planes;
}

FiberHistogram fiber_histogram(const QuadricWeb& web, uint32_t max_p) {
  const auto& f = *web.source.f;
  FiberHistogram h;
  auto planes = exceptional_planes(web);
  for (auto& [img, e] : enumerate_fibers({web.basis.begin(), web.basis.end()}, max_p, h.base_points)) {
    ++h.naive[e.first];
    size_t extra = 0;
    for (auto& L : planes) {
      Elem s = 0;
      for (int i = 0; i < 4; ++i) s = f.add(s, f.mul(L[i], img[i]));
      extra += s == 0;
    }
    h.exceptional += extra > 0;
    size_t size = e.first + extra;
    ++h.sizes[size];
    if (size == 1) h.ramification.push_back(e.second);
  }
  return h;
}

BranchResult branch_quartic(const QuadricWeb& web, uint64_t seed, size_t samples) {
  const auto& f = *web.source.f;
  if (samples < 40) throw std::invalid_argument("branch_quartic: need at least 40 samples");
  auto W = weddle_quartic(web);
  BranchResult r;
  PointSampler S(W, seed);
  S.set_line_budget(100 * samples);
  std::set<Point> seen;
  std::vector<Point> imgs;
  Point p, g;
  while (imgs.size() < samples) {
    if (!S.next(p, g)) throw SamplingError("branch_quartic: too few smooth Weddle points");
    auto y = normalize(f, web.map(p));
    if (seen.insert(y).second) imgs.push_back(y);
  }
  r.samples = imgs.size();
  auto system = [&](int d) {
    MonomialEvaluator ev(4, d);
    std::vector<Elem> rows, tmp;
    for (auto& y : imgs) {
      ev.eval(f, y, tmp);
      rows.insert(rows.end(), tmp.begin(), tmp.end());
    }
    return std::make_pair(kernel(f, rows, imgs.size(), ev.basis().size()), ev.basis());
  };
  r.nullity3 = static_cast<int>(system(3).first.size());
  auto [ker, basis] = system(4);
  r.nullity4 = static_cast<int>(ker.size());
  if (ker.size() != 1)
    throw SamplingError("branch_quartic: degree-4 nullspace has dimension " + std::to_string(ker.size()));
  r.K = FPoly(web.source.f, 4);
  for (size_t i = 0; i < basis.size(); ++i) r.K.add_term(basis[i], ker[0][i]);
  PointSampler H(W, seed ^ 0x9E3779B97F4A7C15ULL);
  H.set_line_budget(100 * samples);
  r.verified = true;
  while (r.heldout < 20) {
    if (!H.next(p, g)) throw SamplingError("branch_quartic: held-out sampler exhausted");
    if (r.K.evaluate(web.map(p)) != 0) r.verified = false;
    ++r.heldout;
  }
  return r;
}

std::vector<Point> secant_contractions(const QuadricWeb& web) {
  const auto& f = *web.source.f;
  const auto& P = web.source.pts;
  std::vector<Point> out;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      Point sum(4);
      for (int k = 0; k < 4; ++k) sum[k] = f.add(P[i][k], P[j][k]);
      Point b(4);
      for (int k = 0; k < 4; ++k) {
        Elem a = web.basis[k].evaluate(P[i]), c = web.basis[k].evaluate(P[j]);
        if (a || c) throw GeneralPositionError("web quadric does not vanish at a base point", {i, j});
        b[k] = web.basis[k].evaluate(sum);  // the st coefficient
      }
      if (std::all_of(b.begin(), b.end(), [](Elem e) { return e == 0; }))
        throw GeneralPositionError("secant line lies in the base locus", {i, j});
      out.push_back(normalize(f, b));
      pairs.emplace_back(i, j);
    }
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t c = a + 1; c < out.size(); ++c)
      if (out[a] == out[c])
        throw GeneralPositionError("two secants contract to the same point",
                                   {pairs[a].first, pairs[a].second, pairs[c].first, pairs[c].second});
  return out;
}

NodeReport sixteenth_node(const QuadricWeb& web, const FPoly& K) {
  const auto& f = web.source.f;
  auto f2 = FiniteField::extension(f->p(), 2);
  NodeReport r;
  r.base_field = singular_scan(K, f).points;
  r.extension = singular_scan(K, f2).points;
  std::set<Point> sec;
  for (auto& s : secant_contractions(web)) sec.insert(lift_point(*f2, s));
  for (auto& p : r.extension) {
    if (sec.count(p))
      ++r.secant_hits;
    else
      r.extra.push_back(p);
  }
  return r;
}

ContractionResult twisted_cubic_contraction(FieldPtr f, const std::array<Elem, 6>& t) {
  auto web = quadrics_through(SixPoints::twisted_cubic(f, t));
  ContractionResult r;
  for (int i = 0; i < 4; ++i) {
    r.sextics[i].assign(7, 0);
    for (auto& [m, c] : web.basis[i].terms()) {
      int e = mono::exp(m, 1) + 2 * mono::exp(m, 2) + 3 * mono::exp(m, 3);
      r.sextics[i][e] = f->add(r.sextics[i][e], c);
    }
  }
  int ref = -1, k = -1;
  for (int i = 0; i < 4 && ref < 0; ++i)
    for (int e = 0; e < 7; ++e)
      if (r.sextics[i][e]) {
        ref = i;
        k = e;
        break;
      }
  if (ref < 0) return r;
  Point img(4);
  for (int i = 0; i < 4; ++i) {
    Elem lam = f->div(r.sextics[i][k], r.sextics[ref][k]);
    for (int e = 0; e < 7; ++e)
      if (r.sextics[i][e] != f->mul(lam, r.sextics[ref][e])) return r;
    img[i] = lam;
  }
  r.ok = true;
  r.image = normalize(*f, img);
  return r;
}

namespace {

// reduced row echelon form of the span of two distinct projective points
Point line_key(const FiniteField& f, const Point& P, const Point& Q) {
  size_t n = P.size(), c1 = 0;
  while (!P[c1]) ++c1;
  Point R(n);
  for (size_t i = 0; i < n; ++i) R[i] = f.sub(Q[i], f.mul(Q[c1], P[i]));
  R = normalize(f, R);
  size_t c2 = 0;
  while (!R[c2]) ++c2;
  Point key(2 * n);
  for (size_t i = 0; i < n; ++i) {
    key[i] = f.sub(P[i], f.mul(P[c2], R[i]));
    key[n + i] = R[i];
  }
  return key;
}

bool line_in_locus(const FieldPtr& f, const std::vector<FPoly>& partials, const Point& key) {
  size_t n = key.size() / 2;
  LinearChange<FiniteField> A{f, std::vector<std::vector<Elem>>(n, std::vector<Elem>(2))};
  for (size_t i = 0; i < n; ++i) {
    A.a[i][0] = key[i];
    A.a[i][1] = key[n + i];
  }
  for (auto& d : partials)
    if (!substitute_linear(d, A).is_zero()) return false;
  return true;
}

}  // namespace

IgusaReport igusa_config_check(const FPoly& Qbase) {
  const auto& fb = Qbase.field_ptr();
  if (fb->k() != 1) throw FieldError("igusa_config_check: expects a form over a prime field");
  IgusaReport r;
  r.singular_base = singular_scan(Qbase, fb).points;
  auto f2 = FiniteField::extension(fb->p(), 2);
  FieldPtr f = f2;
  try {
    r.singular_ext = singular_scan(Qbase, f2).points;
  } catch (const ScanBudgetError&) {
    r.partial = true;
    r.singular_ext = r.singular_base;
    f = fb;
  }
  FPoly Q = f->same(*fb) ? Qbase : lift(Qbase, f);
  auto partials = Q.gradient();
  const auto& pts = r.singular_ext;
  std::vector<bool> covered(pts.size(), false);
  std::vector<std::vector<size_t>> on(pts.size());
  for (size_t piv = 0; piv < pts.size(); ++piv) {
    if (covered[piv]) continue;
    covered[piv] = true;
    std::map<Point, std::vector<size_t>> groups;
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != piv) groups[line_key(*f, pts[piv], pts[j])].push_back(j);
    bool any = false;
    for (auto& [key, members] : groups) {
      if (members.size() < 2 || !line_in_locus(f, partials, key)) continue;
      any = true;
      members.insert(members.begin(), piv);
      std::sort(members.begin(), members.end());
      for (auto m : members) {
        covered[m] = true;
        on[m].push_back(r.lines.size());
      }
      r.lines.push_back(members);
    }
    if (!any && on[piv].empty()) ++r.isolated;
  }
  std::vector<bool> is_node(pts.size(), false);
  for (size_t i = 0; i < pts.size(); ++i)
    if (on[i].size() >= 2) {
      is_node[i] = true;
      r.nodes.push_back(pts[i]);
      r.lines_per_node.push_back(static_cast<int>(on[i].size()));
    }
  for (auto& l : r.lines) {
    int c = 0;
    for (auto m : l) c += is_node[m];
    r.nodes_per_line.push_back(c);
  }
  auto all3 = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 3; }); };
  r.pass = !r.partial && r.lines.size() == 15 && r.nodes.size() == 15 && all3(r.nodes_per_line) &&
           all3(r.lines_per_node) && r.isolated == 0;
  return r;
}

}  // namespace coble::weddle
