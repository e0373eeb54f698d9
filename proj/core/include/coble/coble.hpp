#pragma once

#include <array>
#include <string>
#include <vector>

#include "coble/heis.hpp"
#include "coble/linalg.hpp"
#include "coble/multipoly.hpp"

namespace coble {

struct Verdict {
  bool pass = false;
  int failing_index = -1;  // coordinate / identity that failed
  std::string detail;
};

template <class K>
struct CobleParams {
  using E = typename K::elem;
  std::shared_ptr<const K> f;
  std::array<E, 5> alpha;

  static CobleParams from_ints(std::shared_ptr<const K> f, const std::array<int64_t, 5>& a) {
    CobleParams c{f, {}};
    for (int i = 0; i < 5; ++i) c.alpha[i] = f->from_int(a[i]);
    c.validate();
    return c;
  }
  void validate() const {
    bool nz = false;
    for (auto& a : alpha) nz = nz || !f->is_zero(a);
    if (!nz) throw FieldError("alpha must not be identically zero");
    if (f->is_zero(f->from_int(3))) throw FieldError("3 must be invertible in the field");
  }
};

// The five orbit sums of the cubic, already carrying the 1/3 and 2 factors:
// G = sum_i alpha_i * group_i.
template <class K>
std::array<MPoly<K>, 5> cubic_groups(std::shared_ptr<const K> f) {
  auto X = [&](int i, int j) { return MPoly<K>::variable(f, 9, heis::idx(i, j)); };
  std::array<MPoly<K>, 5> g;
  for (auto& p : g) p = MPoly<K>(f, 9);
  for (int b = 0; b < 9; ++b) g[0] = g[0] + X(b / 3, b % 3).pow(3);
  g[0] = g[0].scale(f->inv(f->from_int(3)));
  for (int i = 0; i < 3; ++i) g[1] = g[1] + X(i, 0) * X(i, 1) * X(i, 2);
  for (int j = 0; j < 3; ++j) g[2] = g[2] + X(0, j) * X(1, j) * X(2, j);
  g[3] = X(0, 0) * X(1, 1) * X(2, 2) + X(0, 1) * X(1, 2) * X(2, 0) + X(1, 0) * X(2, 1) * X(0, 2);
  g[4] = X(0, 0) * X(1, 2) * X(2, 1) + X(0, 1) * X(1, 0) * X(2, 2) + X(0, 2) * X(1, 1) * X(2, 0);
  for (int i = 1; i < 5; ++i) g[i] = g[i].scale(f->from_int(2));
  return g;
}

template <class K>
MPoly<K> build_cubic(const CobleParams<K>& a) {
  a.validate();
  auto g = cubic_groups(a.f);
  MPoly<K> G(a.f, 9);
  for (int i = 0; i < 5; ++i) G = G + g[i].scale(a.alpha[i]);
  return G;
}

template <class K>
std::vector<MPoly<K>> polar_map(const MPoly<K>& G) {
  if (G.nvars() != 9 || G.degree() != 3 || !G.is_homogeneous())
    throw PolyError("polar_map expects a homogeneous cubic in 9 variables");
  return G.gradient();
}

// gamma_-(Z) = (0, Z0, -Z0, Z1, Z2, Z3, -Z1, -Z3, -Z2)
template <class K>
LinearChange<K> gamma_minus(std::shared_ptr<const K> f) {
  return LinearChange<K>::from_ints(f, {{0, 0, 0, 0},
                                        {1, 0, 0, 0},
                                        {-1, 0, 0, 0},
                                        {0, 1, 0, 0},
                                        {0, 0, 1, 0},
                                        {0, 0, 0, 1},
                                        {0, -1, 0, 0},
                                        {0, 0, 0, -1},
                                        {0, 0, -1, 0}});
}

// gamma_+(Y) = (Y0, Y1, Y1, Y2, Y3, Y4, Y2, Y4, Y3)
template <class K>
LinearChange<K> gamma_plus(std::shared_ptr<const K> f) {
  return LinearChange<K>::from_ints(f, {{1, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0},
                                        {0, 1, 0, 0, 0},
                                        {0, 0, 1, 0, 0},
                                        {0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 1},
                                        {0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 1},
                                        {0, 0, 0, 1, 0}});
}

// linear forms (coefficient vectors in X) cutting out P4+ and P3-
std::vector<std::array<int, 9>> p4plus_forms();   // X_b - X_{-b}
std::vector<std::array<int, 9>> p3minus_forms();  // X00, X_b + X_{-b}

template <class K>
Verdict check_tau_equivariance(const MPoly<K>& G) {
  auto grad = G.gradient();
  for (int b = 0; b < 9; ++b)
    if (heis::tau_act(grad[b]) != grad[heis::neg_idx(b)])
      return {false, b, "(dG/dX_b) o tau != dG/dX_{-b} at b = " + std::to_string(b / 3) + std::to_string(b % 3)};
  return {true, -1, "all 9 identities hold"};
}

// Degree parity table: gamma_- with odd degree and gamma_+ with any degree give
// F'_b = F'_{-b}; gamma_- with even degree gives F'_00 = 0, F'_b = -F'_{-b}.
template <class K>
Verdict check_fixed_locus_mapping(const MPoly<K>& F, char sign) {
  if (heis::tau_act(F) != F) throw PolyError("check_fixed_locus_mapping: input is not tau-invariant");
  const auto& f = F.field_ptr();
  auto gam = sign == '-' ? gamma_minus(f) : gamma_plus(f);
  std::vector<MPoly<K>> img;
  for (auto& d : F.gradient()) img.push_back(substitute_linear(d, gam));
  bool anti = sign == '-' && F.degree() % 2 == 0;
  for (int b = 0; b < 9; ++b) {
    auto other = img[heis::neg_idx(b)];
    bool ok = anti ? img[b] == -other : img[b] == other;
    if (!ok)
      return {false, b,
              std::string(anti ? "F'_b != -F'_{-b}" : "F'_b != F'_{-b}") + " at b = " + std::to_string(b / 3) +
                  std::to_string(b % 3)};
  }
  return {true, -1, anti ? "image in P3- (antisymmetric)" : "image in P4+ (symmetric)"};
}

// d(F o gamma)/dZ_j == (#nonzeros in column j) * gamma[b_j][j] * F'_{b_j}.
// Needs F'_b o gamma = gamma-sign * F'_{-b} o gamma, i.e. gamma_+ (any degree).
template <class K>
Verdict check_restricted_dual_commutes(const MPoly<K>& F, const LinearChange<K>& gam) {
  const auto& f = F.field_ptr();
  auto H = substitute_linear(F, gam);
  auto grad = F.gradient();
  for (int j = 0; j < gam.n_in(); ++j) {
    int bj = -1, nnz = 0;
    for (int b = 0; b < gam.n_out(); ++b)
      if (!f->is_zero(gam.a[b][j])) {
        if (bj < 0) bj = b;
        ++nnz;
      }
    if (bj < 0) return {false, j, "empty column"};
    auto rhs = substitute_linear(grad[bj], gam).scale(f->mul(f->from_int(nnz), gam.a[bj][j]));
    if (H.derivative(j) != rhs) return {false, j, "restricted gradient mismatch at Z_" + std::to_string(j)};
  }
  return {true, -1, "all restricted partials match"};
}

// all linear relations sum_b c_b (dG/dX_b o gam) == 0, as a nullspace basis
template <class K>
std::vector<std::vector<typename K::elem>> image_linear_relations(const MPoly<K>& G, const LinearChange<K>& gam) {
  const auto& f = G.field_ptr();
  auto grad = G.gradient();
  std::vector<MPoly<K>> img;
  for (auto& d : grad) img.push_back(substitute_linear(d, gam));
  int deg = std::max(G.degree() - 1, 0);
  auto basis = monomial_basis(gam.n_in(), deg);
  Matrix<K> M(f, basis.size(), 9);
  for (size_t r = 0; r < basis.size(); ++r)
    for (int b = 0; b < 9; ++b) M.at(r, b) = img[b].coeff(basis[r]);
  return nullspace(M);
}

template <class K>
MPoly<K> segre_restriction(const CobleParams<K>& a) {
  return substitute_linear(build_cubic(a), gamma_plus(a.f));
}

// the five groups of the restricted cubic written out directly:
// a0/3 (Y0^3 + 2 sum Yi^3) + 2 a_i (Y0 Y_i^2 + 2 prod of the other three)
template <class K>
std::array<MPoly<K>, 5> segre_groups(std::shared_ptr<const K> f) {
  auto Y = [&](int i) { return MPoly<K>::variable(f, 5, i); };
  std::array<MPoly<K>, 5> g;
  auto two = f->from_int(2);
  g[0] = Y(0).pow(3);
  for (int i = 1; i < 5; ++i) g[0] = g[0] + Y(i).pow(3).scale(two);
  g[0] = g[0].scale(f->inv(f->from_int(3)));
  for (int i = 1; i < 5; ++i) {
    MPoly<K> rest = MPoly<K>::constant(f, 5, f->one());
    for (int j = 1; j < 5; ++j)
      if (j != i) rest = rest * Y(j);
    g[i] = (Y(0) * Y(i).pow(2) + rest.scale(two)).scale(two);
  }
  return g;
}

template <class K>
MPoly<K> segre_display(const CobleParams<K>& a) {
  auto g = segre_groups(a.f);
  MPoly<K> S(a.f, 5);
  for (int i = 0; i < 5; ++i) S = S + g[i].scale(a.alpha[i]);
  return S;
}

int64_t sigma_degree(int64_t t5, int64_t t41, int64_t t32);
int64_t secant_threefold_degree(int64_t curve_deg, int64_t genus);

}  // namespace coble
