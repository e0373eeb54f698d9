#pragma once

#include <array>
#include <string>
#include <vector>

#include "coble/linalg.hpp"
#include "coble/multipoly.hpp"

// Schrodinger action of (F3)^4 on the nine coordinates X_b, b = (i,j) in (F3)^2,
// stored at position 3i+j.  Convention: X_b -> w^<a*,b> X_{b+a},
// <u,v> = u1 v1 + u2 v2 mod 3.
namespace coble::heis {

inline constexpr const char* kConvention = "X_b -> w^<a*,b> X_{b+a}, <u,v> = u1*v1 + u2*v2 mod 3";

inline int idx(int i, int j) { return 3 * (((i % 3) + 3) % 3) + (((j % 3) + 3) % 3); }
inline int neg_idx(int b) { return idx(-(b / 3), -(b % 3)); }

struct Element {
  std::array<int, 2> a{0, 0};
  std::array<int, 2> astar{0, 0};

  Element() = default;
  Element(int a1, int a2, int s1, int s2) : a{((a1 % 3) + 3) % 3, ((a2 % 3) + 3) % 3}, astar{((s1 % 3) + 3) % 3, ((s2 % 3) + 3) % 3} {}
  Element operator*(const Element& o) const { return {a[0] + o.a[0], a[1] + o.a[1], astar[0] + o.astar[0], astar[1] + o.astar[1]}; }
};

inline std::vector<Element> generators() { return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}; }

// image of a monomial: (phase exponent mod 3, new monomial)
inline std::pair<int, Mono> act_mono(const Element& g, Mono m) {
  std::vector<int> e(9, 0);
  int ph = 0;
  for (int b = 0; b < 9; ++b) {
    int ex = mono::exp(m, b);
    if (!ex) continue;
    int i = b / 3, j = b % 3;
    ph += ex * (g.astar[0] * i + g.astar[1] * j);
    e[idx(i + g.a[0], j + g.a[1])] += ex;
  }
  return {ph % 3, mono::make(e)};
}

inline MPoly<FiniteField> act(const Element& g, const MPoly<FiniteField>& F) {
  if (F.nvars() != 9) throw PolyError("Heisenberg action needs 9 variables");
  const auto& f = F.field();
  auto w = cube_root_of_unity(f);
  FiniteField::elem wp[3] = {f.one(), w, f.mul(w, w)};
  MPoly<FiniteField> r(F.field_ptr(), 9);
  for (auto& [m, c] : F.terms()) {
    auto [ph, m2] = act_mono(g, m);
    r.add_term(m2, f.mul(c, wp[ph]));
  }
  return r;
}

template <class K>
MPoly<K> tau_act(const MPoly<K>& F) {
  if (F.nvars() != 9) throw PolyError("tau acts on 9 variables");
  MPoly<K> r(F.field_ptr(), 9);
  for (auto& [m, c] : F.terms()) {
    std::vector<int> e(9, 0);
    for (int b = 0; b < 9; ++b) e[neg_idx(b)] = mono::exp(m, b);
    r.add_term(mono::make(e), c);
  }
  return r;
}

// strict invariance under the four generators
inline bool is_invariant(const MPoly<FiniteField>& F) {
  for (auto& g : generators())
    if (act(g, F) != F) return false;
  return true;
}

// degree-d forms fixed by all generators: joint nullspace of rho(g) - id
std::vector<MPoly<FiniteField>> invariant_subspace(int d, const FieldPtr& f);

}  // namespace coble::heis
