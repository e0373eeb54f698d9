#include "coble/heis.hpp"

#include <unordered_map>

namespace coble::heis {

std::vector<MPoly<FiniteField>> invariant_subspace(int d, const FieldPtr& f) {
  if (d < 0 || d > 6) throw PolyError("invariant_subspace: degree out of range");
  auto w = cube_root_of_unity(*f);
  FiniteField::elem wp[3] = {f->one(), w, f->mul(w, w)};
  auto basis = monomial_basis(9, d);
  std::unordered_map<Mono, size_t> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  auto gens = generators();
  size_t n = basis.size();
  Matrix<FiniteField> M(f, gens.size() * n, n);
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t c = 0; c < n; ++c) {
      auto [ph, m2] = act_mono(gens[g], basis[c]);
      size_t row = g * n + pos.at(m2);
      M.at(row, c) = f->add(M.at(row, c), wp[ph]);
      M.at(g * n + c, c) = f->sub(M.at(g * n + c, c), f->one());
    }
  std::vector<MPoly<FiniteField>> out;
  for (auto& v : nullspace(M)) {
    MPoly<FiniteField> P(f, 9);
    for (size_t i = 0; i < n; ++i) P.add_term(basis[i], v[i]);
    out.push_back(P);
  }
  return out;
}

}  // namespace coble::heis
