#pragma once

#include <optional>
#include <vector>

#include "coble/fields.hpp"

namespace coble {

template <class K>
struct Matrix {
  using E = typename K::elem;
  std::shared_ptr<const K> f;
  size_t rows = 0, cols = 0;
  std::vector<E> d;

  Matrix() = default;
  Matrix(std::shared_ptr<const K> fp, size_t r, size_t c) : f(std::move(fp)), rows(r), cols(c), d(r * c, f->zero()) {}

  E& at(size_t i, size_t j) { return d[i * cols + j]; }
  const E& at(size_t i, size_t j) const { return d[i * cols + j]; }
  void append_row(const std::vector<E>& r) {
    if (rows == 0 && cols == 0) cols = r.size();
    if (r.size() != cols) throw std::invalid_argument("row length mismatch");
    d.insert(d.end(), r.begin(), r.end());
    ++rows;
  }
  std::vector<E> mul_vec(const std::vector<E>& v) const {
    std::vector<E> out(rows, f->zero());
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) out[i] = f->add(out[i], f->mul(at(i, j), v[j]));
    return out;
  }
};

// Basis of {v : M v = 0}: one vector per free column, 1 there and 0 on the
// other free columns (the reduced echelon basis; independent of pivot order).
template <class K>
std::vector<std::vector<typename K::elem>> nullspace(const Matrix<K>& M);

template <class K>
size_t rank(const Matrix<K>& M);

// any solution of M x = b (free variables 0), nullopt if inconsistent
template <class K>
std::optional<std::vector<typename K::elem>> solve(const Matrix<K>& M, const std::vector<typename K::elem>& b);

// prime-field kernel used for the large interpolation systems (p < 2^24)
struct ModpEchelon {
  std::vector<size_t> pivots;  // pivot columns in order
  std::vector<std::vector<uint32_t>> nullspace;
};
ModpEchelon nullspace_modp(std::vector<uint64_t> a, size_t rows, size_t cols, uint32_t p);

extern template std::vector<std::vector<uint64_t>> nullspace(const Matrix<FiniteField>&);
extern template std::vector<std::vector<mpq_class>> nullspace(const Matrix<Rationals>&);
extern template size_t rank(const Matrix<FiniteField>&);
extern template size_t rank(const Matrix<Rationals>&);
extern template std::optional<std::vector<uint64_t>> solve(const Matrix<FiniteField>&, const std::vector<uint64_t>&);
extern template std::optional<std::vector<mpq_class>> solve(const Matrix<Rationals>&, const std::vector<mpq_class>&);

}  // namespace coble
