#include "coble/linalg.hpp"

#include <algorithm>

namespace coble {

namespace {

// Gauss-Jordan, first nonzero row as pivot; returns pivot columns
template <class K>
std::vector<size_t> rref_inplace(Matrix<K>& A) {
  const K& f = *A.f;
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < A.cols && r < A.rows; ++c) {
    size_t p = A.rows;
    for (size_t i = r; i < A.rows; ++i)
      if (!f.is_zero(A.at(i, c))) {
        p = i;
        break;
      }
    if (p == A.rows) continue;
    if (p != r)
      for (size_t j = 0; j < A.cols; ++j) std::swap(A.at(p, j), A.at(r, j));
    auto inv = f.inv(A.at(r, c));
    for (size_t j = c; j < A.cols; ++j) A.at(r, j) = f.mul(A.at(r, j), inv);
    for (size_t i = 0; i < A.rows; ++i) {
      if (i == r || f.is_zero(A.at(i, c))) continue;
      auto m = A.at(i, c);
      for (size_t j = c; j < A.cols; ++j) A.at(i, j) = f.sub(A.at(i, j), f.mul(m, A.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class K>
std::vector<std::vector<typename K::elem>> nullspace_generic(const Matrix<K>& M) {
  Matrix<K> A = M;
  auto piv = rref_inplace(A);
  const K& f = *M.f;
  std::vector<bool> is_piv(M.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<typename K::elem>> out;
  for (size_t fc = 0; fc < M.cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<typename K::elem> v(M.cols, f.zero());
    v[fc] = f.one();
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(A.at(i, fc));
    out.push_back(std::move(v));
  }
  return out;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  int64_t r0 = static_cast<int64_t>(p), r1 = static_cast<int64_t>(a % p), s0 = 0, s1 = 1;
  while (r1) {
    int64_t q = r0 / r1;
    std::swap(r0, r1);
    r1 -= q * r0;
    std::swap(s0, s1);
    s1 -= q * s0;
  }
  return static_cast<uint64_t>(s0 < 0 ? s0 + static_cast<int64_t>(p) : s0);
}

bool use_modp(const Matrix<FiniteField>& M) { return M.f->k() == 1 && M.f->p() < (1u << 24); }

std::vector<std::vector<mpz_class>> integer_rows(const Matrix<Rationals>& M) {
  std::vector<std::vector<mpz_class>> rows(M.rows, std::vector<mpz_class>(M.cols));
  for (size_t i = 0; i < M.rows; ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < M.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M.at(i, j).get_den_mpz_t());
    for (size_t j = 0; j < M.cols; ++j) rows[i][j] = M.at(i, j).get_num() * (l / M.at(i, j).get_den());
  }
  return rows;
}

// division-minimizing elimination over Z; rows kept primitive
std::vector<size_t> echelon_ff(std::vector<std::vector<mpz_class>>& a, size_t cols) {
  std::vector<size_t> piv;
  size_t r = 0, rows = a.size();
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = rows;
    for (size_t i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        p = i;
        break;
      }
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      mpz_class g = gcd(a[r][c], a[i][c]);
      mpz_class m1 = a[r][c] / g, m2 = a[i][c] / g;
      mpz_class content = 0;
      for (size_t j = c; j < cols; ++j) {
        a[i][j] = m1 * a[i][j] - m2 * a[r][j];
        content = gcd(content, a[i][j]);
      }
      if (content > 1)
        for (size_t j = c; j < cols; ++j) a[i][j] /= content;
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

ModpEchelon nullspace_modp(std::vector<uint64_t> a, size_t rows, size_t cols, uint32_t p) {
  ModpEchelon out;
  std::vector<std::vector<uint32_t>> U;
  std::vector<uint32_t> prow(cols);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i) {
      uint64_t& x = a[i * cols + c];
      x %= p;
      if (x && piv == rows) piv = i;
    }
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a.begin() + piv * cols + c, a.begin() + piv * cols + cols, a.begin() + r * cols + c);
    uint64_t* R = &a[r * cols];
    uint64_t inv = inv_mod(R[c] % p, p);
    std::fill(prow.begin(), prow.begin() + c, 0u);
    for (size_t j = c; j < cols; ++j) prow[j] = static_cast<uint32_t>((R[j] % p) * inv % p);
    const uint32_t* P = prow.data();
    for (size_t i = r + 1; i < rows; ++i) {
      uint64_t* Ri = &a[i * cols];
      uint32_t x = static_cast<uint32_t>(Ri[c]);
      if (!x) continue;
      uint32_t g = p - x;
      for (size_t j = c; j < cols; ++j) Ri[j] += static_cast<uint64_t>(g) * P[j];
    }
    U.push_back(prow);
    out.pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : out.pivots) is_piv[c] = true;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<uint32_t> x(cols, 0);
    x[fc] = 1;
    for (size_t i = out.pivots.size(); i-- > 0;) {
      size_t pc = out.pivots[i];
      uint64_t s = 0;
      const auto& u = U[i];
      for (size_t j = pc + 1; j < cols; ++j) s += static_cast<uint64_t>(u[j]) * x[j];
      s %= p;
      x[pc] = static_cast<uint32_t>(s ? p - s : 0);
    }
    out.nullspace.push_back(std::move(x));
  }
  return out;
}

template <class K>
std::vector<std::vector<typename K::elem>> nullspace(const Matrix<K>& M) {
  if constexpr (std::is_same_v<K, FiniteField>) {
    if (use_modp(M)) {
      auto e = nullspace_modp(M.d, M.rows, M.cols, M.f->p());
      std::vector<std::vector<uint64_t>> out;
      for (auto& v : e.nullspace) out.emplace_back(v.begin(), v.end());
      return out;
    }
    return nullspace_generic(M);
  } else {
    auto a = integer_rows(M);
    auto piv = echelon_ff(a, M.cols);
    std::vector<bool> is_piv(M.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<mpq_class>> out;
    for (size_t fc = 0; fc < M.cols; ++fc) {
      if (is_piv[fc]) continue;
      std::vector<mpq_class> x(M.cols, 0);
      x[fc] = 1;
      for (size_t i = piv.size(); i-- > 0;) {
        size_t pc = piv[i];
        mpq_class s = 0;
        for (size_t j = pc + 1; j < M.cols; ++j)
          if (sgn(x[j]) != 0 && sgn(a[i][j]) != 0) s += mpq_class(a[i][j]) * x[j];
        x[pc] = -s / mpq_class(a[i][pc]);
        x[pc].canonicalize();
      }
      out.push_back(std::move(x));
    }
    return out;
  }
}

template <class K>
size_t rank(const Matrix<K>& M) {
  if constexpr (std::is_same_v<K, FiniteField>) {
    if (use_modp(M)) {
      // forward pass only; the nullspace vectors are a by-product we discard
      return M.cols - nullspace(M).size();
    }
    Matrix<K> A = M;
    return rref_inplace(A).size();
  } else {
    auto a = integer_rows(M);
    return echelon_ff(a, M.cols).size();
  }
}

template <class K>
std::optional<std::vector<typename K::elem>> solve(const Matrix<K>& M, const std::vector<typename K::elem>& b) {
  if (b.size() != M.rows) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix<K> A(M.f, M.rows, M.cols + 1);
  for (size_t i = 0; i < M.rows; ++i) {
    for (size_t j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
    A.at(i, M.cols) = b[i];
  }
  auto piv = rref_inplace(A);
  if (!piv.empty() && piv.back() == M.cols) return std::nullopt;
  std::vector<typename K::elem> x(M.cols, M.f->zero());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = A.at(i, M.cols);
  return x;
}

template std::vector<std::vector<uint64_t>> nullspace(const Matrix<FiniteField>&);
template std::vector<std::vector<mpq_class>> nullspace(const Matrix<Rationals>&);
template size_t rank(const Matrix<FiniteField>&);
template size_t rank(const Matrix<Rationals>&);
template std::optional<std::vector<uint64_t>> solve(const Matrix<FiniteField>&, const std::vector<uint64_t>&);
template std::optional<std::vector<mpq_class>> solve(const Matrix<Rationals>&, const std::vector<mpq_class>&);

}  // namespace coble
