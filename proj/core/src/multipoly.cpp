#include "coble/multipoly.hpp"

namespace coble {

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {
void basis_rec(int n, int i, int left, std::vector<int>& e, std::vector<Mono>& out) {
  if (i == n - 1) {
    e[i] = left;
    out.push_back(mono::make(e));
    return;
  }
  for (int v = left; v >= 0; --v) {
    e[i] = v;
    basis_rec(n, i + 1, left - v, e, out);
  }
}
}  // namespace

std::vector<Mono> monomial_basis(int n, int d) {
  if (n < 1 || n > kMaxVars) throw PolyError("monomial_basis: variable count out of range");
  if (d < 0 || d > kMaxDegree) throw PolyError("monomial_basis: degree out of range");
  std::vector<Mono> out;
  out.reserve(binomial(n + d - 1, d));
  std::vector<int> e(n, 0);
  basis_rec(n, 0, d, e, out);
  return out;
}

std::tuple<int, int, std::string> parse_poly_header(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw PolyError("empty polynomial text");
  std::istringstream hs(line);
  std::string a, b, c;
  hs >> a >> b >> c;
  if (a.rfind("vars=", 0) != 0 || b.rfind("degree=", 0) != 0 || c.rfind("field=", 0) != 0)
    throw PolyError("malformed header '" + line + "'");
  return {std::stoi(a.substr(5)), std::stoi(b.substr(7)), c.substr(6)};
}

}  // namespace coble
