#include "coble/coble.hpp"

namespace coble {

std::vector<std::array<int, 9>> p4plus_forms() {
  std::vector<std::array<int, 9>> out;
  for (int b : {1, 3, 4, 5}) {
    std::array<int, 9> c{};
    c[b] = 1;
    c[heis::neg_idx(b)] = -1;
    out.push_back(c);
  }
  return out;
}

std::vector<std::array<int, 9>> p3minus_forms() {
  std::vector<std::array<int, 9>> out;
  std::array<int, 9> c0{};
  c0[0] = 1;
  out.push_back(c0);
  for (int b : {1, 3, 4, 5}) {
    std::array<int, 9> c{};
    c[b] = 1;
    c[heis::neg_idx(b)] = 1;
    out.push_back(c);
  }
  return out;
}

// (Theta_U + pi^*Theta)^5 with (pi^*Theta)^3 = 0
int64_t sigma_degree(int64_t t5, int64_t t41, int64_t t32) { return 1 * t5 + 5 * t41 + 10 * t32; }

// nodes of a plane curve of the same degree: arithmetic genus minus genus
int64_t secant_threefold_degree(int64_t curve_deg, int64_t genus) {
  return (curve_deg - 1) * (curve_deg - 2) / 2 - genus;
}

}  // namespace coble
