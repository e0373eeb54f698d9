#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coble/coble.hpp"
#include "coble/linalg.hpp"
#include "coble/multipoly.hpp"

namespace coble {

using Elem = FiniteField::elem;
using Point = std::vector<Elem>;
using FPoly = MPoly<FiniteField>;

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ScanBudgetError : std::runtime_error {
  ScanBudgetError(const std::string& m, uint64_t need) : std::runtime_error(m), required(need) {}
  uint64_t required;
};

// first nonzero coordinate scaled to 1; zero vector stays zero
Point normalize(const FiniteField& f, Point v);

// Stream of distinct smooth points of {F = 0}: pin all coordinates but one at
// seeded random values and take the roots in the remaining one.
class PointSampler {
 public:
  PointSampler(const FPoly& F, uint64_t seed);
  // false when the line budget is exhausted
  bool next(Point& pt, Point& grad);
  uint64_t lines_tried() const { return lines_; }
  void set_line_budget(uint64_t b) { budget_ = b; }

 private:
  FPoly F_;
  std::vector<FPoly> grad_;
  std::mt19937_64 rng_;
  std::vector<std::pair<Point, Point>> pending_;
  std::set<Point> seen_;
  uint64_t lines_ = 0, budget_ = std::numeric_limits<uint64_t>::max();
};

struct HypersurfaceSamples {
  FPoly F;
  uint64_t seed = 0;
  std::vector<std::pair<Point, Point>> pairs;  // (point, normalized gradient image)
};

HypersurfaceSamples sample_points(const FPoly& F, size_t count, uint64_t seed);

// rows = values of all degree-d monomials (monomial_basis order) at each point
class MonomialEvaluator {
 public:
  MonomialEvaluator(int nvars, int degree);
  void eval(const FiniteField& f, const Point& x, std::vector<Elem>& out) const;
  const std::vector<Mono>& basis() const { return basis_; }

 private:
  int n_, d_;
  std::vector<Mono> basis_;
  std::vector<std::vector<std::pair<uint32_t, uint8_t>>> steps_;  // per degree: (parent, var)
};

// kernel of a dense row-major matrix over f (fast path for word-size primes)
std::vector<std::vector<Elem>> kernel(const FiniteField& f, const std::vector<Elem>& rows, size_t nrows, size_t ncols);

struct DualResult {
  bool found = false;
  int degree = -1;
  FPoly dual;
  std::vector<int> nullity;       // index d: nullspace dimension of the degree-d system
  std::vector<size_t> columns;    // index d: number of monomials
  std::vector<size_t> rows;       // index d: number of gradient images used
  int witness_nullity = -1;       // degree-1 below the answer at the witness oversampling
  size_t witness_rows = 0;
  size_t samples = 0;
  size_t heldout = 0;
  bool verified = false;
  std::string warning;
};

struct DualOptions {
  int d_max = 6;
  double oversample = 1.1;
  double witness_oversample = 1.2;
  size_t heldout = 500;
  uint64_t seed = 1;
};

DualResult dual_interpolate(const FPoly& F, const DualOptions& opt);

struct GaussResult {
  size_t classes = 0;
  std::vector<Point> representatives;  // normalized gradient classes, sorted
  std::vector<size_t> class_sizes;
  FieldPtr field;
};

GaussResult gauss_class_count(const FPoly& F, size_t samples, uint64_t seed, int ext_degree);

struct ScanOptions {
  uint64_t budget = uint64_t{1} << 30;  // prefix count * q
  size_t max_points = std::numeric_limits<size_t>::max();
};

struct ScanResult {
  std::vector<Point> points;  // normalized, deterministic order
  bool truncated = false;
  uint64_t fibers = 0;
  uint64_t fallbacks = 0;
};

// common projective zeros of a homogeneous system (n+1 <= 5 variables) over its field
ScanResult common_zeros(const std::vector<FPoly>& sys, const ScanOptions& opt = {});

// singular points of F over `field` (an extension of F's field, or F's own field)
ScanResult singular_scan(const FPoly& F, const FieldPtr& field, const ScanOptions& opt = {});
// independent oracle: every point of P^n, different enumeration order, sorted output
std::vector<Point> singular_scan_bruteforce(const FPoly& F, const FieldPtr& field);

struct AlphaSearch {
  bool found = false;
  std::array<Elem, 5> alpha{};
  uint64_t candidates = 0;
  size_t nodes = 0;
  FieldPtr field;
};

bool irreducible_looking(const FPoly& G, std::mt19937_64& rng, int planes = 20);
AlphaSearch find_special_alpha(uint32_t p, uint64_t seed, uint64_t max_candidates = 100000);

struct HyperplaneFit {
  bool ok = false;
  int dim = 0;
  std::vector<Elem> form;
};

HyperplaneFit hyperplane_fit(const FiniteField& f, const std::vector<Point>& pts);

// hyperplane through the largest number of points (seeded subsets), then refit on its inliers
struct MajorityFit {
  HyperplaneFit fit;
  std::vector<Point> inliers, outliers;
};
MajorityFit majority_hyperplane(const FiniteField& f, const std::vector<Point>& pts, uint64_t seed, int trials = 200);

struct BidualResult {
  DualResult dual, bidual;
  bool proportional = false;
};

BidualResult biduality_check(const FPoly& F, int d_max, uint64_t seed);

}  // namespace coble
