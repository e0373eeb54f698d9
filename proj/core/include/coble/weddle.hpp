#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coble/dualscan.hpp"

// Six points in P^3, the web of quadrics through them and the resulting 2:1
// map to P^3: Weddle ramification quartic, Kummer branch quartic and its nodes.
namespace coble::weddle {

struct GeneralPositionError : std::runtime_error {
  GeneralPositionError(const std::string& m, std::vector<int> s) : std::runtime_error(m), subset(std::move(s)) {}
  std::vector<int> subset;  // offending point indices
};

struct SixPoints {
  FieldPtr f;
  std::array<Point, 6> pts;
  bool general_position = false;

  // validates: no 4 coplanar (which also rules out repeats)
  static SixPoints make(FieldPtr f, const std::array<Point, 6>& pts);
  // (1 : t : t^2 : t^3)
  static SixPoints twisted_cubic(FieldPtr f, const std::array<Elem, 6>& t);
  // seeded, redrawn until in general position
  static SixPoints random(FieldPtr f, uint64_t seed);
};

struct QuadricWeb {
  std::array<FPoly, 4> basis;
  SixPoints source;
  std::vector<Elem> map(const Point& x) const;
};

QuadricWeb quadrics_through(const SixPoints& s);

// det(dQ_i/dx_j)
FPoly weddle_quartic(const QuadricWeb& web);

struct FiberHistogram {
  std::map<size_t, size_t> sizes;  // fiber size -> number of image points
  std::vector<Point> ramification;  // sources of size-1 fibers
  size_t base_points = 0;           // points where the map is undefined
  std::map<size_t, size_t> naive;   // sizes before the exceptional-divisor correction
  size_t exceptional = 0;           // images that gained an infinitely-near preimage
  size_t dominant() const;
};

// exhaustive over P^n(F_p) for an arbitrary list of forms of equal degree
FiberHistogram fiber_histogram(const std::vector<FPoly>& forms, uint32_t max_p = 64);
// Same on the blow-up of the six base points: an image on the plane dQ(P_i)(P^3)
// also has a preimage infinitely near P_i, which the plain count misses.
FiberHistogram fiber_histogram(const QuadricWeb& web, uint32_t max_p = 64);
// left kernel of dQ at each base point: the image plane of its exceptional divisor
std::vector<std::vector<Elem>> exceptional_planes(const QuadricWeb& web);

struct BranchResult {
  FPoly K;
  int nullity3 = -1, nullity4 = -1;
  size_t samples = 0, heldout = 0;
  bool verified = false;
};

BranchResult branch_quartic(const QuadricWeb& web, uint64_t seed, size_t samples = 60);

std::vector<Point> secant_contractions(const QuadricWeb& web);

struct NodeReport {
  std::vector<Point> base_field, extension;  // singular points over F_p and F_{p^2}
  size_t secant_hits = 0;                    // of the 15 contractions, how many appear
  std::vector<Point> extra;                  // singular points that are not secant contractions
};

NodeReport sixteenth_node(const QuadricWeb& web, const FPoly& K);

struct ContractionResult {
  bool ok = false;
  Point image;
  std::array<std::vector<Elem>, 4> sextics;  // restrictions to (1:s:s^2:s^3), low -> high
};

ContractionResult twisted_cubic_contraction(FieldPtr f, const std::array<Elem, 6>& t);

struct IgusaReport {
  std::vector<Point> singular_base, singular_ext;
  std::vector<std::vector<size_t>> lines;  // indices into singular_ext
  std::vector<Point> nodes;                // points on >= 2 lines
  std::vector<int> nodes_per_line, lines_per_node;
  size_t isolated = 0;  // singular points on no accepted line
  bool partial = false;  // extension scan over budget; base field only
  bool pass = false;
};

IgusaReport igusa_config_check(const FPoly& Q);

}  // namespace coble::weddle
