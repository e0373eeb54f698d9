#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "json.hpp"

namespace coble::tools {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  uint32_t prime = 0;  // 0: each check picks its own default
  int ext = 2;
  std::string alpha;  // fixture path or "a0,...,a4"; empty: shipped fixture
  uint64_t seed = 1;
  size_t samples = 0;  // 0: check default
  int max_degree = 6;
  bool heavy = false;
  std::string cache_dir;
  std::string out;
  std::string fixture_dir;  // where alpha_star.json and the point configs live

  ojson to_json() const;
  std::string alpha_arg() const;
};

struct Report {
  std::string check;
  std::string status = "fail";  // pass | fail | incomplete | error
  ojson data = ojson::object();
  ojson config = ojson::object();
  ojson timings = ojson::object();

  bool pass() const { return status == "pass"; }
  ojson to_json() const;
};

class Stopwatch {
 public:
  explicit Stopwatch(ojson& sink) : sink_(sink) {}
  void lap(const std::string& name);

 private:
  ojson& sink_;
  std::chrono::steady_clock::time_point t_ = std::chrono::steady_clock::now();
};

const std::vector<std::string>& check_names();
// runs one check; module errors become status "error" with the message in data
Report run_check(const std::string& name, const RunConfig& cfg);

Report run_invariants(const RunConfig& cfg);
Report run_coble_build(const RunConfig& cfg);
Report run_identities(const RunConfig& cfg);
Report run_find_alpha(const RunConfig& cfg);
Report run_segre(const RunConfig& cfg);
Report run_dual(const RunConfig& cfg);
Report run_hexahedron(const RunConfig& cfg);
Report run_vnr(const RunConfig& cfg);
Report run_weddle(const RunConfig& cfg);
Report run_numbers(const RunConfig& cfg);

// interpolated dual of build_cubic(alpha) over F_p, through the disk cache
struct Sextic {
  CachedDual dual;
  std::string cache_key;
  bool cache_hit = false;
};
Sextic coble_sextic(const AlphaSpec& alpha, const FieldPtr& f, const RunConfig& cfg);

ojson point_json(const FiniteField& f, const Point& p);

}  // namespace coble::tools
