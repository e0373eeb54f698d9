#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>

#include "coble/weddle.hpp"

namespace coble::tools {

// alpha as integers (reduced per prime) or as residues valid for one prime only
struct AlphaSpec {
  std::string source;                  // file path or the literal text
  std::string hash;                    // fnv1a-64 of the file bytes / literal
  std::optional<std::array<int64_t, 5>> ints;
  std::optional<uint32_t> residue_prime;
  std::array<uint64_t, 5> residues{};

  CobleParams<FiniteField> over(const FieldPtr& f) const;
  std::string key() const;  // stable text used in cache names
};

// "a0,a1,a2,a3,a4" or a JSON fixture path
AlphaSpec load_alpha(const std::string& arg);

struct PointConfig {
  std::string source, hash;
  weddle::SixPoints six;
  std::optional<std::array<Elem, 6>> params;  // set for twisted-cubic fixtures
};

PointConfig load_points(const std::string& path);

std::string fnv1a_hex(const std::string& bytes);
std::string read_file(const std::filesystem::path& p);

struct CachedDual {
  FPoly form;
  int degree = -1;
  int nullity_below = -1, nullity = -1;
  size_t samples = 0;
};

// cache of interpolated duals keyed by (alpha, p, seed); empty dir disables it
class DualCache {
 public:
  explicit DualCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  static std::filesystem::path default_dir(const std::string& flag);
  std::optional<CachedDual> load(const std::string& key, const FieldPtr& f) const;
  void store(const std::string& key, const CachedDual& d, uint64_t seed) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace coble::tools
