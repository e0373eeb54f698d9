#include "fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace coble::tools {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CobleParams<FiniteField> AlphaSpec::over(const FieldPtr& f) const {
  if (ints) return CobleParams<FiniteField>::from_ints(f, *ints);
  if (f->p() != *residue_prime)
    throw FieldError("alpha residues are given mod " + std::to_string(*residue_prime) + ", not mod " +
                     std::to_string(f->p()));
  CobleParams<FiniteField> c{f, {}};
  for (int i = 0; i < 5; ++i) c.alpha[i] = f->from_int(static_cast<int64_t>(residues[i]));
  c.validate();
  return c;
}

std::string AlphaSpec::key() const {
  std::string k = ints ? "a" : "r" + std::to_string(*residue_prime);
  for (int i = 0; i < 5; ++i) k += "_" + std::to_string(ints ? (*ints)[i] : static_cast<int64_t>(residues[i]));
  return k;
}

AlphaSpec load_alpha(const std::string& arg) {
  AlphaSpec a;
  a.source = arg;
  if (fs::is_regular_file(arg)) {
    auto bytes = read_file(arg);
    a.hash = fnv1a_hex(bytes);
    auto j = json::parse(bytes);
    auto field = FieldSpec::parse(j.at("field").get<std::string>());
    auto v = j.at("alpha").get<std::vector<int64_t>>();
    if (v.size() != 5) throw std::runtime_error(arg + ": alpha needs 5 entries");
    if (!field.finite()) {
      a.ints.emplace();
      std::copy(v.begin(), v.end(), a.ints->begin());
    } else {
      if (field.k != 1) throw std::runtime_error(arg + ": alpha residues must live in a prime field");
      a.residue_prime = field.p;
      for (int i = 0; i < 5; ++i) {
        if (v[i] < 0 || static_cast<uint64_t>(v[i]) >= field.p)
          throw std::runtime_error(arg + ": residue out of range");
        a.residues[i] = static_cast<uint64_t>(v[i]);
      }
    }
    return a;
  }
  a.hash = fnv1a_hex(arg);
  std::array<int64_t, 5> v{};
  std::stringstream ss(arg);
  std::string tok;
  int n = 0;
  while (std::getline(ss, tok, ',')) {
    if (n == 5) throw std::runtime_error("--alpha: expected 5 comma-separated integers or a fixture file");
    size_t used = 0;
    try {
      v[n] = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw std::runtime_error("--alpha: '" + arg + "' is neither a file nor 5 integers");
    ++n;
  }
  if (n != 5) throw std::runtime_error("--alpha: expected 5 comma-separated integers or a fixture file");
  a.ints = v;
  return a;
}

PointConfig load_points(const std::string& path) {
  PointConfig c;
  c.source = path;
  auto bytes = read_file(path);
  c.hash = fnv1a_hex(bytes);
  auto j = json::parse(bytes);
  auto f = FieldSpec::parse(j.at("field").get<std::string>()).finite_field();
  auto raw = j.at("points").get<std::vector<std::vector<int64_t>>>();
  if (raw.size() != 6) throw std::runtime_error(path + ": need exactly 6 points");
  std::array<Point, 6> pts;
  for (int i = 0; i < 6; ++i) {
    if (raw[i].size() != 4) throw std::runtime_error(path + ": points need 4 coordinates");
    for (auto x : raw[i]) pts[i].push_back(f->from_int(x));
  }
  c.six = weddle::SixPoints::make(f, pts);
  if (j.contains("parameters")) {
    auto t = j["parameters"].get<std::vector<int64_t>>();
    if (t.size() != 6) throw std::runtime_error(path + ": need 6 parameters");
    std::array<Elem, 6> ts;
    for (int i = 0; i < 6; ++i) ts[i] = f->from_int(t[i]);
    if (weddle::SixPoints::twisted_cubic(f, ts).pts != c.six.pts)
      throw std::runtime_error(path + ": points do not match (1:t:t^2:t^3) for the listed parameters");
    c.params = ts;
  }
  return c;
}

fs::path DualCache::default_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* e = std::getenv("COBLE_CACHE"); e && *e) return e;
  return ".coble-cache";
}

std::optional<CachedDual> DualCache::load(const std::string& key, const FieldPtr& f) const {
  if (dir_.empty()) return std::nullopt;
  auto poly = dir_ / (key + ".poly"), side = dir_ / (key + ".json");
  if (!fs::exists(poly) || !fs::exists(side)) return std::nullopt;
  try {
    auto j = json::parse(read_file(side));
    if (j.at("field").get<std::string>() != f->name()) return std::nullopt;
    CachedDual d;
    d.form = from_text(read_file(poly), f);
    d.degree = j.at("degree").get<int>();
    d.nullity_below = j.at("nullity_below").get<int>();
    d.nullity = j.at("nullity").get<int>();
    d.samples = j.at("samples").get<size_t>();
    if (d.form.degree() != d.degree) return std::nullopt;
    return d;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void DualCache::store(const std::string& key, const CachedDual& d, uint64_t seed) const {
  if (dir_.empty()) return;
  fs::create_directories(dir_);
  nlohmann::ordered_json j;
  j["field"] = d.form.field().name();
  j["seed"] = seed;
  j["samples"] = d.samples;
  j["degree"] = d.degree;
  j["nullity_below"] = d.nullity_below;
  j["nullity"] = d.nullity;
  auto write = [&](const fs::path& p, const std::string& text) {
    auto tmp = p;
    tmp += ".tmp";
    std::ofstream(tmp, std::ios::binary) << text;
    fs::rename(tmp, p);
  };
  write(dir_ / (key + ".poly"), to_text(d.form));
  write(dir_ / (key + ".json"), j.dump(2) + "\n");
}

}  // namespace coble::tools
