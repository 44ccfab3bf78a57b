#include "consec/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace consec {

ConfigValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("bad config file " + path + ": " + e.what());
  }
  ConfigValues v;
  if (j.contains("cap")) v.cap = j.at("cap").get<int>();
  if (j.contains("jobs")) v.jobs = j.at("jobs").get<int>();
  if (j.contains("cache_dir")) v.cache_dir = j.at("cache_dir").get<std::string>();
  return v;
}

ConfigValues read_config_env() {
  ConfigValues v;
  if (const char* cap = std::getenv("CONSEC_CAP")) v.cap = std::stoi(cap);
  if (const char* jobs = std::getenv("CONSEC_JOBS")) v.jobs = std::stoi(jobs);
  if (const char* dir = std::getenv("CONSEC_CACHE_DIR")) v.cache_dir = dir;
  return v;
}

Settings resolve_settings(const ConfigValues& cli, const ConfigValues& env,
                          const ConfigValues& file) {
  Settings s;
  auto pick_int = [](std::optional<int> a, std::optional<int> b, std::optional<int> c, int dflt) {
    return a ? *a : b ? *b : c ? *c : dflt;
  };
  s.cap = pick_int(cli.cap, env.cap, file.cap, kDefaultCap);
  s.jobs = pick_int(cli.jobs, env.jobs, file.jobs, 0);
  s.cache_dir = cli.cache_dir  ? *cli.cache_dir
                : env.cache_dir ? *env.cache_dir
                : file.cache_dir ? *file.cache_dir
                                 : "";
  return s;
}

std::string cache_key(const PatternSet& s, int n, const std::string& mode) {
  std::string set_part = s.to_string();
  for (char& c : set_part)
    if (c == ',') c = '-';
  return mode + "__" + (set_part.empty() ? "none" : set_part) + "__n" + std::to_string(n);
}

std::optional<QPolynomial> cache_load(const std::string& dir, const std::string& key) {
  const std::filesystem::path path = std::filesystem::path(dir) / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    return QPolynomial(j.at("coeffs").get<std::vector<std::int64_t>>());
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
}

void cache_store(const std::string& dir, const std::string& key, int n, const PatternSet& s,
                 const QPolynomial& poly) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / (key + ".json");
  nlohmann::json j = {
      {"n", n}, {"patterns", s.pattern_strings()}, {"coeffs", poly.coeffs()}};
  std::ofstream out(path);
  out << j.dump() << "\n";
}

}  // namespace consec
