#pragma once

#include <optional>
#include <string>

#include "consec/pattern.hpp"
#include "consec/qpolynomial.hpp"

namespace consec {

// Partial settings from one source; absent fields fall through to the next
// source.  Precedence: CLI flags > CONSEC_* environment > config file.
struct ConfigValues {
  std::optional<int> cap;
  std::optional<int> jobs;
  std::optional<std::string> cache_dir;
};

struct Settings {
  int cap = kDefaultCap;
  int jobs = 0;  // 0 = use hardware concurrency
  std::string cache_dir;
};

// JSON file with any of the keys "cap", "jobs", "cache_dir".
ConfigValues read_config_file(const std::string& path);
// CONSEC_CAP, CONSEC_JOBS, CONSEC_CACHE_DIR.
ConfigValues read_config_env();
Settings resolve_settings(const ConfigValues& cli, const ConfigValues& env,
                          const ConfigValues& file);

// On-disk result cache: one JSON file per (pattern set, n, mode), holding
// {"n":..,"patterns":[..],"coeffs":[..]}.  Hits must reproduce the
// recomputed polynomial exactly.
std::string cache_key(const PatternSet& s, int n, const std::string& mode);
std::optional<QPolynomial> cache_load(const std::string& dir, const std::string& key);
void cache_store(const std::string& dir, const std::string& key, int n, const PatternSet& s,
                 const QPolynomial& poly);

}  // namespace consec
