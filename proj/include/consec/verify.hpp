#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "consec/formulas.hpp"
#include "consec/pattern.hpp"
#include "consec/qpolynomial.hpp"

namespace consec {

// One formula-vs-oracle comparison.  The equal flag is exact polynomial
// equality, never a numeric tolerance.
struct RunRecord {
  std::string class_id;
  PatternSet set;
  int n = 0;
  QPolynomial formula;
  QPolynomial oracle;
  bool match = false;
  double seconds = 0.0;  // oracle time; excluded from serialized output
};

// Classes 3 and 4 each admit two candidate readings that disagree for n > 3;
// the oracle picks one.
struct AdjudicationRecord {
  std::string class_id;
  int n = 0;
  QPolynomial oracle;
  QPolynomial implemented;  // the reading the formula module ships
  QPolynomial alternate;    // the rejected case-split variant
  std::string confirmed;    // "implemented", "alternate", or "neither"
};

// Class 12 has no closed form; the campaign reports its oracle polynomials.
struct OracleOnlyRecord {
  PatternSet set;
  int n = 0;
  QPolynomial oracle;
};

// Structural facts about the class-13 polynomials, reported alongside the
// campaign.  Log-concavity is a conjecture: a failure is reported, never
// asserted.
struct Class13Entry {
  int n = 0;
  QPolynomial poly;
  bool palindromic = false;
  bool log_concave = false;
};

struct VerificationReport {
  int n_max = 0;
  std::vector<RunRecord> runs;
  std::vector<AdjudicationRecord> adjudications;
  std::vector<OracleOnlyRecord> oracle_only;
  std::vector<Class13Entry> class13;

  int matched() const;
  int mismatched() const;
  bool all_match() const { return mismatched() == 0; }
  std::vector<std::string> findings() const;  // human-readable notes

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string render_text(bool show_timing = false) const;
  std::string to_csv() const;  // class,set,n,exponent,coefficient,source
};

struct VerifyOptions {
  int n_max = 7;
  std::vector<std::string> class_filter;  // row ids; empty = all rows
  int jobs = 1;
  int cap = kDefaultCap;
  std::string cache_dir;  // empty = no cache
};

// Formula-oracle campaign over every member of every covered row for
// 3 <= n <= n_max, plus the class-3/4 adjudications, the class-12
// oracle-only polynomials, and the class-13 structural report.
VerificationReport run_verification(const VerifyOptions& options);

// Oracle with optional on-disk caching (used by the campaign and the CLI).
QPolynomial cached_oracle(const PatternSet& s, int n, int cap, int jobs,
                          const std::string& cache_dir);

}  // namespace consec
