#include "consec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "consec/config.hpp"

namespace consec {

namespace {

QPolynomial class3_alternate(int n) {
  // Case-split variant: vanishes past n = 3.
  if (n == 3) return QPolynomial::one() + QPolynomial::monomial(binom2(n));
  return {};
}

QPolynomial class4_alternate(int n) {
  // Variant without the case split: q + q^2 for every n.
  (void)n;
  return QPolynomial::geometric(1, 2);
}

bool row_selected(const std::vector<std::string>& filter, const std::string& id) {
  if (filter.empty()) return true;
  return std::find(filter.begin(), filter.end(), id) != filter.end();
}

std::string quote_csv(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

QPolynomial cached_oracle(const PatternSet& s, int n, int cap, int jobs,
                          const std::string& cache_dir) {
  const std::string key = cache_key(s, n, "oracle");
  if (!cache_dir.empty()) {
    if (auto hit = cache_load(cache_dir, key)) return *hit;
  }
  QPolynomial poly = oracle_inv_poly(n, s, cap, jobs);
  if (!cache_dir.empty()) cache_store(cache_dir, key, n, s, poly);
  return poly;
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.n_max > options.cap) throw CapExceeded(options.n_max, options.cap);
  VerificationReport report;
  report.n_max = options.n_max;

  for (const auto& row : classification_rows()) {
    if (!row_selected(options.class_filter, row.class_id)) continue;

    if (row.class_id == "12") {
      for (const auto& member : row.members) {
        for (int n = 3; n <= options.n_max; ++n) {
          report.oracle_only.push_back(
              {member.set, n, cached_oracle(member.set, n, options.cap, options.jobs,
                                            options.cache_dir)});
        }
      }
      continue;
    }

    for (const auto& member : row.members) {
      const PatternSetClass cls = classify(member.set);
      for (int n = 3; n <= options.n_max; ++n) {
        RunRecord rec;
        rec.class_id = cls.class_id;
        rec.set = member.set;
        rec.n = n;
        rec.formula = inv_poly(member.set, n);
        const auto start = std::chrono::steady_clock::now();
        rec.oracle = cached_oracle(member.set, n, options.cap, options.jobs, options.cache_dir);
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        rec.match = rec.formula == rec.oracle;
        report.runs.push_back(std::move(rec));
      }
    }

    if (row.class_id == "3" || row.class_id == "4") {
      for (int n = 4; n <= options.n_max; ++n) {
        AdjudicationRecord adj;
        adj.class_id = row.class_id;
        adj.n = n;
        adj.oracle = cached_oracle(row.canonical, n, options.cap, options.jobs,
                                   options.cache_dir);
        adj.implemented = inv_poly(row.canonical, n);
        adj.alternate = row.class_id == "3" ? class3_alternate(n) : class4_alternate(n);
        if (adj.oracle == adj.implemented) adj.confirmed = "implemented";
        else if (adj.oracle == adj.alternate) adj.confirmed = "alternate";
        else adj.confirmed = "neither";
        report.adjudications.push_back(std::move(adj));
      }
    }

    if (row.class_id == "13") {
      for (int n = 3; n <= 12; ++n) {
        Class13Entry entry;
        entry.n = n;
        entry.poly = inv_poly(row.canonical, n);
        entry.palindromic = entry.poly.is_palindromic();
        entry.log_concave = entry.poly.is_log_concave();
        report.class13.push_back(std::move(entry));
      }
    }
  }
  return report;
}

int VerificationReport::matched() const {
  int count = 0;
  for (const auto& r : runs) count += r.match ? 1 : 0;
  return count;
}

int VerificationReport::mismatched() const {
  return static_cast<int>(runs.size()) - matched();
}

std::vector<std::string> VerificationReport::findings() const {
  std::vector<std::string> out;
  for (const std::string& id : {std::string("3"), std::string("4")}) {
    std::vector<const AdjudicationRecord*> recs;
    for (const auto& a : adjudications)
      if (a.class_id == id) recs.push_back(&a);
    if (recs.empty()) continue;
    const bool all_implemented = std::all_of(
        recs.begin(), recs.end(), [](const AdjudicationRecord* a) {
          return a->confirmed == "implemented";
        });
    std::string reading = id == "3"
                              ? "1 + q^binom(n,2) for every n; the variant vanishing past n=3"
                              : "zero past n=3; the variant q + q^2 for every n";
    if (all_implemented) {
      out.push_back("class " + id + ", n=4.." + std::to_string(n_max) +
                    ": oracle confirms the implemented reading (" + reading + " is refuted)");
    } else {
      out.push_back("class " + id + ": oracle DISAGREES with the implemented reading");
    }
  }
  for (const auto& rec : oracle_only) {
    out.push_back("class 12 {" + rec.set.to_string() + "}, n=" + std::to_string(rec.n) +
                  ": no closed form; oracle gives " + rec.oracle.to_string());
  }
  if (!class13.empty()) {
    std::string pal_fail, lc_fail;
    for (const auto& e : class13) {
      if (!e.palindromic && pal_fail.empty()) pal_fail = std::to_string(e.n);
      if (!e.log_concave && lc_fail.empty()) lc_fail = std::to_string(e.n);
    }
    out.push_back(pal_fail.empty()
                      ? "class 13: coefficients palindromic for n=3..12"
                      : "class 13: coefficients NOT palindromic (first failure n=" + pal_fail +
                            ")");
    out.push_back(lc_fail.empty()
                      ? "class 13: coefficients log-concave for n=3..12 (conjecture holds here)"
                      : "class 13: LOG-CONCAVITY CONJECTURE FAILS at n=" + lc_fail);
  }
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json jruns = nlohmann::json::array();
  for (const auto& r : runs) {
    jruns.push_back({{"class", r.class_id},
                     {"set", r.set.pattern_strings()},
                     {"n", r.n},
                     {"match", r.match},
                     {"formula", r.formula.coeffs()},
                     {"oracle", r.oracle.coeffs()}});
  }
  nlohmann::json jadj = nlohmann::json::array();
  for (const auto& a : adjudications) {
    jadj.push_back({{"class", a.class_id},
                    {"n", a.n},
                    {"oracle", a.oracle.coeffs()},
                    {"implemented", a.implemented.coeffs()},
                    {"alternate", a.alternate.coeffs()},
                    {"confirmed", a.confirmed}});
  }
  nlohmann::json jopen = nlohmann::json::array();
  for (const auto& rec : oracle_only) {
    jopen.push_back(
        {{"set", rec.set.pattern_strings()}, {"n", rec.n}, {"oracle", rec.oracle.coeffs()}});
  }
  nlohmann::json j13 = nlohmann::json::array();
  for (const auto& e : class13) {
    j13.push_back({{"n", e.n},
                   {"coeffs", e.poly.coeffs()},
                   {"palindromic", e.palindromic},
                   {"log_concave", e.log_concave}});
  }
  return {{"runs", jruns},
          {"summary",
           {{"n_max", n_max},
            {"total", runs.size()},
            {"matched", matched()},
            {"mismatched", mismatched()},
            {"adjudications", jadj},
            {"no_closed_form", jopen},
            {"class13", j13},
            {"findings", findings()}}}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport report;
  const auto& summary = j.at("summary");
  report.n_max = summary.at("n_max").get<int>();
  for (const auto& r : j.at("runs")) {
    RunRecord rec;
    rec.class_id = r.at("class").get<std::string>();
    std::vector<GeneralizedPattern> pats;
    for (const auto& p : r.at("set")) pats.push_back(GeneralizedPattern::parse(p));
    rec.set = PatternSet(std::move(pats));
    rec.n = r.at("n").get<int>();
    rec.formula = QPolynomial(r.at("formula").get<std::vector<std::int64_t>>());
    rec.oracle = QPolynomial(r.at("oracle").get<std::vector<std::int64_t>>());
    rec.match = r.at("match").get<bool>();
    report.runs.push_back(std::move(rec));
  }
  for (const auto& a : summary.at("adjudications")) {
    AdjudicationRecord adj;
    adj.class_id = a.at("class").get<std::string>();
    adj.n = a.at("n").get<int>();
    adj.oracle = QPolynomial(a.at("oracle").get<std::vector<std::int64_t>>());
    adj.implemented = QPolynomial(a.at("implemented").get<std::vector<std::int64_t>>());
    adj.alternate = QPolynomial(a.at("alternate").get<std::vector<std::int64_t>>());
    adj.confirmed = a.at("confirmed").get<std::string>();
    report.adjudications.push_back(std::move(adj));
  }
  for (const auto& r : summary.at("no_closed_form")) {
    OracleOnlyRecord rec;
    std::vector<GeneralizedPattern> pats;
    for (const auto& p : r.at("set")) pats.push_back(GeneralizedPattern::parse(p));
    rec.set = PatternSet(std::move(pats));
    rec.n = r.at("n").get<int>();
    rec.oracle = QPolynomial(r.at("oracle").get<std::vector<std::int64_t>>());
    report.oracle_only.push_back(std::move(rec));
  }
  for (const auto& e : summary.at("class13")) {
    Class13Entry entry;
    entry.n = e.at("n").get<int>();
    entry.poly = QPolynomial(e.at("coeffs").get<std::vector<std::int64_t>>());
    entry.palindromic = e.at("palindromic").get<bool>();
    entry.log_concave = e.at("log_concave").get<bool>();
    report.class13.push_back(std::move(entry));
  }
  return report;
}

std::string VerificationReport::render_text(bool show_timing) const {
  std::ostringstream out;
  std::size_t set_width = 8;
  for (const auto& r : runs) set_width = std::max(set_width, r.set.to_string().size());
  std::string set_header = "set";
  set_header.resize(set_width, ' ');
  out << "class        n  " << set_header << "  result\n";
  for (const auto& r : runs) {
    std::string set_text = r.set.to_string();
    set_text.resize(set_width, ' ');
    std::string cls = r.class_id;
    cls.resize(11, ' ');
    out << cls << " " << (r.n < 10 ? " " : "") << r.n << "  " << set_text << "  "
        << (r.match ? "MATCH" : "MISMATCH");
    if (show_timing) out << "  (" << r.seconds << "s)";
    out << "\n";
  }
  out << "summary: " << runs.size() << " runs, " << matched() << " matched, " << mismatched()
      << " mismatched\n";
  for (const auto& line : findings()) out << "finding: " << line << "\n";
  if (!class13.empty()) {
    out << "class 13 structure:\n";
    for (const auto& e : class13) {
      out << "  n=" << e.n << "  " << (e.palindromic ? "palindromic    " : "not palindromic")
          << "  " << (e.log_concave ? "log-concave    " : "NOT log-concave") << "  "
          << e.poly.to_string() << "\n";
    }
  }
  return out.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "class,set,n,exponent,coefficient,source\n";
  auto emit = [&out](const std::string& cls, const PatternSet& set, int n, const QPolynomial& p,
                     const char* source) {
    for (int e = 0; e <= p.degree(); ++e) {
      if (p.coeff(e) == 0) continue;
      out << cls << "," << quote_csv(set.to_string()) << "," << n << "," << e << ","
          << p.coeff(e) << "," << source << "\n";
    }
  };
  for (const auto& r : runs) {
    emit(r.class_id, r.set, r.n, r.formula, "formula");
    emit(r.class_id, r.set, r.n, r.oracle, "oracle");
  }
  for (const auto& rec : oracle_only) emit("12", rec.set, rec.n, rec.oracle, "oracle");
  return out.str();
}

}  // namespace consec
