// Command-line front end: avoid | invpoly | verify | table | tableau | catalan.
// Exit codes: 0 success / all match, 1 verification mismatch, 2 usage or
// parse error, 3 resource cap exceeded.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "consec/config.hpp"
#include "consec/dyck.hpp"
#include "consec/formulas.hpp"
#include "consec/pattern.hpp"
#include "consec/qpolynomial.hpp"
#include "consec/tableaux.hpp"
#include "consec/verify.hpp"

namespace {

using namespace consec;

struct GlobalOptions {
  std::optional<int> cap;
  std::optional<int> jobs;
  std::optional<std::string> cache_dir;
  std::string config_path;
  bool json = false;
  bool csv = false;
  bool timing = false;
};

Settings resolve(const GlobalOptions& g) {
  ConfigValues cli;
  cli.cap = g.cap;
  cli.jobs = g.jobs;
  cli.cache_dir = g.cache_dir;
  ConfigValues env = read_config_env();
  ConfigValues file;
  std::string config_path = g.config_path;
  if (config_path.empty()) {
    if (const char* p = std::getenv("CONSEC_CONFIG")) config_path = p;
  }
  if (!config_path.empty()) file = read_config_file(config_path);
  return resolve_settings(cli, env, file);
}

nlohmann::json poly_json(int n, const PatternSet& s, const QPolynomial& p) {
  return {{"n", n}, {"patterns", s.pattern_strings()}, {"coeffs", p.coeffs()}};
}

int cmd_avoid(const GlobalOptions& g, int n, const std::string& pattern_text, bool count_only) {
  const Settings settings = resolve(g);
  const PatternSet set = PatternSet::parse(pattern_text);
  std::vector<Permutation> avoiders = enumerate_avoiders(n, set, settings.cap);
  if (g.json) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& p : avoiders) members.push_back(p.to_compact_string());
    nlohmann::json out = {{"n", n},
                          {"patterns", set.pattern_strings()},
                          {"count", avoiders.size()}};
    if (!count_only) out["avoiders"] = members;
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (count_only) {
    std::cout << avoiders.size() << "\n";
    return 0;
  }
  for (const auto& p : avoiders) std::cout << p.to_compact_string() << "\n";
  std::cout << "count " << avoiders.size() << "\n";
  return 0;
}

int cmd_invpoly(const GlobalOptions& g, int n, const std::string& pattern_text,
                const std::string& mode) {
  const Settings settings = resolve(g);
  const PatternSet set = PatternSet::parse(pattern_text);
  std::optional<QPolynomial> formula, oracle;
  if (mode == "formula" || mode == "both") formula = inv_poly(set, n);
  if (mode == "oracle" || mode == "both") {
    oracle = cached_oracle(set, n, settings.cap, settings.jobs, settings.cache_dir);
  }

  if (g.csv) {
    std::cout << "class,set,n,exponent,coefficient,source\n";
    std::string cls = "unknown";
    try {
      cls = classify(set).class_id;
    } catch (const std::invalid_argument&) {
    }
    auto emit = [&](const QPolynomial& p, const char* source) {
      for (int e = 0; e <= p.degree(); ++e) {
        if (p.coeff(e) == 0) continue;
        std::cout << cls << ",\"" << set.to_string() << "\"," << n << "," << e << ","
                  << p.coeff(e) << "," << source << "\n";
      }
    };
    if (formula) emit(*formula, "formula");
    if (oracle) emit(*oracle, "oracle");
  } else if (g.json) {
    nlohmann::json out;
    if (formula && oracle) {
      out = {{"n", n},
             {"patterns", set.pattern_strings()},
             {"formula", formula->coeffs()},
             {"oracle", oracle->coeffs()},
             {"match", *formula == *oracle}};
    } else {
      out = poly_json(n, set, formula ? *formula : *oracle);
    }
    std::cout << out.dump() << "\n";
  } else if (formula && oracle) {
    std::cout << "formula: " << formula->to_string() << "\n";
    std::cout << "oracle:  " << oracle->to_string() << "\n";
    std::cout << (*formula == *oracle ? "MATCH" : "MISMATCH") << "\n";
  } else {
    std::cout << (formula ? *formula : *oracle).to_string() << "\n";
  }
  if (formula && oracle && *formula != *oracle) return 1;
  return 0;
}

int cmd_verify(const GlobalOptions& g, int n_max, const std::string& classes_text,
               const std::string& report_path) {
  const Settings settings = resolve(g);
  VerifyOptions options;
  options.n_max = n_max;
  options.jobs = settings.jobs;
  options.cap = settings.cap;
  options.cache_dir = settings.cache_dir;
  if (!classes_text.empty()) {
    std::string token;
    for (char c : classes_text + ",") {
      if (c == ',') {
        if (!token.empty()) options.class_filter.push_back(token);
        token.clear();
      } else {
        token += c;
      }
    }
  }
  const VerificationReport report = run_verification(options);
  if (g.csv) {
    std::cout << report.to_csv();
  } else if (g.json) {
    std::cout << report.to_json().dump() << "\n";
  } else {
    std::cout << report.render_text(g.timing);
  }
  if (!report_path.empty() && report_path != "none") {
    std::ofstream out(report_path);
    out << report.to_json().dump(2) << "\n";
  }
  if (!report.all_match()) {
    for (const auto& r : report.runs) {
      if (!r.match) {
        std::cerr << "first mismatch: class " << r.class_id << " {" << r.set.to_string()
                  << "} n=" << r.n << "\n  formula: " << r.formula.to_string()
                  << "\n  oracle:  " << r.oracle.to_string() << "\n";
        break;
      }
    }
    return 1;
  }
  return 0;
}

int cmd_table(const GlobalOptions& g, int n) {
  const Settings settings = resolve(g);
  nlohmann::json jrows = nlohmann::json::array();
  std::size_t set_width = 8;
  for (const auto& row : classification_rows()) {
    for (const auto& m : row.members) {
      set_width = std::max(set_width, m.set.to_string().size());
    }
  }
  for (const auto& row : classification_rows()) {
    if (row.class_id.rfind("size", 0) == 0) continue;  // table rows are classes 1..13
    for (const auto& member : row.members) {
      QPolynomial poly;
      std::string source = "formula";
      if (row.class_id == "12") {
        poly = cached_oracle(member.set, n, settings.cap, settings.jobs, settings.cache_dir);
        source = "oracle";
      } else {
        poly = inv_poly(member.set, n);
      }
      if (g.json) {
        jrows.push_back({{"class", row.class_id},
                         {"set", member.set.pattern_strings()},
                         {"n", n},
                         {"coeffs", poly.coeffs()},
                         {"source", source}});
      } else {
        std::string cls = row.class_id;
        cls.resize(4, ' ');
        std::string set_text = member.set.to_string();
        set_text.resize(set_width, ' ');
        std::cout << cls << " " << set_text << "  " << poly.to_string()
                  << (source == std::string("oracle") ? "  (oracle)" : "") << "\n";
      }
    }
  }
  if (g.json) std::cout << jrows.dump() << "\n";
  return 0;
}

int cmd_tableau(const GlobalOptions& g, const std::string& perm_text) {
  const Permutation p = Permutation::parse(perm_text);
  const StripTableau strip = StripTableau::from_word(p);
  static const char* kPatterns[] = {"321", "312", "231", "213", "132", "123"};
  if (g.json) {
    nlohmann::json out = strip.to_json();
    out["word"] = p.to_string();
    out["inv"] = strip.inversion_count();
    nlohmann::json conditions;
    for (const char* pat : kPatterns) {
      conditions[pat] = structurally_avoids(strip, GeneralizedPattern::parse(pat));
    }
    out["avoids"] = conditions;
    const bool fib = conditions["321"].get<bool>() && conditions["312"].get<bool>();
    if (fib) out["fibonacci_shape"] = strip_to_fibonacci(strip).shape().to_string();
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "word: " << p.to_string() << "\n";
  std::cout << strip.render();
  std::cout << "inv " << strip.inversion_count() << "\n";
  std::cout << "avoids:";
  bool fib_eligible = true;
  for (const char* pat : kPatterns) {
    const bool ok = structurally_avoids(strip, GeneralizedPattern::parse(pat));
    if ((std::string(pat) == "321" || std::string(pat) == "312") && !ok) fib_eligible = false;
    if (ok) std::cout << " " << pat;
  }
  std::cout << "\n";
  if (fib_eligible) {
    const FibonacciTableau fib = strip_to_fibonacci(strip);
    std::cout << "fibonacci shape " << fib.shape().to_string() << "\n";
    std::cout << fib.render();
  }
  return 0;
}

int cmd_catalan(const GlobalOptions& g, int k) {
  const QPolynomial c = q_catalan(k);
  if (g.json) {
    std::cout << nlohmann::json({{"k", k}, {"coeffs", c.coeffs()}}).dump() << "\n";
  } else {
    std::cout << c.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inversion generating functions for permutations avoiding consecutive patterns"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--cap", g.cap, "largest n the enumerators accept (default 12)")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs,-j", g.jobs, "oracle worker count (0 = all cores)");
  app.add_option("--cache-dir", g.cache_dir, "directory for cached oracle polynomials");
  app.add_option("--config", g.config_path, "JSON config file (keys: cap, jobs, cache_dir)");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--csv", g.csv, "long-form CSV output");
  app.add_flag("--timing", g.timing, "include timings in verify output");

  int avoid_n = 0;
  std::string avoid_patterns;
  bool avoid_count = false;
  auto* avoid = app.add_subcommand("avoid", "list or count the avoiders of a pattern set");
  avoid->fallthrough();
  avoid->add_option("-n", avoid_n, "permutation length")->required();
  avoid->add_option("-p,--patterns", avoid_patterns, "comma-separated patterns, e.g. 321,31-2")
      ->required();
  avoid->add_flag("--count", avoid_count, "print the cardinality only");

  int invpoly_n = 0;
  std::string invpoly_patterns, invpoly_mode = "both";
  auto* invpoly = app.add_subcommand("invpoly", "inversion polynomial of an avoider set");
  invpoly->fallthrough();
  invpoly->add_option("-n", invpoly_n, "permutation length")->required();
  invpoly->add_option("-p,--patterns", invpoly_patterns, "comma-separated patterns")->required();
  invpoly->add_option("--mode", invpoly_mode, "formula | oracle | both (default)")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));

  int verify_nmax = 7;
  std::string verify_classes, verify_report = "verify_report.json";
  auto* verify = app.add_subcommand("verify", "formula-vs-oracle campaign over all classes");
  verify->fallthrough();
  verify->add_option("--nmax", verify_nmax, "verify for 3 <= n <= nmax (default 7)");
  verify->add_option("--classes", verify_classes,
                     "comma-separated row ids (1..13, size5-inc, size5-other, size6)");
  verify->add_option("--report", verify_report,
                     "path for the JSON report (default verify_report.json, 'none' to skip)");

  int table_n = 0;
  auto* table = app.add_subcommand("table", "all thirteen class polynomials at a given n");
  table->fallthrough();
  table->add_option("-n", table_n, "permutation length")->required();

  std::string tableau_perm;
  auto* tableau = app.add_subcommand("tableau", "strip tableau of a permutation, with statistics");
  tableau->fallthrough();
  tableau->add_option("permutation", tableau_perm, "one-line permutation, e.g. \"3 1 2\"")
      ->required();

  int catalan_k = 0;
  auto* catalan = app.add_subcommand("catalan", "q-Catalan polynomial C_k(q)");
  catalan->fallthrough();
  catalan->add_option("k", catalan_k, "index")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (avoid->parsed()) return cmd_avoid(g, avoid_n, avoid_patterns, avoid_count);
    if (invpoly->parsed()) return cmd_invpoly(g, invpoly_n, invpoly_patterns, invpoly_mode);
    if (verify->parsed()) return cmd_verify(g, verify_nmax, verify_classes, verify_report);
    if (table->parsed()) return cmd_table(g, table_n);
    if (tableau->parsed()) return cmd_tableau(g, tableau_perm);
    if (catalan->parsed()) return cmd_catalan(g, catalan_k);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const OpenFormula& e) {
    std::cerr << "error: " << e.what() << " (try --mode oracle)\n";
    return 2;
  } catch (const NotCovered& e) {
    std::cerr << "error: " << e.what() << " (try --mode oracle)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
