// hyposign — classify sign patterns of real-rooted polynomials, construct
// exact witnesses realizing them, and search for all realizable orders of
// root moduli.
//
// Subcommands: classify | construct | explore | verify. Every command honors
// --seed and is reproducible; machine output via --json. Exit codes: 0 on
// success, 1 on usage or parse errors, 2 when a verification check fails.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "hyposign/catalog.hpp"
#include "hyposign/construct.hpp"
#include "hyposign/errors.hpp"
#include "hyposign/json_io.hpp"
#include "hyposign/realize.hpp"
#include "hyposign/suites.hpp"

namespace {

using nlohmann::json;
using namespace hyposign;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct GlobalOptions {
  bool as_json = false;
  std::string catalog_path;
  std::uint64_t seed = 7;
  std::uint32_t budget = 200;
  std::uint16_t jobs = 1;
  bool no_store = false;
};

SearchConfig search_config(const GlobalOptions& opts) {
  SearchConfig config;
  config.budget = opts.budget;
  config.seed = opts.seed;
  return config;
}

std::string clip(const std::string& text, std::size_t cap = 40) {
  if (text.size() <= cap) return text;
  return text.substr(0, cap - 3) + "...";
}

void print_witness(const Witness& w, const std::string& label) {
  std::cout << label << '\n';
  std::cout << "  pattern : " << w.pattern.first_rep() << "  (" << w.pattern.second_rep() << ")\n";
  std::cout << "  word    : " << w.word.text() << '\n';
  std::cout << "  roots   : ";
  for (std::size_t i = 0; i < w.roots.roots.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << clip(rational_to_string(w.roots.roots[i]));
  }
  std::cout << '\n';
  std::cout << "  poly    : " << clip(w.poly.pretty(), 120) << '\n';
  std::cout << "  method  : " << w.meta.method << '\n';
}

std::unique_ptr<Catalog> open_catalog(const GlobalOptions& opts) {
  if (opts.no_store) return nullptr;
  return std::make_unique<Catalog>(Catalog::resolve_path(opts.catalog_path));
}

void warn_quarantined(const Catalog& catalog) {
  for (const auto& entry : catalog.quarantined()) {
    std::cerr << "warning: quarantined catalog line " << entry.line << ": " << entry.reason
              << '\n';
  }
}

int run_classify(const std::string& sp_text, const GlobalOptions& opts) {
  const SignPattern sp = SignPattern::parse(sp_text);
  const Counts cnt = counts(sp);
  const StaticClassification verdict = classify_static(sp);
  const std::vector<SignPattern> members = orbit(sp);

  if (opts.as_json) {
    json orbit_json = json::array();
    for (const SignPattern& member : members) orbit_json.push_back(member.first_rep());
    json out{{"pattern",
              {{"first", sp.first_rep()}, {"second", sp.second_rep()}, {"third", sp.third_rep()}}},
             {"degree", sp.degree()},
             {"counts", {{"changes", cnt.changes}, {"preservations", cnt.preservations}}},
             {"cpp", cpp_of(sp).text()},
             {"canonicalOrder", canonical_order(sp).text()},
             {"type1", is_type1(sp)},
             {"type2", is_type2(sp)},
             {"orbit", orbit_json},
             {"verdict", {{"status", std::string(to_string(verdict.status))},
                          {"rule", verdict.rule}}}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "pattern   : " << sp.first_rep() << '\n';
  std::cout << "second    : " << sp.second_rep() << '\n';
  std::cout << "third     : " << sp.third_rep() << '\n';
  std::cout << "degree    : " << sp.degree() << '\n';
  std::cout << "counts    : c=" << cnt.changes << " p=" << cnt.preservations << '\n';
  std::cout << "cpp       : " << cpp_of(sp).text() << '\n';
  std::cout << "canonical : " << canonical_order(sp).text() << '\n';
  std::cout << "type1     : " << (is_type1(sp) ? "yes" : "no") << '\n';
  std::cout << "type2     : " << (is_type2(sp) ? "yes" : "no") << '\n';
  std::cout << "orbit     : ";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) std::cout << "  ";
    std::cout << members[i].first_rep();
  }
  std::cout << '\n';
  std::cout << "verdict   : " << to_string(verdict.status) << "  (" << verdict.rule << ")\n";
  return kExitOk;
}

int run_construct(const std::string& sp_text, const std::string& mode,
                  const GlobalOptions& opts) {
  const SignPattern sp = SignPattern::parse(sp_text);
  std::unique_ptr<Catalog> catalog = open_catalog(opts);
  if (catalog) warn_quarantined(*catalog);

  std::vector<Witness> produced;
  if (mode == "canonical") {
    produced.push_back(build_canonical(sp));
  } else if (mode == "pair") {
    if (is_type2(sp)) {
      std::cerr << "error: " << sp.second_rep()
                << " is a type 2 pattern; no pair construction applies\n";
      return kExitUsage;
    }
    auto pair = build_noncanonical_pair(sp, make_seed_finder(search_config(opts), catalog.get()));
    produced.push_back(std::move(pair.first));
    produced.push_back(std::move(pair.second));
  } else {
    std::cerr << "error: unknown mode '" << mode << "'\n";
    return kExitUsage;
  }

  for (const Witness& w : produced) {
    const VerifyReport report = verify_witness(w);
    if (!report.ok || !(w.pattern == sp)) {
      std::cerr << "error: constructed witness failed verification\n";
      return kExitVerification;
    }
  }
  if (catalog) {
    for (const Witness& w : produced) catalog->put(w);
  }

  if (opts.as_json) {
    json out = json::array();
    for (const Witness& w : produced) out.push_back(json::parse(witness_to_json(w)));
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < produced.size(); ++i) {
      print_witness(produced[i], "witness " + std::to_string(i + 1) + ":");
    }
    if (catalog) std::cout << "stored in " << catalog->path().string() << '\n';
  }
  return kExitOk;
}

int run_explore(const std::string& sp_text, const GlobalOptions& opts) {
  const SignPattern sp = SignPattern::parse(sp_text);
  std::unique_ptr<Catalog> catalog = open_catalog(opts);
  if (catalog) warn_quarantined(*catalog);

  const RealizabilityReport report = explore(sp, search_config(opts), opts.jobs, catalog.get());

  if (opts.as_json) {
    std::cout << report_to_json(report, 2) << '\n';
    return kExitOk;
  }
  std::cout << "pattern " << sp.first_rep() << " (" << sp.second_rep() << "), "
            << report.words.size() << " order words, budget " << opts.budget << ", seed "
            << opts.seed << '\n';
  for (const WordResult& result : report.words) {
    std::cout << "  " << result.word.text() << "  "
              << (result.found ? "found    " : "not-found") << "  restarts "
              << result.restarts_used;
    if (result.witness) {
      std::cout << "  roots ";
      for (std::size_t i = 0; i < result.witness->roots.roots.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << clip(rational_to_string(result.witness->roots.roots[i]), 18);
      }
    }
    std::cout << '\n';
  }
  std::cout << "found " << report.found_count() << "/" << report.words.size() << " words\n";
  if (catalog) std::cout << "stored in " << catalog->path().string() << '\n';
  return kExitOk;
}

struct VerifyFlags {
  int lmax = 300;
  int r = 2;
  int delta = 7;
  std::string side = "none";
  int tau1 = 0;
  int tau2 = 0;
  int maxlen = 12;
  int cases = 500;
  int maxd = 8;
};

int run_verify(const std::string& suite, const VerifyFlags& flags, const GlobalOptions& opts) {
  SuiteResult result;
  if (suite == "lemma1") {
    if (flags.lmax < 2 || flags.lmax > 2000) {
      std::cerr << "error: --lmax must lie in [2, 2000]\n";
      return kExitUsage;
    }
    result = suite_cluster_family(flags.lmax);
  } else if (suite == "theorem3") {
    const ThreeBlockPlan plan = ThreeBlockPlan::make(flags.r, flags.delta, flags.tau1, flags.tau2,
                                                     side_from_string(flags.side));
    result = suite_three_block(plan);
  } else if (suite == "involutions") {
    if (flags.maxlen < 2 || flags.maxlen > 16) {
      std::cerr << "error: --maxlen must lie in [2, 16]\n";
      return kExitUsage;
    }
    result = suite_involutions(flags.maxlen, flags.cases, opts.seed);
  } else if (suite == "canonical-builder") {
    if (flags.maxd < 1 || flags.maxd > 12) {
      std::cerr << "error: --maxd must lie in [1, 12]\n";
      return kExitUsage;
    }
    result = suite_canonical_builder(flags.maxd);
  } else {
    std::cerr << "error: unknown suite '" << suite
              << "' (expected lemma1|theorem3|involutions|canonical-builder)\n";
    return kExitUsage;
  }

  if (opts.as_json) {
    json checks = json::array();
    for (const CheckResult& check : result.checks) {
      checks.push_back(
          json{{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    }
    json out{{"suite", result.suite},
             {"passed", result.passed()},
             {"failed", result.failed()},
             {"checks", checks}};
    std::cout << out.dump(2) << '\n';
  } else {
    for (const CheckResult& check : result.checks) {
      if (!check.pass) std::cout << "FAIL " << check.name << ": " << check.detail << '\n';
    }
    std::cout << result.suite << ": " << result.passed() << "/" << result.checks.size()
              << " checks passed\n";
  }
  return result.pass() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sign patterns of real-rooted polynomials: classification, exact witness "
               "construction, and realizability search"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_flag("--json", opts.as_json, "machine-readable JSON output")->configurable(false);
  app.add_option("--catalog", opts.catalog_path,
                 "witness catalog path (default: $HYPOSIGN_CATALOG or ./catalog.jsonl)");
  app.add_option("--seed", opts.seed, "RNG seed (default 7)");
  app.add_option("--budget", opts.budget, "search restarts per order word (default 200)");
  app.add_option("--jobs", opts.jobs, "parallel workers for explore (default 1)");

  std::string sp_text;
  std::string mode = "canonical";
  std::string suite;
  VerifyFlags verify_flags;

  CLI::App* classify = app.add_subcommand("classify", "representations, cp-word, canonical "
                                                      "order, types, orbit and static verdict");
  classify->fallthrough();
  classify->add_option("pattern", sp_text, "sign pattern (any representation)")->required();

  CLI::App* construct = app.add_subcommand("construct", "build exact witnesses");
  construct->fallthrough();
  construct->add_option("pattern", sp_text, "sign pattern (any representation)")->required();
  construct->add_option("--mode", mode, "canonical | pair (default canonical)");
  construct->add_flag("--no-store", opts.no_store, "do not touch the catalog");

  CLI::App* explore_cmd = app.add_subcommand("explore", "try to realize every order word");
  explore_cmd->fallthrough();
  explore_cmd->add_option("pattern", sp_text, "sign pattern (any representation)")->required();
  explore_cmd->add_flag("--no-store", opts.no_store, "do not touch the catalog");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  verify->add_option("suite", suite, "lemma1 | theorem3 | involutions | canonical-builder")
      ->required();
  verify->add_option("--lmax", verify_flags.lmax, "largest ell for lemma1 (default 300)");
  verify->add_option("--r", verify_flags.r, "three-block parameter r (default 2)");
  verify->add_option("--delta", verify_flags.delta, "three-block parameter delta (default 7)");
  verify->add_option("--side", verify_flags.side, "left | right (only when delta = r^2)");
  verify->add_option("--tau1", verify_flags.tau1, "front extension count (default 0)");
  verify->add_option("--tau2", verify_flags.tau2, "back extension count (default 0)");
  verify->add_option("--maxlen", verify_flags.maxlen, "pattern length bound (default 12)");
  verify->add_option("--cases", verify_flags.cases, "randomized witness cases (default 500)");
  verify->add_option("--maxd", verify_flags.maxd, "degree bound for the builder (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return run_classify(sp_text, opts);
    if (construct->parsed()) return run_construct(sp_text, mode, opts);
    if (explore_cmd->parsed()) return run_explore(sp_text, opts);
    if (verify->parsed()) return run_verify(suite, verify_flags, opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotApplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
