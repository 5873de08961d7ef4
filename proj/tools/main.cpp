// bmat: analyze 0/1 matrices over the Boolean semiring, generate the named
// extremal families, and run verification campaigns.
//
// Exit codes: 0 ok/match, 1 no match, 2 usage or parse error, 3 bad input
// shape, 4 violated internal invariant.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmat/bounds.hpp"
#include "bmat/boolmat.hpp"
#include "bmat/boolrank.hpp"
#include "bmat/characterize.hpp"
#include "bmat/families.hpp"
#include "bmat/graphprops.hpp"
#include "bmat/harness.hpp"
#include "bmat/scramble.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitShape = 3;
constexpr int kExitViolation = 4;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

std::optional<bmat::BoolMatrix> load_matrix(const std::string& path, int& exit_code) {
  std::ifstream in(path);
  if (!in) {
    exit_code = usage_error("cannot open " + path);
    return std::nullopt;
  }
  try {
    return bmat::read_matrix(in);
  } catch (const bmat::ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    exit_code = kExitUsage;
    return std::nullopt;
  }
}

std::string check_status_name(bmat::CheckStatus s) {
  return s == bmat::CheckStatus::evaluated ? "evaluated" : "skipped";
}

json check_to_json(const bmat::BoundCheck& c) {
  json j;
  j["name"] = c.name;
  const bool eval = c.status == bmat::CheckStatus::evaluated;
  j["bound"] = eval ? json(c.bound_value) : json(nullptr);
  j["actual"] = c.actual;
  j["satisfied"] = eval ? json(c.satisfied) : json(nullptr);
  j["attained"] = eval ? json(c.attained) : json(nullptr);
  j["status"] = check_status_name(c.status);
  return j;
}

std::string display_kind(const bmat::FamilySpec& spec) {
  switch (spec.kind) {
    case bmat::FamilyKind::wielandt: return "W" + std::to_string(spec.b);
    case bmat::FamilyKind::all_ones: return "J" + std::to_string(spec.b);
    case bmat::FamilyKind::m1: return "M1";
    case bmat::FamilyKind::m2: return "M2";
    case bmat::FamilyKind::m3: return "M3";
    case bmat::FamilyKind::t2: return "T2(" + std::to_string(spec.variant) + ")";
    case bmat::FamilyKind::t3: return "T3(" + std::to_string(spec.variant) + ")";
  }
  return "?";
}

json spec_to_json(const bmat::FamilySpec& spec) {
  json j;
  j["kind"] = bmat::family_name(spec.kind);
  const bool fixed = spec.kind == bmat::FamilyKind::t2 || spec.kind == bmat::FamilyKind::t3;
  j["variant"] = fixed ? json(spec.variant) : json(nullptr);
  j["b"] = spec.b;
  j["block_sizes"] = spec.block_sizes;
  return j;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

json report_to_json(const bmat::CampaignReport& r) {
  json j;
  j["total_examined"] = r.total_examined;
  j["primitive_count"] = r.primitive_count;
  j["violation_total"] = r.violation_total;
  json violations = json::array();
  for (const auto& v : r.violations) {
    json entry;
    entry["check"] = v.check;
    entry["actual"] = v.actual;
    entry["bound"] = v.bound_value;
    json mats = json::array();
    for (const auto& m : v.matrices) mats.push_back(bmat::to_text(m));
    entry["matrices"] = mats;
    violations.push_back(entry);
  }
  j["violations"] = violations;
  json attained = json::object();
  for (const auto& [name, count] : r.attained_counts) attained[name] = count;
  j["attained_counts"] = attained;
  j["elapsed_ms"] = r.elapsed.count();
  j["passed"] = r.passed();
  return j;
}

void print_report_text(const bmat::CampaignReport& r) {
  std::cout << "examined:  " << r.total_examined << "\n";
  std::cout << "primitive: " << r.primitive_count << "\n";
  std::cout << "violations: " << r.violation_total << "\n";
  for (const auto& v : r.violations) {
    std::cout << "  " << v.check << ": actual " << v.actual << " vs bound "
              << v.bound_value << "\n";
    for (const auto& m : v.matrices) {
      std::istringstream lines(bmat::to_text(m));
      std::string line;
      while (std::getline(lines, line)) std::cout << "    " << line << "\n";
    }
  }
  if (!r.attained_counts.empty()) {
    std::cout << "attained: ";
    bool first = true;
    for (const auto& [name, count] : r.attained_counts) {
      if (!first) std::cout << " ";
      std::cout << name << "=" << count;
      first = false;
    }
    std::cout << "\n";
  }
  std::cout << "elapsed:   " << r.elapsed.count() << " ms\n";
  std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
}

struct AnalyzeOptions {
  std::string path;
  bool as_json = false;
  bool no_rank = false;
  double rank_timeout_s = 10.0;
};

int run_analyze(const AnalyzeOptions& opt) {
  int exit_code = kExitOk;
  auto loaded = load_matrix(opt.path, exit_code);
  if (!loaded) return exit_code;
  const bmat::BoolMatrix& m = *loaded;
  if (m.rows() != m.cols()) {
    std::cerr << "error: " << opt.path << ": matrix is " << m.rows() << "x"
              << m.cols() << ", analyze needs a square matrix\n";
    return kExitShape;
  }

  const bool primitive = bmat::is_primitive(m);
  std::optional<int> girth_value;
  try {
    girth_value = bmat::girth(m);
  } catch (const std::domain_error&) {
    // acyclic: no girth
  }

  std::optional<int> exponent_value;
  std::optional<bmat::ScrambleResult> scramble;
  std::optional<int> rank;
  bool rank_known = false;
  std::vector<bmat::BoundCheck> checks;
  std::optional<bmat::FamilySpec> match;
  if (primitive) {
    exponent_value = bmat::exponent(m);
    scramble = bmat::scrambling_index(m);
    bmat::CheckSelection sel;
    if (opt.no_rank) {
      sel.mask = static_cast<unsigned>(bmat::BoundId::order_bound) |
                 static_cast<unsigned>(bmat::BoundId::girth_bound);
    }
    bmat::Invariants inv;
    inv.n = m.rows();
    inv.girth = *girth_value;  // primitive matrices always have a cycle
    inv.exponent = *exponent_value;
    inv.scrambling_index = scramble->k;
    if (!opt.no_rank) {
      bmat::RankBudget budget;
      budget.timeout = std::chrono::milliseconds(
          static_cast<long long>(opt.rank_timeout_s * 1000.0));
      rank = bmat::boolean_rank(m, budget);
      rank_known = rank.has_value();
      inv.boolean_rank = rank;
    }
    checks = bmat::evaluate_checks(inv, sel);
    match = bmat::match_extremal(m);
  }

  bool violated = false;
  for (const auto& c : checks) {
    if (c.status == bmat::CheckStatus::evaluated && !c.satisfied) violated = true;
  }

  if (opt.as_json) {
    json j;
    j["n"] = m.rows();
    j["primitive"] = primitive;
    j["girth"] = girth_value ? json(*girth_value) : json(nullptr);
    j["exponent"] = exponent_value ? json(*exponent_value) : json(nullptr);
    j["scrambling_index"] = scramble ? json(scramble->k) : json(nullptr);
    if (scramble && scramble->witness_pair) {
      j["witness_pair"] = {scramble->witness_pair->first, scramble->witness_pair->second};
    } else {
      j["witness_pair"] = nullptr;
    }
    if (opt.no_rank || !primitive) {
      j["boolean_rank"] = nullptr;
    } else if (!rank_known) {
      j["boolean_rank"] = "unknown";
    } else {
      j["boolean_rank"] = *rank;
    }
    json check_list = json::array();
    for (const auto& c : checks) check_list.push_back(check_to_json(c));
    j["bound_checks"] = check_list;
    j["extremal_match"] = match ? spec_to_json(*match) : json(nullptr);
    j["label_base"] = 0;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n: " << m.rows() << "\n";
    std::cout << "primitive: " << (primitive ? "true" : "false") << "\n";
    if (girth_value) std::cout << "girth: " << *girth_value << "\n";
    if (primitive) {
      std::cout << "exponent: " << *exponent_value << "\n";
      std::cout << "scrambling index: " << scramble->k << "\n";
      if (scramble->witness_pair) {
        const auto [u, v] = *scramble->witness_pair;
        std::cout << "witness pair: (" << u << ", " << v << ") 0-based, (" << u + 1
                  << ", " << v + 1 << ") 1-based\n";
      }
      if (!opt.no_rank) {
        std::cout << "boolean rank: ";
        if (rank_known) {
          std::cout << *rank << "\n";
        } else {
          std::cout << "unknown\n";
        }
      }
      for (const auto& c : checks) {
        std::cout << "check " << c.name << ": ";
        if (c.status == bmat::CheckStatus::skipped) {
          std::cout << "skipped (rank unavailable)\n";
        } else {
          std::cout << "actual " << c.actual << " <= bound " << c.bound_value;
          if (!c.satisfied) std::cout << " VIOLATED";
          if (c.attained) std::cout << " (attained)";
          std::cout << "\n";
        }
      }
      if (match) {
        std::cout << "extremal match: " << display_kind(*match) << " b=" << match->b
                  << " blocks=[" << join_ints(match->block_sizes) << "]\n";
      } else {
        std::cout << "extremal match: none\n";
      }
    }
  }
  return violated ? kExitViolation : kExitOk;
}

struct GenerateOptions {
  std::string family;
  int b = 0;
  bool b_given = false;
  std::string blocks;
  std::string output;
};

std::optional<std::vector<int>> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) return std::nullopt;
      out.push_back(value);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

int run_generate(const GenerateOptions& opt) {
  bmat::FamilySpec spec;
  std::string name = opt.family;
  std::string arg;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    arg = name.substr(colon + 1);
    name = name.substr(0, colon);
  }
  auto parse_arg = [&](const char* what) -> std::optional<int> {
    auto v = parse_int_list(arg);
    if (!v || v->size() != 1) {
      usage_error(std::string(what) + " needs a numeric argument, e.g. " + what +
                  ":5");
      return std::nullopt;
    }
    return (*v)[0];
  };
  if (name == "wielandt" || name == "jn") {
    spec.kind = name == "wielandt" ? bmat::FamilyKind::wielandt : bmat::FamilyKind::all_ones;
    auto n = parse_arg(name.c_str());
    if (!n) return kExitUsage;
    spec.b = *n;
    if (opt.b_given || !opt.blocks.empty()) {
      return usage_error(name + ":N takes neither --b nor --blocks");
    }
  } else if (name == "m1" || name == "m2" || name == "m3") {
    spec.kind = name == "m1"   ? bmat::FamilyKind::m1
                : name == "m2" ? bmat::FamilyKind::m2
                               : bmat::FamilyKind::m3;
    if (!arg.empty()) return usage_error(name + " takes no :N argument; use --b");
    if (!opt.b_given) return usage_error(name + " requires --b");
    spec.b = opt.b;
  } else if (name == "t2" || name == "t3") {
    spec.kind = name == "t2" ? bmat::FamilyKind::t2 : bmat::FamilyKind::t3;
    auto variant = parse_arg(name.c_str());
    if (!variant) return kExitUsage;
    spec.variant = *variant;
    spec.b = 2;
    if (opt.b_given) return usage_error(name + ":I takes no --b");
  } else {
    return usage_error("unknown family '" + name +
                       "' (expected wielandt:N, jn:N, m1, m2, m3, t2:I, t3:I)");
  }
  if (!opt.blocks.empty()) {
    auto sizes = parse_int_list(opt.blocks);
    if (!sizes) return usage_error("--blocks expects a comma-separated integer list");
    spec.block_sizes = *sizes;
  }
  bmat::BoolMatrix m = bmat::BoolMatrix::zeros(1, 1);
  try {
    m = bmat::generate(spec);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  const std::string text = bmat::to_text(m);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output);
    if (!out) return usage_error("cannot write " + opt.output);
    out << text;
  }
  return kExitOk;
}

struct VerifyOptions {
  int order = 0;
  bool exhaustive = false;
  long long random_trials = 0;
  long long family_specs = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool long_run = false;
  int jobs = 1;
  std::vector<std::string> checks;
  std::string n_range = "2:8";
  std::string m_range = "2:8";
  bool as_json = false;
};

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  auto lo = parse_int_list(text.substr(0, colon));
  auto hi = parse_int_list(text.substr(colon + 1));
  if (!lo || !hi || lo->size() != 1 || hi->size() != 1) return std::nullopt;
  return std::make_pair((*lo)[0], (*hi)[0]);
}

std::optional<bmat::CheckSelection> parse_checks(const std::vector<std::string>& names) {
  if (names.empty()) return bmat::CheckSelection{};
  unsigned mask = 0;
  for (const auto& name : names) {
    if (name == "all") {
      mask |= bmat::CheckSelection{}.mask;
    } else if (name == "order") {
      mask |= static_cast<unsigned>(bmat::BoundId::order_bound);
    } else if (name == "girth") {
      mask |= static_cast<unsigned>(bmat::BoundId::girth_bound);
    } else if (name == "rank-scrambling") {
      mask |= static_cast<unsigned>(bmat::BoundId::rank_scrambling);
    } else if (name == "rank-exponent") {
      mask |= static_cast<unsigned>(bmat::BoundId::rank_exponent);
    } else {
      return std::nullopt;
    }
  }
  return bmat::CheckSelection{mask};
}

int run_verify(const VerifyOptions& opt) {
  const int modes = (opt.exhaustive ? 1 : 0) + (opt.random_trials > 0 ? 1 : 0) +
                    (opt.family_specs > 0 ? 1 : 0);
  if (modes != 1) {
    return usage_error("pick exactly one of --exhaustive, --random T, --families T");
  }
  bmat::CampaignReport report;
  json header;
  if (opt.exhaustive) {
    if (opt.order < 1) return usage_error("--exhaustive requires --order N");
    auto sel = parse_checks(opt.checks);
    if (!sel) {
      return usage_error(
          "--checks accepts: order, girth, rank-scrambling, rank-exponent, all");
    }
    try {
      report = bmat::exhaustive_verify(opt.order, *sel, opt.long_run, opt.jobs);
    } catch (const std::invalid_argument& e) {
      return usage_error(e.what());
    }
    header["mode"] = "exhaustive";
    header["order"] = opt.order;
  } else if (opt.random_trials > 0) {
    if (!opt.seed_given) return usage_error("--random requires --seed");
    auto nr = parse_range(opt.n_range);
    auto mr = parse_range(opt.m_range);
    if (!nr || !mr) return usage_error("ranges are lo:hi, e.g. --n-range 2:8");
    try {
      report = bmat::random_pair_campaign(opt.random_trials, *nr, *mr, opt.seed);
    } catch (const std::invalid_argument& e) {
      return usage_error(e.what());
    }
    header["mode"] = "random-pairs";
    header["trials"] = opt.random_trials;
    header["n_range"] = {nr->first, nr->second};
    header["m_range"] = {mr->first, mr->second};
    header["seed"] = opt.seed;
  } else {
    if (!opt.seed_given) return usage_error("--families requires --seed");
    try {
      report = bmat::family_roundtrip_campaign(opt.family_specs, opt.seed);
    } catch (const std::invalid_argument& e) {
      return usage_error(e.what());
    }
    header["mode"] = "families";
    header["specs"] = opt.family_specs;
    header["seed"] = opt.seed;
  }
  if (opt.as_json) {
    json j = header;
    const json body = report_to_json(report);
    for (const auto& [key, value] : body.items()) j[key] = value;
    std::cout << j.dump(2) << "\n";
  } else {
    print_report_text(report);
  }
  return report.passed() ? kExitOk : kExitViolation;
}

struct MatchOptions {
  std::string path;
  bool as_json = false;
};

int run_match(const MatchOptions& opt) {
  int exit_code = kExitOk;
  auto loaded = load_matrix(opt.path, exit_code);
  if (!loaded) return exit_code;
  const bmat::BoolMatrix& m = *loaded;
  if (m.rows() != m.cols()) {
    std::cerr << "error: " << opt.path << ": matrix is " << m.rows() << "x"
              << m.cols() << ", match needs a square matrix\n";
    return kExitShape;
  }
  const auto match = bmat::match_extremal(m);
  const auto q = bmat::quotient(m);
  std::vector<int> class_sizes;
  for (const auto& cls : q.classes) class_sizes.push_back(static_cast<int>(cls.size()));
  if (opt.as_json) {
    json j;
    j["matched"] = match.has_value();
    j["spec"] = match ? spec_to_json(*match) : json(nullptr);
    j["class_sizes"] = class_sizes;
    std::cout << j.dump(2) << "\n";
  } else if (match) {
    std::cout << display_kind(*match) << " b=" << match->b << " blocks=["
              << join_ints(match->block_sizes) << "] class sizes=["
              << join_ints(class_sizes) << "]\n";
  } else {
    std::cout << "no match\n";
  }
  return match ? kExitOk : kExitNoMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean matrix scrambling index toolkit"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand("analyze", "Report invariants and bound checks for a matrix file");
  analyze->add_option("path", analyze_opt.path, "matrix file in the shared text format")->required();
  analyze->add_flag("--json", analyze_opt.as_json, "emit a JSON report");
  analyze->add_flag("--no-rank", analyze_opt.no_rank, "skip Boolean rank and rank-based checks");
  analyze->add_option("--rank-timeout", analyze_opt.rank_timeout_s, "Boolean rank budget in seconds")
      ->check(CLI::PositiveNumber);

  GenerateOptions generate_opt;
  CLI::App* generate = app.add_subcommand("generate", "Write a named family member");
  generate->add_option("family", generate_opt.family,
                       "wielandt:N, jn:N, m1, m2, m3, t2:I or t3:I")->required();
  CLI::Option* b_opt = generate->add_option("--b", generate_opt.b, "rank parameter for m1/m2/m3");
  generate->add_option("--blocks", generate_opt.blocks, "comma-separated block sizes");
  generate->add_option("-o,--output", generate_opt.output, "output file (default stdout)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--order", verify_opt.order, "matrix order for --exhaustive");
  verify->add_flag("--exhaustive", verify_opt.exhaustive, "check all matrices of the given order");
  verify->add_option("--random", verify_opt.random_trials, "random factor-pair trials");
  verify->add_option("--families", verify_opt.family_specs, "random family round-trips");
  CLI::Option* seed_opt = verify->add_option("--seed", verify_opt.seed, "campaign seed");
  verify->add_flag("--long", verify_opt.long_run, "allow the order-5 exhaustive run");
  verify->add_option("--jobs", verify_opt.jobs, "worker threads for --exhaustive")
      ->check(CLI::PositiveNumber);
  verify->add_option("--checks", verify_opt.checks,
                     "subset of {order, girth, rank-scrambling, rank-exponent, all}");
  verify->add_option("--n-range", verify_opt.n_range, "lo:hi rows for --random");
  verify->add_option("--m-range", verify_opt.m_range, "lo:hi inner dimension for --random");
  verify->add_flag("--json", verify_opt.as_json, "emit a JSON report");

  MatchOptions match_opt;
  CLI::App* match = app.add_subcommand("match", "Recognize an extremal family member");
  match->add_option("path", match_opt.path, "matrix file in the shared text format")->required();
  match->add_flag("--json", match_opt.as_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  generate_opt.b_given = b_opt->count() > 0;
  verify_opt.seed_given = seed_opt->count() > 0;

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_opt);
    if (app.got_subcommand(generate)) return run_generate(generate_opt);
    if (app.got_subcommand(verify)) return run_verify(verify_opt);
    if (app.got_subcommand(match)) return run_match(match_opt);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
