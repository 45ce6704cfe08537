// hfree: coset enumeration and table fill for Hecke algebra freeness checks.
#include <hfree/hfree.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kUsage = 2;

struct Owned {
  char* p = nullptr;
  ~Owned() { hfree_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using Session = std::unique_ptr<hfree_session, decltype(&hfree_session_free)>;

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "hfree: " << msg << "\n";
  std::exit(code);
}

int status_exit(hfree_status s) {
  switch (s) {
    case HFREE_E_ARGUMENT:
    case HFREE_E_UNKNOWN_CASE:
    case HFREE_E_SYNTAX:
      return kUsage;
    default:
      return 1;
  }
}

void check(hfree_status s) {
  if (s != HFREE_OK) {
    die(status_exit(s), std::string(hfree_status_string(s)) + ": " +
                            hfree_last_error());
  }
}

std::string render(const hfree_session* s, hfree_artifact kind) {
  Owned o;
  check(hfree_render(s, kind, &o.p));
  return o.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

class OutDir {
 public:
  explicit OutDir(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) die(1, "cannot create " + dir_ + ": " + ec.message());
  }
  bool enabled() const { return !dir_.empty(); }

  void write(const std::string& name, const std::string& text) {
    if (!enabled()) return;
    const fs::path path = fs::path(dir_) / name;
    fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) die(1, "cannot write " + path.string());
    files_.push_back({{"file", name}, {"bytes", text.size()}});
  }

  // manifest.json lists every file written; no timestamps, so repeated runs
  // produce identical bytes.
  void finish(nlohmann::json meta) {
    if (!enabled()) return;
    meta["files"] = files_;
    std::ofstream f(fs::path(dir_) / "manifest.json", std::ios::binary);
    f << meta.dump(2) << "\n";
  }

 private:
  std::string dir_;
  nlohmann::json files_ = nlohmann::json::array();
};

struct RunArgs {
  std::string case_name;
  std::string presentation_file;
  std::string subgroup;
  std::string order = "lex";
  std::string shat;
  std::string emit;
  std::string out;
  std::string verify = "auto";
  uint64_t max_cosets = 0;
  uint64_t seed = 0;
  bool has_seed = false;
  unsigned jobs = 1;
  bool q1_check = false;
  bool strict_units = false;
  bool quiet = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) die(kUsage, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int do_run(const RunArgs& a) {
  hfree_options o;
  hfree_options_init(&o);
  std::string text;
  if (!a.presentation_file.empty()) {
    text = read_file(a.presentation_file);
    o.presentation_text = text.c_str();
  } else {
    o.case_name = a.case_name.c_str();
  }
  o.subgroup = a.subgroup.empty() ? nullptr : a.subgroup.c_str();
  o.order = a.order.c_str();
  o.shat = a.shat.empty() ? nullptr : a.shat.c_str();
  o.max_cosets = a.max_cosets;
  o.has_seed = a.has_seed;
  o.seed = a.seed;
  o.jobs = a.jobs;
  o.q1_check = a.q1_check;
  o.strict_units = a.strict_units;
  o.verify = a.verify.c_str();

  const auto emit = split(a.emit, ',');
  for (const auto& e : emit) {
    if (e != "basis" && e != "dot" && e != "table" && e != "log" &&
        e != "cosets") {
      die(kUsage, "unknown --emit item '" + e + "'");
    }
  }
  if (!emit.empty() && a.out.empty()) die(kUsage, "--emit needs --out DIR");

  hfree_session* raw = nullptr;
  check(hfree_run(&o, &raw));
  Session s(raw, hfree_session_free);
  const hfree_outcome outcome = hfree_session_outcome(s.get());

  const std::string report = render(s.get(), HFREE_REPORT);
  if (!a.quiet) std::cout << report;

  OutDir out(a.out);
  out.write("report.json", report);
  out.write("timings.json", render(s.get(), HFREE_TIMINGS));
  for (const auto& e : emit) {
    if (e == "basis") {
      if (outcome == HFREE_COMPLETE) {
        out.write("basis.json", render(s.get(), HFREE_BASIS));
      } else {
        std::cerr << "hfree: table incomplete, basis not written\n";
        out.write("repwords.json", render(s.get(), HFREE_REPWORDS));
      }
    } else if (e == "dot") {
      out.write("cosets.dot", render(s.get(), HFREE_DOT));
    } else if (e == "table") {
      out.write("table.txt", render(s.get(), HFREE_TABLE));
    } else if (e == "log") {
      out.write("fill.log", render(s.get(), HFREE_LOG));
    } else if (e == "cosets") {
      out.write("cosets.csv", render(s.get(), HFREE_COSETS));
    }
  }
  Owned label;
  check(hfree_session_label(s.get(), &label.p));
  out.finish({{"command", "run"},
              {"case", a.presentation_file.empty() ? a.case_name
                                                   : a.presentation_file},
              {"ordering", label.str()},
              {"exit_code", static_cast<int>(outcome)}});
  return static_cast<int>(outcome);
}

struct SuiteArgs {
  std::string tier;
  std::string out;
  unsigned jobs = 1;
  bool q1_check = false;
};

int do_suite(const SuiteArgs& a) {
  Owned plan_text;
  check(hfree_suite_plan(a.tier.c_str(), &plan_text.p));
  const auto plan = nlohmann::json::parse(plan_text.str());
  OutDir out(a.out);

  std::printf("%-7s %-6s %-20s %-10s %-10s %s\n", "W", "W/W0", "ordering",
              "result", "expected", "");
  bool all_ok = true;
  bool inconsistent = false;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : plan["rows"]) {
    hfree_options o;
    hfree_options_init(&o);
    const std::string name = row["case"];
    std::string subgroup, shat;
    for (int g : row["subgroup"]) subgroup += std::to_string(g);
    for (int g : row["shat"]) shat += std::to_string(g);
    const std::string mode = row["mode"];
    o.case_name = name.c_str();
    o.subgroup = subgroup.c_str();
    o.shat = shat.c_str();
    o.order = mode.c_str();
    o.jobs = a.jobs;
    o.q1_check = a.q1_check;

    hfree_session* raw = nullptr;
    check(hfree_run(&o, &raw));
    Session s(raw, hfree_session_free);
    const std::size_t missing = hfree_session_missing(s.get());
    const std::size_t expected = row["expected_missing"];
    const hfree_outcome outcome = hfree_session_outcome(s.get());
    if (outcome == HFREE_INCONSISTENT) inconsistent = true;
    const bool ok = outcome != HFREE_INCONSISTENT && missing == expected;
    all_ok = all_ok && ok;

    auto mark = [](std::size_t m) {
      return m == 0 ? std::string("ok") : "Fail(" + std::to_string(m) + ")";
    };
    const std::string ordering = row["ordering"];
    std::printf("%-7s %-6u %-20s %-10s %-10s %s\n", name.c_str(),
                hfree_session_cosets(s.get()), ordering.c_str(),
                outcome == HFREE_INCONSISTENT ? "BAD" : mark(missing).c_str(),
                mark(expected).c_str(), ok ? "" : "MISMATCH");
    std::fflush(stdout);

    const std::string stem = name + "_" + mode + "_J" + subgroup + "_" + shat;
    out.write(stem + "/report.json", render(s.get(), HFREE_REPORT));
    rows.push_back({{"case", name},
                    {"ordering", ordering},
                    {"missing", missing},
                    {"expected_missing", expected},
                    {"matches", ok}});
  }
  for (const auto& ex : plan["excluded"]) {
    std::printf("excluded: %s (%s)\n", ex["case"].get<std::string>().c_str(),
                ex["reason"].get<std::string>().c_str());
  }
  out.write("suite.json", nlohmann::json({{"tier", a.tier},
                                          {"rows", rows},
                                          {"excluded", plan["excluded"]}})
                              .dump(2) +
                              "\n");
  out.finish({{"command", "suite"}, {"tier", a.tier}});
  if (inconsistent) return static_cast<int>(HFREE_INCONSISTENT);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke algebra freeness: coset tables filled by cyclic "
               "expansion and edge reversal"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run = app.add_subcommand("run", "run one case");
  auto* case_opt = run->add_option("--case", ra.case_name, "catalogue name");
  auto* pres_opt = run->add_option("--presentation", ra.presentation_file,
                                   "presentation file instead of --case")
                       ->check(CLI::ExistingFile);
  case_opt->excludes(pres_opt);
  run->add_option("--subgroup", ra.subgroup, "generators of W0, e.g. 2,3");
  run->add_option("--order", ra.order, "lex or dc")
      ->check(CLI::IsMember({"lex", "dc"}));
  run->add_option("--shat", ra.shat, "generator order, e.g. 1,2,3");
  run->add_option("--emit", ra.emit, "any of basis,dot,table,log,cosets");
  run->add_option("--out", ra.out, "directory for artifacts");
  run->add_option("--max-cosets", ra.max_cosets, "enumeration limit");
  auto* seed_opt = run->add_option("--seed", ra.seed, "shuffle the fill order");
  run->add_option("--jobs", ra.jobs, "verification threads")
      ->check(CLI::PositiveNumber);
  run->add_option("--verify", ra.verify,
                  "auto, exact or modular (random q mod 2^61-1)")
      ->check(CLI::IsMember({"auto", "exact", "modular"}));
  run->add_flag("--q1-check", ra.q1_check,
                "enumerate W and check every entry at q=1");
  run->add_flag("--strict-units", ra.strict_units,
                "revert only when the coefficient is q^k T_w");
  run->add_flag("-q,--quiet", ra.quiet, "do not print the report");

  SuiteArgs sa;
  auto* suite = app.add_subcommand("suite", "run every row of a tier");
  suite->add_option("tier", sa.tier, "fast or full")->required();
  suite->add_option("--out", sa.out, "directory for per-row reports");
  suite->add_option("--jobs", sa.jobs, "verification threads")
      ->check(CLI::PositiveNumber);
  suite->add_flag("--q1-check", sa.q1_check, "run the q=1 oracle per row");

  std::string cat_name;
  auto* cat = app.add_subcommand("catalog", "list cases or print one");
  cat->add_option("name", cat_name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*run) {
    if (ra.case_name.empty() && ra.presentation_file.empty()) {
      die(kUsage, "run needs --case or --presentation");
    }
    ra.has_seed = seed_opt->count() > 0;
    return do_run(ra);
  }
  if (*suite) {
    if (sa.tier.empty()) die(kUsage, "empty tier name");
    return do_suite(sa);
  }
  Owned o;
  if (cat_name.empty()) {
    check(hfree_catalog_names(&o.p));
  } else {
    check(hfree_catalog_text(cat_name.c_str(), &o.p));
  }
  std::cout << o.str();
  return 0;
}
