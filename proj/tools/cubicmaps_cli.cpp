// cubicmaps: counts of cubic one-face maps on closed surfaces.
//
//   cubicmaps count --surface orientable --genus 2 --kind unsensed
//   cubicmaps table --surface nonorientable --gmin 2 --gmax 20 --format csv
//   cubicmaps orbifolds --genus 6
//   cubicmaps verify --report report.json

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubicmaps/census.hpp"
#include "cubicmaps/formatting.hpp"
#include "cubicmaps/oracle.hpp"
#include "cubicmaps/orbifolds.hpp"
#include "cubicmaps/verify.hpp"

namespace {

using namespace cubicmaps;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxTableGenus = 10000;

struct UsageError {
  std::string message;
};

const std::vector<std::string> kFormats{"json", "csv", "markdown"};
const std::vector<std::string> kKinds{"rooted", "sensed", "unsensed"};
const std::vector<std::string> kSurfaces{"orientable", "nonorientable"};

int min_genus(bool orientable) { return orientable ? 1 : 2; }

void require_genus(bool orientable, int g, const char* flag) {
  if (g < min_genus(orientable)) {
    throw UsageError{std::string(flag) + " must be at least " + std::to_string(min_genus(orientable)) + " for " +
                     (orientable ? "orientable" : "nonorientable") + " surfaces"};
  }
  if (g > kMaxTableGenus) throw UsageError{std::string(flag) + " must be at most " + std::to_string(kMaxTableGenus)};
}

struct Options {
  std::string surface_name;
  std::string kind_name;
  std::string format_name = "markdown";
  bool orientable = true;
  int genus = 0;
  int gmin = 0;
  int gmax = 0;
  CountKind kind = CountKind::kRooted;
  OutputFormat format = OutputFormat::kMarkdown;
  bool nonzero_only = false;
  VerifyOptions verify;
  std::string report;
};

int run_count(const Options& o) {
  const SurfaceClass surface{o.orientable, o.genus};
  require_genus(o.orientable, o.genus, "--genus");
  BigCount value;
  switch (o.kind) {
    case CountKind::kRooted:
      value = o.orientable ? rooted_cubic_orientable(o.genus) : rooted_cubic_nonorientable(o.genus);
      break;
    case CountKind::kSensed:
      if (!o.orientable) throw UsageError{"sensed counts are defined only for orientable surfaces"};
      value = sensed_cubic_orientable(o.genus);
      break;
    case CountKind::kUnsensed:
      value = o.orientable ? unsensed_cubic_orientable(o.genus) : unsensed_cubic_nonorientable(o.genus);
      break;
  }
  std::cout << format_count(surface, o.kind, value, o.format);
  return 0;
}

int run_table(const Options& o) {
  require_genus(o.orientable, o.gmin, "--gmin");
  require_genus(o.orientable, o.gmax, "--gmax");
  if (o.gmin > o.gmax) throw UsageError{"--gmin must not exceed --gmax"};
  std::cout << format_census_table(o.orientable, census_table(o.orientable, o.gmin, o.gmax), o.format);
  return 0;
}

int run_orbifolds(const Options& o, bool range) {
  const int lo = range ? o.gmin : o.genus;
  const int hi = range ? o.gmax : o.genus;
  require_genus(false, lo, range ? "--gmin" : "--genus");
  require_genus(false, hi, range ? "--gmax" : "--genus");
  if (lo > hi) throw UsageError{"--gmin must not exceed --gmax"};
  std::vector<OrbifoldListing> rows;
  for (int g = lo; g <= hi; ++g) {
    for (const auto& s : solve_closed_orbifolds(g)) {
      if (!o.nonzero_only || s.contributes()) rows.push_back({g, s});
    }
  }
  std::cout << format_orbifolds(rows, o.format);
  return 0;
}

int run_verify(const Options& o) {
  for (const auto& [flag, value] : {std::pair{"--max-edges-orientable", o.verify.max_edges_orientable},
                                    std::pair{"--max-edges-full", o.verify.max_edges_full}}) {
    if (value < 3 || value > oracle::kMaxEdges) {
      throw UsageError{std::string(flag) + " must be between 3 and " + std::to_string(oracle::kMaxEdges)};
    }
  }
  const auto report = run_verification(o.verify);
  if (!o.report.empty()) {
    std::ofstream out(o.report);
    if (!out) throw UsageError{"cannot write report file " + o.report};
    out << report.to_json();
  }
  if (o.format == OutputFormat::kJson) {
    std::cout << report.to_json();
  } else {
    for (const auto& s : report.suites) {
      std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks.size() << " checks)\n";
    }
  }
  if (const auto* failure = report.first_failure()) {
    std::cerr << "verification failed: " << failure->identity << ": expected " << failure->expected << ", got "
              << failure->actual << '\n';
    return kExitVerifyFailed;
  }
  if (o.format != OutputFormat::kJson) std::cout << "PASS\n";
  return 0;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format_name, "json, csv or markdown")->check(CLI::IsMember(kFormats));
}

void add_surface(CLI::App* cmd, Options& o) {
  cmd->add_option("--surface", o.surface_name, "orientable or nonorientable")
      ->required()
      ->check(CLI::IsMember(kSurfaces));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of cubic one-face maps on closed surfaces"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Print one rooted, sensed or unsensed count");
  add_surface(count, o);
  count->add_option("--genus", o.genus, "Surface genus")->required();
  count->add_option("--kind", o.kind_name, "rooted, sensed or unsensed")->required()->check(CLI::IsMember(kKinds));
  add_format(count, o);

  auto* table = app.add_subcommand("table", "Print census rows for a genus range");
  add_surface(table, o);
  table->add_option("--gmin", o.gmin, "First genus")->required();
  table->add_option("--gmax", o.gmax, "Last genus")->required();
  add_format(table, o);

  auto* orbifolds = app.add_subcommand("orbifolds", "List closed quotient orbifolds of non-orientable surfaces");
  auto* genus_opt = orbifolds->add_option("--genus", o.genus, "Covering surface genus");
  auto* gmin_opt = orbifolds->add_option("--gmin", o.gmin, "First covering genus");
  auto* gmax_opt = orbifolds->add_option("--gmax", o.gmax, "Last covering genus");
  gmin_opt->needs(gmax_opt);
  gmax_opt->needs(gmin_opt);
  genus_opt->excludes(gmin_opt)->excludes(gmax_opt);
  orbifolds->add_flag("--nonzero-only", o.nonzero_only, "Omit orbifolds with zero coefficient");
  add_format(orbifolds, o);

  auto* verify = app.add_subcommand("verify", "Check the closed forms against brute force and known values");
  verify->add_option("--max-edges-orientable", o.verify.max_edges_orientable, "Largest orientable enumeration")
      ->capture_default_str();
  verify->add_option("--max-edges-full", o.verify.max_edges_full, "Largest twisted enumeration")
      ->capture_default_str();
  verify->add_option("--report", o.report, "Write the JSON report to FILE");
  add_format(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  o.orientable = o.surface_name != "nonorientable";
  o.format = *parse_output_format(o.format_name);
  if (!o.kind_name.empty()) o.kind = *parse_count_kind(o.kind_name);

  try {
    if (count->parsed()) return run_count(o);
    if (table->parsed()) return run_table(o);
    if (orbifolds->parsed()) {
      if (genus_opt->count() == 0 && gmin_opt->count() == 0) throw UsageError{"--genus or --gmin/--gmax is required"};
      return run_orbifolds(o, gmin_opt->count() > 0);
    }
    if (verify->parsed()) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
