#include "cubicmaps/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "cubicmaps/census.hpp"
#include "cubicmaps/orbifolds.hpp"
#include "cubicmaps/reference_tables.hpp"

namespace cubicmaps {

namespace {

using oracle::EnumerationMode;
using oracle::TwistTransport;

std::string transport_name(TwistTransport t) {
  return t == TwistTransport::kInvariant ? "invariant" : "flip-on-reflection";
}

std::string str(const BigCount& v) { return v.get_str(); }

const reference::NonorientableRow* published_nonorientable(int g) {
  for (const auto& r : reference::kNonorientable) {
    if (r.genus == g) return &r;
  }
  return nullptr;
}

struct CubicOracleCounts {
  BigCount rooted;
  oracle::BurnsideResult rotations;
  oracle::BurnsideResult dihedral;
};

CubicOracleCounts cubic_oracle_counts(const SurfaceClass& surface, TwistTransport transport,
                                      const oracle::OracleLimits& limits) {
  const int n = cubic_edge_count(surface);
  const auto gluings = oracle::collect_gluings(n, surface, oracle::all_degrees(3), limits);
  CubicOracleCounts out;
  out.rooted = BigCount(static_cast<unsigned long>(gluings.size()));
  if (surface.orientable) out.rotations = oracle::burnside_rotations(gluings);
  out.dihedral = oracle::burnside_dihedral(gluings, transport);
  return out;
}

void expect_burnside(SuiteResult& suite, const std::string& what, const oracle::BurnsideResult& b) {
  suite.expect_true(what + " Burnside sum divisible by " + std::to_string(b.group_order), b.divisible(),
                    str(b.fixed_point_sum));
}

// Runs `fn(g)` for every genus in range and records the first failure only.
template <typename Fn>
void expect_for_range(SuiteResult& suite, const std::string& identity, int g_min, int g_max, Fn fn) {
  for (int g = g_min; g <= g_max; ++g) {
    std::string detail;
    bool ok = false;
    try {
      ok = fn(g, detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) {
      suite.expect_true(identity + " at g=" + std::to_string(g), false, detail);
      return;
    }
  }
  suite.expect_true(identity + " for " + std::to_string(g_min) + "<=g<=" + std::to_string(g_max), true);
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteResult::expect_equal(std::string identity, const std::string& expected, const std::string& actual) {
  checks.push_back({std::move(identity), expected, actual, expected == actual});
}

void SuiteResult::expect_true(std::string identity, bool condition, std::string detail) {
  checks.push_back({std::move(identity), "true", condition ? "true" : (detail.empty() ? "false" : detail), condition});
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& s : suites) {
    for (const auto& c : s.checks) {
      if (!c.passed) return &c;
    }
  }
  return nullptr;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["passed"] = passed();
  doc["options"] = {{"max_edges_orientable", options.max_edges_orientable},
                    {"max_edges_full", options.max_edges_full},
                    {"census_genus_max", options.census_genus_max},
                    {"cross_table_genus_max", options.cross_table_genus_max},
                    {"specialization_genus_max", options.specialization_genus_max}};
  doc["calibration"] = {
      {"rooting_constant", calibration.rooting_constant ? nlohmann::ordered_json(str(*calibration.rooting_constant))
                                                        : nlohmann::ordered_json(nullptr)},
      {"reflection_action",
       calibration.reflection_action ? nlohmann::ordered_json(transport_name(*calibration.reflection_action))
                                     : nlohmann::ordered_json(nullptr)}};
  auto suites_json = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    nlohmann::ordered_json sj;
    sj["name"] = s.name;
    sj["passed"] = s.passed();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"identity", c.identity}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
    }
    sj["checks"] = std::move(checks);
    suites_json.push_back(std::move(sj));
  }
  doc["suites"] = std::move(suites_json);
  if (const auto* f = first_failure()) {
    doc["first_failure"] = f->identity;
  } else {
    doc["first_failure"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

SuiteResult calibration_suite(const VerifyOptions& options, Calibration& calibration) {
  SuiteResult suite{"calibration", {}};
  const auto limits = options.limits();
  std::vector<int> genera;
  for (int g = 2; cubic_edge_count(SurfaceClass::nonorientable_surface(g)) <= options.max_edges_full; ++g) {
    if (published_nonorientable(g)) genera.push_back(g);
  }
  if (genera.empty()) {
    suite.expect_true("calibration needs max_edges_full >= 3", false);
    return suite;
  }

  std::vector<std::vector<oracle::PolygonGluing>> classes;
  bool constant_known = false;
  bool constant_consistent = true;
  BigCount constant;
  for (int g : genera) {
    const auto surface = SurfaceClass::nonorientable_surface(g);
    classes.push_back(oracle::collect_gluings(cubic_edge_count(surface), surface, oracle::all_degrees(3), limits));
    const BigCount gluings(static_cast<unsigned long>(classes.back().size()));
    const BigCount rooted(std::string(published_nonorientable(g)->rooted));
    if (gluings % rooted != 0) {
      constant_consistent = false;
      suite.expect_true("gluings per rooted map is an integer at g=" + std::to_string(g), false,
                        str(gluings) + "/" + str(rooted));
      continue;
    }
    const BigCount ratio = gluings / rooted;
    if (!constant_known) {
      constant = ratio;
      constant_known = true;
    } else if (ratio != constant) {
      constant_consistent = false;
    }
    suite.expect_equal("gluings per rooted non-orientable cubic map at g=" + std::to_string(g), "1", str(ratio));
  }
  if (constant_known && constant_consistent) calibration.rooting_constant = constant;

  for (TwistTransport t : {TwistTransport::kInvariant, TwistTransport::kFlipOnReflection}) {
    bool all = true;
    for (std::size_t i = 0; i < genera.size(); ++i) {
      const auto b = oracle::burnside_dihedral(classes[i], t);
      all = all && b.divisible() && b.orbits() == BigCount(std::string(published_nonorientable(genera[i])->unsensed));
    }
    if (all) {
      calibration.reflection_action = t;
      break;
    }
  }
  suite.expect_true("a reflection action reproduces the unsensed non-orientable counts",
                    calibration.reflection_action.has_value(),
                    "neither twist transport matches");
  return suite;
}

SuiteResult cubic_oracle_suite(const VerifyOptions& options, TwistTransport transport) {
  SuiteResult suite{"cubic oracle equivalence", {}};
  const auto limits = options.limits();
  for (int g = 1; cubic_edge_count(SurfaceClass::orientable_surface(g)) <= options.max_edges_orientable; ++g) {
    const auto surface = SurfaceClass::orientable_surface(g);
    const auto counts = cubic_oracle_counts(surface, transport, limits);
    const std::string at = " orientable g=" + std::to_string(g);
    suite.expect_equal("rooted" + at, str(rooted_cubic_orientable(g)), str(counts.rooted));
    expect_burnside(suite, "sensed" + at, counts.rotations);
    expect_burnside(suite, "unsensed" + at, counts.dihedral);
    if (counts.rotations.divisible()) {
      suite.expect_equal("sensed" + at, str(sensed_cubic_orientable(g)), str(counts.rotations.orbits()));
    }
    if (counts.dihedral.divisible()) {
      suite.expect_equal("unsensed" + at, str(unsensed_cubic_orientable(g)), str(counts.dihedral.orbits()));
    }
  }
  for (int g = 2; cubic_edge_count(SurfaceClass::nonorientable_surface(g)) <= options.max_edges_full; ++g) {
    const auto surface = SurfaceClass::nonorientable_surface(g);
    const auto counts = cubic_oracle_counts(surface, transport, limits);
    const std::string at = " non-orientable g=" + std::to_string(g);
    suite.expect_equal("rooted" + at, str(rooted_cubic_nonorientable(g)), str(counts.rooted));
    expect_burnside(suite, "unsensed" + at, counts.dihedral);
    if (counts.dihedral.divisible()) {
      suite.expect_equal("unsensed" + at, str(unsensed_cubic_nonorientable(g)), str(counts.dihedral.orbits()));
    }
  }
  return suite;
}

SuiteResult precubic_oracle_suite(const VerifyOptions& options) {
  SuiteResult suite{"precubic oracle equivalence", {}};
  const auto limits = options.limits();
  const int top = std::max(options.max_edges_orientable, options.max_edges_full);
  for (int n = 1; n <= top; ++n) {
    const bool full = n <= options.max_edges_full;
    const auto mode = full ? EnumerationMode::kFull : EnumerationMode::kOrientable;
    const auto tally = oracle::tally_gluings(n, mode, limits);
    const std::string at = " n=" + std::to_string(n) + (full ? " full" : " orientable");
    suite.expect_equal("gluing space size" + at, str(oracle::gluing_space_size(n, mode)),
                       std::to_string(tally.total));
    suite.expect_equal("Euler relation violations" + at, "0", std::to_string(tally.euler_violations));

    auto found = [&](bool orientable, int genus, int leaves) -> std::uint64_t {
      const auto it = tally.precubic.find({orientable, genus, leaves});
      return it == tally.precubic.end() ? 0 : it->second;
    };
    std::set<std::tuple<bool, int, int>> checked;
    for (int genus = 0; 6 * genus - 3 <= n; ++genus) {
      const auto surface = SurfaceClass::orientable_surface(genus);
      const auto leaves = precubic_leaves(surface, n);
      if (!leaves) continue;
      checked.insert({true, genus, *leaves});
      suite.expect_equal("precubic " + surface.name() + " leaves=" + std::to_string(*leaves) + at,
                         str(precubic_orientable(*leaves + 4 * genus, genus)),
                         std::to_string(found(true, genus, *leaves)));
    }
    if (full) {
      for (int crosscaps = 1; 3 * crosscaps - 3 <= n; ++crosscaps) {
        const auto surface = SurfaceClass::nonorientable_surface(crosscaps);
        const auto leaves = precubic_leaves(surface, n);
        if (!leaves) continue;
        checked.insert({false, crosscaps, *leaves});
        suite.expect_equal("precubic " + surface.name() + " leaves=" + std::to_string(*leaves) + at,
                           str(precubic_nonorientable_by_leaves(crosscaps, *leaves)),
                           std::to_string(found(false, crosscaps, *leaves)));
      }
    }
    std::uint64_t unchecked = 0;
    for (const auto& [key, count] : tally.precubic) {
      if (!checked.count(key)) unchecked += count;
    }
    suite.expect_equal("precubic gluings outside the checked shapes" + at, "0", std::to_string(unchecked));
  }
  return suite;
}

SuiteResult integrality_suite(const VerifyOptions& options) {
  SuiteResult suite{"integrality", {}};
  const int top = options.census_genus_max;
  expect_for_range(suite, "sensed orientable count integral", 1, top, [](int g, std::string&) {
    sensed_cubic_orientable(g);
    return true;
  });
  expect_for_range(suite, "unsensed orientable count integral", 1, top, [](int g, std::string&) {
    unsensed_cubic_orientable(g);
    return true;
  });
  expect_for_range(suite, "unsensed non-orientable count integral", 2, top, [](int g, std::string&) {
    unsensed_cubic_nonorientable(g);
    return true;
  });
  return suite;
}

SuiteResult sandwich_suite(const VerifyOptions& options) {
  SuiteResult suite{"sandwich bounds", {}};
  const auto orientable = census_table(true, 1, options.census_genus_max);
  const auto nonorientable = census_table(false, 2, options.census_genus_max);
  const auto describe = [](const CensusRow& r) {
    return "rooted=" + str(r.rooted) + " sensed=" + (r.sensed ? str(*r.sensed) : "-") + " unsensed=" + str(r.unsensed);
  };
  expect_for_range(suite, "rooted/(2n) <= sensed <= rooted, orientable", 1, options.census_genus_max,
                   [&](int g, std::string& detail) {
                     const auto& r = orientable[static_cast<std::size_t>(g - 1)];
                     const BigCount n = cubic_edge_count(SurfaceClass::orientable_surface(g));
                     detail = describe(r);
                     return r.rooted <= 2 * n * *r.sensed && *r.sensed <= r.rooted;
                   });
  expect_for_range(suite, "rooted/(4n) <= unsensed <= sensed, orientable", 1, options.census_genus_max,
                   [&](int g, std::string& detail) {
                     const auto& r = orientable[static_cast<std::size_t>(g - 1)];
                     const BigCount n = cubic_edge_count(SurfaceClass::orientable_surface(g));
                     detail = describe(r);
                     return r.rooted <= 4 * n * r.unsensed && r.unsensed <= *r.sensed;
                   });
  expect_for_range(suite, "rooted/(4n) <= unsensed <= rooted, non-orientable", 2, options.census_genus_max,
                   [&](int g, std::string& detail) {
                     const auto& r = nonorientable[static_cast<std::size_t>(g - 2)];
                     const BigCount n = cubic_edge_count(SurfaceClass::nonorientable_surface(g));
                     detail = describe(r);
                     return r.rooted <= 4 * n * r.unsensed && r.unsensed <= r.rooted;
                   });
  return suite;
}

SuiteResult cross_table_suite(const VerifyOptions& options) {
  SuiteResult suite{"cross-table identity", {}};
  expect_for_range(suite, "2*unsensed - sensed - rooted non-orientable = rooted(g/2) or 0", 1,
                   options.cross_table_genus_max, [](int g, std::string& detail) {
                     const BigCount lhs =
                         2 * unsensed_cubic_orientable(g) - sensed_cubic_orientable(g) - rooted_cubic_nonorientable(g);
                     const BigCount rhs = g % 2 == 0 ? rooted_cubic_orientable(g / 2) : BigCount(0);
                     detail = str(lhs) + " vs " + str(rhs);
                     return lhs == rhs;
                   });
  return suite;
}

SuiteResult specialization_suite(const VerifyOptions& options) {
  SuiteResult suite{"specialization", {}};
  for (int g = 2; g <= options.specialization_genus_max; ++g) {
    for (const auto& s : solve_closed_orbifolds(g)) {
      const auto signature = census_signature(s);
      const auto order = static_cast<std::uint64_t>(s.period);
      const BigCount difference =
          epi_nonorientable_closed(signature, order) - epi_plus_nonorientable_closed(signature, order);
      std::ostringstream id;
      id << "closed epi difference g=" << g << " (l,genus,ns,nv)=(" << s.period << ',' << s.genus << ','
         << s.semiedge_points << ',' << s.vertex_points << ')';
      suite.expect_equal(id.str(), str(s.epsilon), str(difference));
      const long rh = 6L * g - 6;
      const long lhs = static_cast<long>(s.period) * (6L * s.genus - 6 + 3L * s.semiedge_points + 4L * s.vertex_points);
      suite.expect_equal("Riemann-Hurwitz " + id.str().substr(std::string("closed epi difference ").size()),
                         std::to_string(rh), std::to_string(lhs));
    }
  }
  for (int genus = 0; genus <= 10; ++genus) {
    for (int r = 0; r <= 10; ++r) {
      OrbifoldSignature o{true, genus, 1, std::vector<std::uint64_t>(static_cast<std::size_t>(r), 2)};
      const std::string at = " genus=" + std::to_string(genus) + " r=" + std::to_string(r);
      suite.expect_equal("h2 orientable epi difference" + at, str(epsilon_h2_orientable(genus, r)),
                         str(epi_orientable_boundary(o, 2) - epi_plus_orientable_boundary(o, 2)));
      if (genus >= 1) {
        o.orientable = false;
        suite.expect_equal("h2 non-orientable epi difference" + at, str(epsilon_h2_nonorientable(genus, r)),
                           str(epi_nonorientable_boundary(o, 2) - epi_plus_nonorientable_boundary(o, 2)));
      }
    }
  }
  return suite;
}

SuiteResult table_suite() {
  SuiteResult suite{"table reproduction", {}};
  for (const auto& ref : reference::kOrientable) {
    const auto row = orientable_census_row(ref.genus);
    const std::string at = " orientable g=" + std::to_string(ref.genus);
    suite.expect_equal("rooted" + at, std::string(ref.rooted), str(row.rooted));
    suite.expect_equal("sensed" + at, std::string(ref.sensed), str(*row.sensed));
    suite.expect_equal("unsensed" + at, std::string(ref.unsensed), str(row.unsensed));
  }
  for (const auto& ref : reference::kNonorientable) {
    const auto row = nonorientable_census_row(ref.genus);
    const std::string at = " non-orientable g=" + std::to_string(ref.genus);
    suite.expect_equal("rooted" + at, std::string(ref.rooted), str(row.rooted));
    suite.expect_equal("unsensed" + at, std::string(ref.unsensed), str(row.unsensed));
  }

  using Key = std::tuple<int, int, int, int, int, std::string>;
  std::set<Key> expected;
  int g_max = 2;
  for (const auto& r : reference::kOrbifolds) {
    expected.insert({r.genus, r.period, r.orbifold_genus, r.semiedge_points, r.vertex_points, std::to_string(r.epsilon)});
    g_max = std::max(g_max, r.genus);
  }
  std::set<Key> computed;
  for (int g = 2; g <= g_max; ++g) {
    for (const auto& s : solve_closed_orbifolds(g)) {
      if (s.contributes()) computed.insert({g, s.period, s.genus, s.semiedge_points, s.vertex_points, str(s.epsilon)});
    }
  }
  const auto render = [](const std::set<Key>& keys) {
    std::ostringstream out;
    for (const auto& [g, l, genus, ns, nv, eps] : keys) {
      out << '(' << g << ',' << l << ',' << genus << ',' << ns << ',' << nv << ',' << eps << ')';
    }
    return out.str();
  };
  suite.expect_equal("orbifold rows with nonzero epsilon for 2<=g<=" + std::to_string(g_max), render(expected),
                     render(computed));
  return suite;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.options = options;
  report.suites.push_back(calibration_suite(options, report.calibration));
  const auto transport = report.calibration.reflection_action.value_or(TwistTransport::kInvariant);
  report.suites.push_back(cubic_oracle_suite(options, transport));
  report.suites.push_back(precubic_oracle_suite(options));
  report.suites.push_back(integrality_suite(options));
  report.suites.push_back(sandwich_suite(options));
  report.suites.push_back(cross_table_suite(options));
  report.suites.push_back(specialization_suite(options));
  report.suites.push_back(table_suite());
  return report;
}

}  // namespace cubicmaps
