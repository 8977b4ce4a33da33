// Self-verification: closed forms against brute force, published tables and
// internal identities.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubicmaps/oracle.hpp"

namespace cubicmaps {

struct VerifyOptions {
  int max_edges_orientable = 9;
  int max_edges_full = 6;
  int census_genus_max = 200;
  int cross_table_genus_max = 100;
  int specialization_genus_max = 12;

  oracle::OracleLimits limits() const { return {max_edges_orientable, max_edges_full}; }
};

struct CheckResult {
  std::string identity;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
  void expect_equal(std::string identity, const std::string& expected, const std::string& actual);
  void expect_true(std::string identity, bool condition, std::string detail = {});
};

/// Outcome of calibrating the gluing model against the known non-orientable
/// values.
struct Calibration {
  std::optional<BigCount> rooting_constant;
  std::optional<oracle::TwistTransport> reflection_action;
};

struct VerifyReport {
  VerifyOptions options;
  Calibration calibration;
  std::vector<SuiteResult> suites;

  bool passed() const;
  const CheckResult* first_failure() const;
  std::string to_json() const;
};

SuiteResult calibration_suite(const VerifyOptions& options, Calibration& calibration);
SuiteResult cubic_oracle_suite(const VerifyOptions& options, oracle::TwistTransport transport);
/// Precubic counts and gluing-space completeness for every edge count up to
/// the limits.
SuiteResult precubic_oracle_suite(const VerifyOptions& options);
SuiteResult integrality_suite(const VerifyOptions& options);
SuiteResult sandwich_suite(const VerifyOptions& options);
SuiteResult cross_table_suite(const VerifyOptions& options);
SuiteResult specialization_suite(const VerifyOptions& options);
SuiteResult table_suite();

VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace cubicmaps
