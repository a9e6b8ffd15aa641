#pragma once

// Named verification suites. Each check draws per-sample seeds from the master
// seed, evaluates one or more residual components per sample and reports the
// worst one. Components with their own tolerance are rescaled onto the check
// tolerance, so pass ⇔ max_rel ≤ tol holds for every check.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sjgeo/metrics.hpp"

namespace sjgeo {

struct CheckConfig {
  std::size_t n = 1;
  std::size_t m = 1;
  MetricParams params;
  std::size_t samples = 50;
  std::uint64_t seed = 42;
  std::optional<double> tol;  // per-check default when unset
  unsigned threads = 1;
};

struct ComponentSummary {
  double max_abs = 0.0;
  double max_rel = 0.0;  // before rescaling onto the check tolerance
  double tol = 0.0;
};

struct CheckReport {
  std::string check;
  std::size_t n = 0, m = 0;
  double a = 1.0, b = 1.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::optional<double> constant;  // measured operator/LB pairing constant
  nlohmann::json worst;
  double ms = 0.0;
  std::size_t retries = 0;
  std::size_t failures = 0;  // samples that raised a non-retryable error
  std::map<std::string, ComponentSummary> components;
};

const std::vector<std::string>& check_names();
double default_tolerance(const std::string& check);
bool is_check(const std::string& name);

/// Throws UnknownCheck.
CheckReport run_check(const std::string& name, const CheckConfig& config);
std::vector<CheckReport> run_all(const CheckConfig& config);

/// |a − b| / (1 + max(|a|, |b|)).
double relative_residual(double a, double b);
double relative_residual(const CMatrix& a, const CMatrix& b);

nlohmann::json to_json(const CheckReport& r, bool include_timing = true);
std::string csv_header();
std::string to_csv_row(const CheckReport& r);

}  // namespace sjgeo
