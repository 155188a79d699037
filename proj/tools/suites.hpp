// Verification sweeps driven by `qtorus verify`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtorus/json_io.hpp"

namespace qtorus::cli {

struct SuiteOptions {
  std::vector<int> levels;
  int bound = 0;        // |m|,|n|,|p|,|q| for sweeps over pairs of slopes
  int slope_bound = 0;  // |p'|,|q'| for the pipeline
  int d_max = 0;        // largest gcd multiple for the pipeline
  int range = 0;        // |a|..|e| for the lemma scan
  int count = 0;        // random triples for associativity
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct Failure {
  json params;
  std::string lhs;
  std::string rhs;
};

struct SuiteResult {
  std::string name;
  SuiteOptions options;
  std::size_t checks = 0;
  std::vector<Failure> failures;
  json summary = json::object();
  std::vector<std::string> report_header;  // non-empty for suites with a table report
  std::vector<std::vector<std::string>> report_rows;

  bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Defaults for a suite; throws std::invalid_argument for an unknown name.
SuiteOptions default_options(const std::string& suite);

SuiteResult run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace qtorus::cli
