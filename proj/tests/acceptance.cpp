// Acceptance sweep: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <thread>

#include "qtorus/star_nctorus.hpp"
#include "qtorus/tqft.hpp"
#include "suites.hpp"

using namespace qtorus;
using qtorus::cli::run_suite;
using qtorus::cli::SuiteOptions;
using qtorus::cli::SuiteResult;

namespace {

// Every identity is exact; only the numeric shadow of [n] carries a tolerance.
constexpr double kQintTolerance = 1e-9;

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<int> levels(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_suite(const SuiteResult& res) {
  std::string detail = std::to_string(res.checks) + " checks, " + std::to_string(res.failures.size()) + " failures";
  if (!res.ok()) detail += "; first: " + res.failures.front().params.dump();
  return {res.ok(), detail};
}

SuiteResult suite(const std::string& name, std::function<void(SuiteOptions&)> tweak) {
  SuiteOptions o = qtorus::cli::default_options(name);
  o.jobs = jobs();
  tweak(o);
  return run_suite(name, o);
}

Outcome criterion_1() {
  return from_suite(suite("product-to-sum", [](SuiteOptions& o) {
    o.levels = levels(3, 8);
    o.bound = 4;
  }));
}

Outcome criterion_2() {
  return from_suite(suite("thm2-consistency", [](SuiteOptions& o) {
    o.levels = levels(3, 8);
    o.bound = 6;
  }));
}

// Criteria 3 and 4 share one pipeline run; the lemma scan is report-only.
struct PipelineRuns {
  SuiteResult pipeline;
  SuiteResult scan;
};

const PipelineRuns& pipeline_runs() {
  static const PipelineRuns runs{suite("pipeline-vs-closed-form",
                                       [](SuiteOptions& o) {
                                         o.levels = levels(3, 5);
                                         o.slope_bound = 5;
                                         o.d_max = 3;
                                       }),
                                 suite("lemma-scan", [](SuiteOptions& o) {
                                   o.levels = levels(3, 6);
                                   o.range = 3;
                                   o.d_max = 0;
                                 })};
  return runs;
}

Outcome criterion_3() {
  Outcome out = from_suite(pipeline_runs().pipeline);
  const json& s = pipeline_runs().pipeline.summary;
  if (s.contains("literal_slopes")) out.detail += ", literal slopes " + s["literal_slopes"].dump();
  return out;
}

Outcome criterion_4() {
  const SuiteResult applications = suite("lemma-scan", [](SuiteOptions& o) {
    o.levels = levels(3, 5);
    o.range = 0;
    o.slope_bound = 5;
    o.d_max = 3;
  });
  const json& scan = pipeline_runs().scan.summary;
  Outcome out{applications.ok(), applications.summary["pipeline_applications"].dump() +
                                     " pipeline applications, " + std::to_string(applications.failures.size()) +
                                     " failures; scan " + scan["scanned"].dump() + " tuples, " +
                                     scan["scan_failures"].dump() + " unequal (report)"};
  if (scan["scan_failures"].get<std::size_t>() != 0) {
    for (const auto& row : pipeline_runs().scan.report_rows) {
      if (row.back() == "false") {
        std::string t;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) t += (i ? "," : "") + row[i];
        std::cout << "  scan: unequal tuple r,a,b,c,d,e = " << t << '\n';
      }
    }
  }
  return out;
}

Outcome criterion_5() {
  return from_suite(suite("cfrac", [](SuiteOptions& o) { o.bound = 12; }));
}

Outcome criterion_6() {
  return from_suite(suite("reduction-oracle", [](SuiteOptions& o) { o.levels = levels(3, 8); }));
}

// The nc-torus suite over r = 3..8 covers the clock-shift identities on 3..6
// and the rep homomorphism on the full product-to-sum range.
Outcome criterion_7() {
  const Outcome nc = from_suite(suite("nc-torus", [](SuiteOptions& o) {
    o.levels = levels(3, 8);
    o.bound = 4;
  }));
  const Outcome assoc = from_suite(suite("associativity", [](SuiteOptions& o) {
    o.levels = levels(3, 6);
    o.count = 500;
    o.seed = 1;
  }));
  return {nc.pass && assoc.pass, "nc-torus: " + nc.detail + "; associativity: " + assoc.detail};
}

Outcome criterion_8() {
  std::size_t checks = 0;
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) failed.push_back(what);
  };
  for (int r = 3; r <= 8; ++r) {
    const auto& ctx = CycloContext::get(r);
    const std::string at = " r=" + std::to_string(r);
    for (int k = 1; k < r; ++k) {
      for (int m = 1; m < r; ++m) {
        CycloElement sum(ctx);
        for (int j = 1; j < r; ++j) sum += pairing(ctx, k, j) * pairing(ctx, j, m);
        expect(sum == (k == m ? x_squared(ctx) : CycloElement(ctx)),
               "orthogonality" + at + " k=" + std::to_string(k) + " m=" + std::to_string(m));
      }
    }
    for (int n = -4 * r; n <= 4 * r; ++n) {
      const double shadow = std::sin(n * M_PI / r) / std::sin(M_PI / r);
      const std::complex<double> z = qint(ctx, n).to_complex();
      expect(std::abs(z.real() - shadow) <= kQintTolerance && std::abs(z.imag()) <= kQintTolerance,
             "qint" + at + " n=" + std::to_string(n));
    }
    for (int pp = -3; pp <= 3; ++pp) {
      for (int qq = -3; qq <= 3; ++qq) {
        if (std::gcd(pp, qq) != 1) continue;
        const std::string slope = at + " slope=" + std::to_string(pp) + "/" + std::to_string(qq);
        expect(s_matrix_op(ctx, 2 * pp, 2 * qq) == c_matrix(ctx, pp, qq), "S(2p',2q')" + slope);
        for (int n = 1; n <= 6; ++n) {
          OperatorMatrix rhs = s_matrix_op(ctx, (n + 1) * pp, (n + 1) * qq);
          if (n > 1) rhs -= s_matrix_op(ctx, (n - 1) * pp, (n - 1) * qq);
          expect(c_matrix(ctx, n * pp, n * qq) == rhs, "difference" + slope + " n=" + std::to_string(n));
        }
      }
    }
  }
  std::string detail = std::to_string(checks) + " checks, " + std::to_string(failed.size()) + " failures";
  if (!failed.empty()) detail += "; first: " + failed.front();
  return {failed.empty(), detail};
}

Outcome criterion_9() {
  const KernelReport k = kernel_compare(CycloContext::get(3), 6);
  return {true, "symbols " + std::to_string(k.symbols) + ", dim ker op " + std::to_string(k.dim_ker_op) +
                    ", dim ker nc " + std::to_string(k.dim_ker_nc) +
                    ", nc subset op " + (k.nc_subset_op ? "true" : "false") + ", dim ker clock " +
                    std::to_string(k.dim_ker_clock) + ", clock subset op " + (k.clock_subset_op ? "true" : "false")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"product-to-sum", criterion_1},      {"action consistency", criterion_2},
      {"pipeline", criterion_3},            {"lemma applications", criterion_4},
      {"continued fractions", criterion_5}, {"color reduction", criterion_6},
      {"noncommutative torus", criterion_7}, {"structural identities", criterion_8},
      {"kernel compare", criterion_9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
