#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcong/report.hpp"

namespace qcong {

enum class SuiteLevel { kQuick, kFull };
enum class OutputFormat { kText, kJson };

/// Grid bounds for a suite run. quick keeps a_max <= 2, m_max <= 2 and
/// n_max <= 200; full defaults to a_max = 3 (plus the single (a=4, m=1)
/// point of the central sum), m_max = 3, n_max = 2000.
struct SuiteConfig {
  SuiteLevel level = SuiteLevel::kQuick;
  std::int64_t a_max = 2;
  std::int64_t m_max = 2;
  std::int64_t n_max = 200;
  OutputFormat output = OutputFormat::kText;
  int jobs = 1;

  static SuiteConfig defaults(SuiteLevel level);
  /// Throws InvalidArgument on an inconsistent configuration.
  void validate() const;
};

/// One scheduled check. Negative controls have expect_pass = false.
struct SuiteTask {
  std::string statement;
  Params params;
  bool expect_pass = true;
  std::function<VerificationReport()> run;
};

struct SuiteEntry {
  VerificationReport report;
  bool expect_pass = true;

  bool as_expected() const noexcept { return report.pass == expect_pass; }
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;

  std::size_t matched() const;
  bool ok() const { return matched() == entries.size(); }
};

std::vector<SuiteTask> plan_suite(const SuiteConfig& config);

/// Runs every task on a pool of `jobs` workers. An exception inside a
/// task becomes a failing report whose witness is the error message.
/// Entries are sorted by (statement, params, expectation).
SuiteResult run_tasks(std::vector<SuiteTask> tasks, int jobs);
SuiteResult run_suite(const SuiteConfig& config);

/// Runs one task body, turning library errors into a failing report.
VerificationReport run_guarded(const SuiteTask& task);

nlohmann::json suite_to_json(const SuiteResult& result);
std::string suite_to_text(const SuiteResult& result);

// Cross-checks between independent routes.

/// q_binom (product) == q_binom_pascal for all 0 <= k <= n <= n_max, and
/// its value at q = 1 is C(n, k).
VerificationReport check_qbinom_oracle(std::int64_t n_max);
/// Incremental central sum == direct q_binom sum for N <= count_max, and
/// reduced accumulation == remainder of the full sum mod [3]_q^2, [9]_q^2.
VerificationReport check_central_sum_oracle(std::int64_t count_max);
/// prod_{d | n, d > 1} Phi_d == [n]_q for n <= n_max.
VerificationReport check_cyclotomic_oracle(std::int64_t n_max);

}  // namespace qcong
