#include "qcong/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>
#include <tuple>

#include "qcong/errors.hpp"
#include "qcong/modring.hpp"
#include "qcong/qcore.hpp"
#include "qcong/theorems.hpp"

namespace qcong {
namespace {

template <class Body>
VerificationReport timed_check(std::string statement, Params params, Body&& body) {
  VerificationReport report;
  report.statement = std::move(statement);
  report.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

void add(std::vector<SuiteTask>& tasks, std::string statement, Params params, bool expect_pass,
         std::function<VerificationReport()> run) {
  tasks.push_back({std::move(statement), std::move(params), expect_pass, std::move(run)});
}

}  // namespace

SuiteConfig SuiteConfig::defaults(SuiteLevel level) {
  SuiteConfig config;
  config.level = level;
  if (level == SuiteLevel::kFull) {
    config.a_max = 3;
    config.m_max = 3;
    config.n_max = 2000;
  }
  return config;
}

void SuiteConfig::validate() const {
  if (a_max < 1 || m_max < 1 || n_max < 1) throw InvalidArgument("a_max, m_max, n_max must be >= 1");
  if (jobs < 1) throw InvalidArgument("jobs must be >= 1");
  if (level == SuiteLevel::kQuick && (a_max > 2 || m_max > 2 || n_max > 200)) {
    throw InvalidArgument("quick level requires a_max <= 2, m_max <= 2, n_max <= 200");
  }
}

std::size_t SuiteResult::matched() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.as_expected(); }));
}

std::vector<SuiteTask> plan_suite(const SuiteConfig& config) {
  config.validate();
  const bool full = config.level == SuiteLevel::kFull;
  const std::int64_t a_small = std::min<std::int64_t>(config.a_max, 2);
  const std::int64_t m_small = std::min<std::int64_t>(config.m_max, 2);
  std::vector<SuiteTask> tasks;

  std::vector<std::pair<std::int64_t, std::int64_t>> eq13_grid;
  for (std::int64_t a = 1; a <= config.a_max; ++a) {
    for (std::int64_t m = 1; m <= config.m_max; ++m) eq13_grid.emplace_back(a, m);
  }
  if (full) eq13_grid.emplace_back(4, 1);

  for (auto [a, m] : eq13_grid) {
    add(tasks, "eq13", {{"a", a}, {"m", m}}, true, [a, m] { return verify_eq13(a, m); });
    add(tasks, "eq13", {{"a", a}, {"m", m}, {"power", 3}}, false,
        [a, m] { return verify_eq13(a, m, {.modulus_power = 3}); });
  }
  for (std::int64_t a = 1; a <= config.a_max; ++a) {
    add(tasks, "eq13", {{"a", a}, {"m", 1}, {"truncate", 1}}, false,
        [a] { return verify_eq13(a, 1, {.truncate = true}); });
  }

  for (std::int64_t a = 1; a <= config.a_max; ++a) {
    add(tasks, "eq14", {{"a", a}}, true, [a] { return verify_eq14(a); });
    add(tasks, "eq14", {{"a", a}, {"perturb", 1}}, false, [a] { return verify_eq14(a, true); });
  }

  for (std::int64_t a = 1; a <= a_small; ++a) {
    for (std::int64_t m = 1; m <= config.m_max; ++m) {
      add(tasks, "psi_check", {{"a", a}, {"m", m}, {"psi", 1}}, true,
          [a, m] { return psi_check(PsiSpec::psi_m(a, m)); });
      for (int kind : {0, 1}) {
        auto make = [a, m, kind] { return kind == 0 ? PsiSpec::zero(a, m) : PsiSpec::psi_m(a, m); };
        add(tasks, "eq21", {{"a", a}, {"m", m}, {"psi", kind}}, true,
            [a, m, make] { return verify_eq21(a, m, make()); });
        add(tasks, "eq21", {{"a", a}, {"m", m}, {"power", 3}, {"psi", kind}}, false,
            [a, m, make] { return verify_eq21(a, m, make(), 3); });
      }
    }
  }
  add(tasks, "psi_check", {{"a", 1}, {"m", 1}, {"psi", 2}}, false,
      [] { return psi_check(PsiSpec::identity(1, 1)); });
  add(tasks, "eq21", {{"a", 1}, {"m", 1}, {"psi", 2}}, false,
      [] { return verify_eq21(1, 1, PsiSpec::identity(1, 1)); });

  for (std::int64_t a = 1; a <= a_small; ++a) {
    for (std::int64_t m = 1; m <= m_small; ++m) {
      const std::int64_t last = ipow3(a) * m - 1;
      add(tasks, "id33", {{"a", a}, {"m", m}}, true, [a, m] { return verify_identity33(a, m); });
      add(tasks, "id33", {{"a", a}, {"drop", last}, {"m", m}}, false,
          [a, m, last] { return verify_identity33(a, m, last); });
    }
  }

  for (std::int64_t a = 1; a <= config.a_max; ++a) {
    add(tasks, "lemma31", {{"a", a}, {"k_max", 3 * ipow3(a)}}, true,
        [a] { return verify_lemma31_sweep(a); });
  }
  for (std::int64_t a = 1; a <= a_small; ++a) {
    add(tasks, "lemma32", {{"a", a}, {"psi", 0}}, true,
        [a] { return verify_lemma32(a, PsiSpec::zero(a, 1)); });
    add(tasks, "lemma32", {{"a", a}, {"psi", 1}}, true,
        [a] { return verify_lemma32(a, PsiSpec::psi_m(a, 1)); });
  }

  const std::int64_t ssz_max = full ? 8 : 4;
  for (std::int64_t a = 1; a <= ssz_max; ++a) {
    add(tasks, "ssz12", {{"a", a}}, true, [a] { return verify_ssz12(a); });
  }
  const std::int64_t n_max = config.n_max;
  add(tasks, "ssz_quotient", {{"n_max", n_max}}, true,
      [n_max] { return verify_ssz_quotient_range(n_max); });
  for (std::int64_t n = 1; n <= 3; ++n) {
    add(tasks, "ssz_quotient", {{"n", n}}, true, [n] { return verify_ssz_quotient(n); });
  }

  for (std::int64_t p : {2, 5, 7, 11, 13}) {
    for (std::int64_t a : {1, 2}) {
      add(tasks, "sun_tauraso", {{"a", a}, {"p", p}}, true,
          [p, a] { return verify_sun_tauraso(p, a); });
    }
  }

  const std::int64_t remark_max = full ? 6 : 4;
  for (std::int64_t a = 1; a <= remark_max; ++a) {
    add(tasks, "remark14", {{"a", a}}, true, [a] { return verify_remark14(a); });
  }

  for (std::int64_t d = 1; d <= 6; ++d) {
    add(tasks, "qlucas", {{"d", d}, {"x_max", 4}}, true, [d] { return q_lucas_grid(d, 4); });
  }

  const std::int64_t qbinom_n = full ? 24 : 16;
  const std::int64_t csum_n = full ? 27 : 12;
  add(tasks, "oracle_qbinom", {{"n_max", qbinom_n}}, true,
      [qbinom_n] { return check_qbinom_oracle(qbinom_n); });
  add(tasks, "oracle_csum", {{"n_max", csum_n}}, true,
      [csum_n] { return check_central_sum_oracle(csum_n); });
  add(tasks, "oracle_cyclotomic", {{"n_max", 60}}, true, [] { return check_cyclotomic_oracle(60); });
  return tasks;
}

VerificationReport run_guarded(const SuiteTask& task) {
  auto failed = [&task](std::string witness) {
    VerificationReport report;
    report.statement = task.statement;
    report.params = task.params;
    report.witness = std::move(witness);
    return report;
  };
  try {
    return task.run();
  } catch (const PsiHypothesisViolated& e) {
    return failed(e.witness());
  } catch (const std::exception& e) {
    return failed(std::string("error: ") + e.what());
  }
}

SuiteResult run_tasks(std::vector<SuiteTask> tasks, int jobs) {
  SuiteResult result;
  result.entries.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      result.entries[i] = {run_guarded(tasks[i]), tasks[i].expect_pass};
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto count = std::max<std::size_t>(1, std::min<std::size_t>(jobs, tasks.size()));
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
  }
  std::stable_sort(result.entries.begin(), result.entries.end(),
                   [](const SuiteEntry& x, const SuiteEntry& y) {
                     return std::tie(x.report.statement, x.report.params, x.expect_pass) <
                            std::tie(y.report.statement, y.report.params, y.expect_pass);
                   });
  return result;
}

SuiteResult run_suite(const SuiteConfig& config) { return run_tasks(plan_suite(config), config.jobs); }

nlohmann::json suite_to_json(const SuiteResult& result) {
  auto out = nlohmann::json::array();
  for (const auto& entry : result.entries) {
    auto j = to_json(entry.report);
    j["expected"] = entry.expect_pass;
    out.push_back(std::move(j));
  }
  out.push_back({{"summary",
                  {{"passed", result.matched()},
                   {"total", result.entries.size()},
                   {"ok", result.ok()}}}});
  return out;
}

std::string suite_to_text(const SuiteResult& result) {
  std::ostringstream out;
  for (const auto& entry : result.entries) {
    out << format_text(entry.report);
    if (!entry.expect_pass) out << " [control: expected FAIL]";
    if (!entry.as_expected()) out << " <-- UNEXPECTED";
    out << '\n';
  }
  out << "PASSED " << result.matched() << '/' << result.entries.size() << '\n';
  return out.str();
}

VerificationReport check_qbinom_oracle(std::int64_t n_max) {
  return timed_check("oracle_qbinom", {{"n_max", n_max}}, [&](VerificationReport& report) {
    for (std::int64_t n = 0; n <= n_max; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        const IntPoly product = q_binom(n, k);
        const bool ok = product == q_binom_pascal(n, k) &&
                        eval_rat(product, 1) == BigRat(binomial(n, k));
        if (!ok) {
          report.witness = std::to_string(n) + "," + std::to_string(k);
          return;
        }
      }
    }
    report.pass = true;
  });
}

VerificationReport check_central_sum_oracle(std::int64_t count_max) {
  return timed_check("oracle_csum", {{"n_max", count_max}}, [&](VerificationReport& report) {
    const IntPoly moduli[] = {q_int(3) * q_int(3), q_int(9) * q_int(9)};
    for (std::int64_t n = 1; n <= count_max; ++n) {
      const IntPoly incremental = central_qbinom_sum(n);
      bool ok = incremental == central_qbinom_sum_direct(n);
      for (const auto& m : moduli) {
        ok = ok && central_qbinom_sum(n, m) == divrem_monic(incremental, m).rem;
      }
      if (!ok) {
        report.witness = std::to_string(n);
        return;
      }
    }
    report.pass = true;
  });
}

VerificationReport check_cyclotomic_oracle(std::int64_t n_max) {
  return timed_check("oracle_cyclotomic", {{"n_max", n_max}}, [&](VerificationReport& report) {
    for (std::int64_t n = 2; n <= n_max; ++n) {
      IntPoly product{1};
      for (std::int64_t d = 2; d <= n; ++d) {
        if (n % d == 0) product *= cyclotomic(d);
      }
      if (!(product == q_int(n))) {
        report.witness = std::to_string(n);
        return;
      }
    }
    report.pass = true;
  });
}

}  // namespace qcong
