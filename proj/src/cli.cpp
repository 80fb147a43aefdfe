#include "qcong/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string_view>

#include <CLI11.hpp>

#include "qcong/errors.hpp"
#include "qcong/qcore.hpp"
#include "qcong/suite.hpp"
#include "qcong/theorems.hpp"

namespace qcong {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Params parse_params(const std::vector<std::string>& items) {
  Params params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string_view text = std::string_view(item).substr(eq + 1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
      throw UsageError("value of '" + key + "' is not an integer");
    }
    if (!params.emplace(key, value).second) throw UsageError("duplicate parameter '" + key + "'");
  }
  return params;
}

/// Reads required and optional keys; rejects anything else.
class ParamReader {
 public:
  ParamReader(const Params& params, std::set<std::string> required, std::set<std::string> optional = {})
      : params_(params) {
    for (const auto& [key, value] : params) {
      if (!required.contains(key) && !optional.contains(key)) {
        throw UsageError("unknown parameter '" + key + "'");
      }
    }
    for (const auto& key : required) {
      if (!params.contains(key)) throw UsageError("missing parameter '" + key + "'");
    }
  }

  std::int64_t get(const std::string& key) const { return params_.at(key); }
  std::int64_t get_or(const std::string& key, std::int64_t fallback) const {
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

 private:
  const Params& params_;
};

PsiSpec psi_from_code(std::int64_t code, std::int64_t a, std::int64_t m) {
  switch (code) {
    case 0:
      return PsiSpec::zero(a, m);
    case 1:
      return PsiSpec::psi_m(a, m);
    case 2:
      return PsiSpec::identity(a, m);
    default:
      throw UsageError("psi must be 0 (zero), 1 (psi_m) or 2 (identity)");
  }
}

using Verifier = std::function<VerificationReport(const Params&)>;

const std::map<std::string, Verifier>& verifiers() {
  static const std::map<std::string, Verifier> table = {
      {"eq13",
       [](const Params& p) {
         ParamReader r(p, {"a", "m"}, {"truncate", "power"});
         Eq13Options options;
         options.truncate = r.get_or("truncate", 0) != 0;
         options.modulus_power = static_cast<int>(r.get_or("power", 2));
         return verify_eq13(r.get("a"), r.get("m"), options);
       }},
      {"eq14",
       [](const Params& p) {
         ParamReader r(p, {"a"}, {"perturb"});
         return verify_eq14(r.get("a"), r.get_or("perturb", 0) != 0);
       }},
      {"eq21",
       [](const Params& p) {
         ParamReader r(p, {"a", "m"}, {"psi", "power"});
         const auto a = r.get("a");
         const auto m = r.get("m");
         return verify_eq21(a, m, psi_from_code(r.get_or("psi", 0), a, m),
                            static_cast<int>(r.get_or("power", 2)));
       }},
      {"psi_check",
       [](const Params& p) {
         ParamReader r(p, {"a", "m"}, {"psi"});
         return psi_check(psi_from_code(r.get_or("psi", 1), r.get("a"), r.get("m")));
       }},
      {"id33",
       [](const Params& p) {
         ParamReader r(p, {"a", "m"}, {"drop"});
         std::optional<std::int64_t> drop;
         if (p.contains("drop")) drop = r.get("drop");
         return verify_identity33(r.get("a"), r.get("m"), drop);
       }},
      {"lemma31",
       [](const Params& p) {
         ParamReader r(p, {"a"}, {"k", "l"});
         if (p.contains("k") != p.contains("l")) throw UsageError("give both k and l, or neither");
         if (!p.contains("k")) return verify_lemma31_sweep(r.get("a"));
         return verify_lemma31(r.get("a"), r.get("k"), r.get("l"));
       }},
      {"lemma32",
       [](const Params& p) {
         ParamReader r(p, {"a"}, {"psi"});
         const auto a = r.get("a");
         return verify_lemma32(a, psi_from_code(r.get_or("psi", 1), a, 1));
       }},
      {"ssz12",
       [](const Params& p) {
         ParamReader r(p, {"a"});
         return verify_ssz12(r.get("a"));
       }},
      {"ssz_quotient",
       [](const Params& p) {
         ParamReader r(p, {}, {"n", "n_max"});
         if (p.contains("n") == p.contains("n_max")) throw UsageError("give exactly one of n, n_max");
         return p.contains("n") ? verify_ssz_quotient(r.get("n"))
                                : verify_ssz_quotient_range(r.get("n_max"));
       }},
      {"sun_tauraso",
       [](const Params& p) {
         ParamReader r(p, {"p", "a"});
         return verify_sun_tauraso(r.get("p"), r.get("a"));
       }},
      {"remark14",
       [](const Params& p) {
         ParamReader r(p, {"a"});
         return verify_remark14(r.get("a"));
       }},
      {"qlucas",
       [](const Params& p) {
         ParamReader r(p, {"d"}, {"x1", "y1", "x2", "y2", "x_max"});
         if (p.contains("x_max")) return q_lucas_grid(r.get("d"), r.get("x_max"));
         ParamReader full(p, {"d", "x1", "y1", "x2", "y2"});
         return q_lucas_check(full.get("d"), full.get("x1"), full.get("y1"), full.get("x2"),
                              full.get("y2"));
       }},
  };
  return table;
}

std::string statement_list() {
  std::string out;
  for (const auto& [name, fn] : verifiers()) out += (out.empty() ? "" : ", ") + name;
  return out;
}

void print_report(const VerificationReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    out << to_json(report).dump() << '\n';
  } else {
    out << format_text(report) << '\n';
  }
}

int cmd_verify(const std::string& statement, const std::vector<std::string>& raw, OutputFormat format,
               std::ostream& out, std::ostream& err) {
  const auto& table = verifiers();
  auto it = table.find(statement);
  if (it == table.end()) {
    err << "unknown statement '" << statement << "'; expected one of: " << statement_list() << '\n';
    return kExitUsage;
  }
  try {
    const Params params = parse_params(raw);
    const VerificationReport report = it->second(params);
    print_report(report, format, out);
    return report.pass ? kExitPass : kExitFail;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
  } catch (const PreconditionViolated& e) {
    err << "precondition violated: " << e.what() << '\n';
  } catch (const NotPrime& e) {
    err << "not prime: " << e.what() << '\n';
  } catch (const PsiHypothesisViolated& e) {
    VerificationReport report;
    report.statement = statement;
    report.params = parse_params(raw);
    report.witness = e.witness();
    print_report(report, format, out);
    err << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  err << "usage: qcong verify <statement> [key=value ...]\n";
  return kExitUsage;
}

int cmd_show(const std::string& object, const std::vector<std::string>& raw, std::ostream& out,
             std::ostream& err) {
  try {
    const Params params = parse_params(raw);
    IntPoly value;
    if (object == "qbinom") {
      ParamReader r(params, {"n", "k"});
      value = q_binom(r.get("n"), r.get("k"));
    } else if (object == "cyclotomic") {
      ParamReader r(params, {"d"});
      value = cyclotomic(r.get("d"));
    } else if (object == "qint") {
      ParamReader r(params, {"n"});
      value = q_int(r.get("n"));
    } else if (object == "sum") {
      ParamReader r(params, {"n"});
      value = central_qbinom_sum(r.get("n"));
    } else {
      err << "unknown object '" << object << "'; expected qbinom, cyclotomic, qint or sum\n";
      return kExitUsage;
    }
    out << to_canonical(value) << '\n';
    return kExitPass;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int default_jobs() {
  if (const char* env = std::getenv("QCONG_JOBS")) {
    int jobs = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), jobs);
    if (ec == std::errc{} && ptr == text.data() + text.size() && jobs > 0) return jobs;
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-binomial congruences modulo powers of [3^a]_q", "qcong"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string statement;
  std::vector<std::string> verify_params;
  auto* verify = app.add_subcommand("verify", "Run one theorem check");
  verify->add_option("statement", statement, "Statement id")->required();
  verify->add_option("params", verify_params, "key=value parameters");
  verify->add_option("--output", format_name, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string level_name = "quick";
  std::optional<std::int64_t> a_max, m_max, n_max;
  int jobs = default_jobs();
  std::string suite_format = "text";
  auto* suite = app.add_subcommand("suite", "Run the verification grid with negative controls");
  suite->add_option("--level", level_name, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--a-max", a_max, "Largest a");
  suite->add_option("--m-max", m_max, "Largest m");
  suite->add_option("--n-max", n_max, "Largest n for the quotient sweep");
  suite->add_option("--jobs", jobs, "Worker threads (default: QCONG_JOBS or 1)");
  suite->add_option("--output", suite_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string object;
  std::vector<std::string> show_params;
  auto* show = app.add_subcommand("show", "Print a polynomial in canonical form");
  show->add_option("object", object, "qbinom, cyclotomic, qint or sum")->required();
  show->add_option("params", show_params, "key=value parameters");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (verify->parsed()) {
    return cmd_verify(statement, verify_params,
                      format_name == "json" ? OutputFormat::kJson : OutputFormat::kText, out, err);
  }
  if (show->parsed()) return cmd_show(object, show_params, out, err);

  SuiteConfig config = SuiteConfig::defaults(level_name == "full" ? SuiteLevel::kFull : SuiteLevel::kQuick);
  if (a_max) config.a_max = *a_max;
  if (m_max) config.m_max = *m_max;
  if (n_max) config.n_max = *n_max;
  config.jobs = jobs;
  config.output = suite_format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  try {
    config.validate();
  } catch (const InvalidArgument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  const SuiteResult result = run_suite(config);
  if (config.output == OutputFormat::kJson) {
    out << suite_to_json(result).dump(2) << '\n';
  } else {
    out << suite_to_text(result);
  }
  return result.ok() ? kExitPass : kExitFail;
}

}  // namespace qcong
