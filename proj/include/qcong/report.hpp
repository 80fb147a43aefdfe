#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace qcong {

using Params = std::map<std::string, std::int64_t>;

/// Outcome of one theorem instance. A failing report always carries a
/// witness: the remainder (or first counterexample) that made it fail.
/// Passing reports usually carry the quotient.
struct VerificationReport {
  std::string statement;
  Params params;
  bool pass = false;
  std::optional<std::string> witness;
  std::chrono::microseconds elapsed{0};

  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
};

/// {"elapsed_ms", "params", "pass", "statement", "witness"}; witness is
/// null when absent.
nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// One line, e.g. "PASS eq13 a=1 m=1 witness=0:1,1:-1,2:1 (0 ms)".
/// Witness polynomials with more than max_terms terms are elided.
std::string format_text(const VerificationReport& report, std::size_t max_terms = 200);

std::string format_params(const Params& params);

}  // namespace qcong
