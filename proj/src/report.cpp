#include "qcong/report.hpp"

#include <algorithm>
#include <sstream>

namespace qcong {

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["statement"] = report.statement;
  j["params"] = report.params;
  j["pass"] = report.pass;
  j["witness"] = report.witness ? nlohmann::json(*report.witness) : nlohmann::json(nullptr);
  j["elapsed_ms"] = report.elapsed_ms();
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport report;
  report.statement = j.at("statement").get<std::string>();
  report.params = j.at("params").get<Params>();
  report.pass = j.at("pass").get<bool>();
  if (const auto& w = j.at("witness"); !w.is_null()) report.witness = w.get<std::string>();
  report.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
  return report;
}

std::string format_params(const Params& params) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out << ' ';
    out << key << '=' << value;
    first = false;
  }
  return out.str();
}

std::string format_text(const VerificationReport& report, std::size_t max_terms) {
  std::ostringstream out;
  out << (report.pass ? "PASS " : "FAIL ") << report.statement;
  if (!report.params.empty()) out << ' ' << format_params(report.params);
  if (report.witness) {
    const auto& w = *report.witness;
    const bool is_poly = w.find(':') != std::string::npos;
    const auto terms = static_cast<std::size_t>(std::count(w.begin(), w.end(), ',')) + 1;
    if (is_poly && terms > max_terms) {
      out << " witness=<" << terms << " terms elided>";
    } else {
      out << " witness=" << w;
    }
  }
  out << " (" << report.elapsed_ms() << " ms)";
  return out.str();
}

}  // namespace qcong
