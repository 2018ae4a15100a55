#include "conformal_cli/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace conformal::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

std::string reports_to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SuiteReport& r : reports) {
    nlohmann::ordered_json rec;
    rec["suite"] = r.suite;
    rec["checks_run"] = r.checks_run;
    if (std::isfinite(r.max_residual)) {
      rec["max_residual"] = r.max_residual;
    } else {
      rec["max_residual"] = nullptr;
    }
    rec["tolerance"] = r.tolerance;
    rec["passed"] = r.passed;
    rec["wall_time"] = r.wall_time;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<SuiteReport>& reports) {
  std::string out = "suite,checks_run,max_residual,tolerance,passed,wall_time\n";
  for (const SuiteReport& r : reports) {
    out += r.suite + "," + std::to_string(r.checks_run) + "," + format_double(r.max_residual) + "," +
           format_double(r.tolerance) + "," + (r.passed ? "true" : "false") + "," +
           format_double(r.wall_time) + "\n";
  }
  return out;
}

void validate_report_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::runtime_error("report is not an array");
  for (const auto& rec : doc) {
    if (!rec.is_object()) throw std::runtime_error("record is not an object");
    if (rec.size() != 6) throw std::runtime_error("record has unexpected fields");
    if (!rec.contains("suite") || !rec["suite"].is_string()) throw std::runtime_error("suite");
    if (!rec.contains("checks_run") || !rec["checks_run"].is_number_integer() ||
        rec["checks_run"].get<long long>() < 0) {
      throw std::runtime_error("checks_run");
    }
    if (!rec.contains("max_residual") || !(rec["max_residual"].is_number() || rec["max_residual"].is_null())) {
      throw std::runtime_error("max_residual");
    }
    if (!rec.contains("tolerance") || !rec["tolerance"].is_number()) throw std::runtime_error("tolerance");
    if (!rec.contains("passed") || !rec["passed"].is_boolean()) throw std::runtime_error("passed");
    if (!rec.contains("wall_time") || !rec["wall_time"].is_number() || rec["wall_time"].get<double>() < 0.0) {
      throw std::runtime_error("wall_time");
    }
    const bool consistent = rec["max_residual"].is_number()
                                ? (rec["max_residual"].get<double>() <= rec["tolerance"].get<double>())
                                : false;
    if (consistent != rec["passed"].get<bool>()) throw std::runtime_error("passed disagrees with residual");
  }
}

}  // namespace conformal::cli
