#pragma once

#include <string>
#include <vector>

namespace conformal::cli {

/// One verified identity. `suite` carries the dotted check name, e.g.
/// "su22.euz". A check that raised an error reports an infinite residual,
/// written as null in JSON.
struct SuiteReport {
  std::string suite;
  int checks_run = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double wall_time = 0.0;  // seconds; 0 unless timing is requested
};

/// Shortest text with 17 significant digits, '.' decimal point.
std::string format_double(double value);

/// JSON array of records, two-space indented, trailing LF.
std::string reports_to_json(const std::vector<SuiteReport>& reports);

/// Header suite,checks_run,max_residual,tolerance,passed,wall_time; LF rows.
std::string reports_to_csv(const std::vector<SuiteReport>& reports);

/// Throws std::runtime_error naming the first offending field.
void validate_report_json(const std::string& text);

}  // namespace conformal::cli
