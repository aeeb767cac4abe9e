#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carleman/log_number.hpp"

namespace carleman {

// Relative slack in the pass predicate lhs <= rhs (1 + tol).
inline constexpr double kPassTolerance = 1e-6;

enum class ReportStatus { pass, fail, expected_fail, error };
std::string to_string(ReportStatus s);

// Outcome of one inequality check.
struct VerificationReport {
  std::string estimate_id;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order
  double lhs = 0.0;
  LogNumber rhs;
  // lhs / rhs when rhs is representable.
  std::optional<double> ratio;
  // log(rhs) - log(lhs); +inf when lhs = 0.
  double log_gap = 0.0;
  bool pass = false;
  long long samples = 0;
  int quadrature_level = 0;
  std::vector<std::string> notes;
  // Gating reports decide the exit code; informational ones never do.
  bool gating = true;
  bool expected_fail = false;
  ReportStatus status = ReportStatus::error;

  void add_param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
  // Fills ratio, log_gap, pass and status from lhs and rhs.
  void finalize();
};

VerificationReport error_report(std::string estimate_id,
                                std::vector<std::pair<std::string, std::string>> params,
                                const std::string& message);

std::string to_json(const std::vector<VerificationReport>& reports);
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);
std::string to_csv(const std::vector<VerificationReport>& reports);
// RFC 4180 field quoting.
std::string csv_quote(const std::string& field);

// True when every gating report passed.
bool all_gating_pass(const std::vector<VerificationReport>& reports);

}  // namespace carleman
