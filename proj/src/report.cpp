#include "carleman/report.hpp"

#include <cmath>
#include <json.hpp>
#include <limits>

#include "carleman/descriptor.hpp"

namespace carleman {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::expected_fail: return "expected-fail";
    case ReportStatus::error: return "error";
  }
  return "?";
}

void VerificationReport::finalize() {
  const double log_lhs = lhs > 0.0 ? std::log(lhs) : -std::numeric_limits<double>::infinity();
  const double log_rhs = rhs.log_value();
  if (lhs == 0.0) {
    pass = lhs <= 0.0;
    log_gap = std::numeric_limits<double>::infinity();
  } else {
    log_gap = log_rhs - log_lhs;
    pass = log_lhs <= log_rhs + std::log1p(kPassTolerance);
  }
  ratio.reset();
  if (rhs.representable() && !rhs.is_zero()) {
    ratio = lhs / rhs.to_double();
  } else if (rhs.is_zero() && lhs == 0.0) {
    ratio = 0.0;
  }
  if (pass) status = ReportStatus::pass;
  else status = expected_fail ? ReportStatus::expected_fail : ReportStatus::fail;
}

VerificationReport error_report(std::string estimate_id,
                                std::vector<std::pair<std::string, std::string>> params,
                                const std::string& message) {
  VerificationReport r;
  r.estimate_id = std::move(estimate_id);
  r.params = std::move(params);
  r.status = ReportStatus::error;
  r.pass = false;
  r.log_gap = std::numeric_limits<double>::quiet_NaN();
  r.notes.push_back("error: " + message);
  return r;
}

namespace {

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["estimate_id"] = r.estimate_id;
    j["status"] = to_string(r.status);
    j["pass"] = r.pass;
    j["gating"] = r.gating;
    j["expected_fail"] = r.expected_fail;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["lhs"] = number_or_null(r.lhs);
    nlohmann::ordered_json rhs;
    rhs["log10"] = r.rhs.is_zero() ? nlohmann::ordered_json(nullptr) : number_or_null(r.rhs.log10_value());
    rhs["text"] = r.rhs.to_string();
    j["rhs"] = rhs;
    if (r.ratio) j["ratio"] = number_or_null(*r.ratio);
    else j["ratio"] = "rhs-overflow-safe";
    j["log_gap"] = number_or_null(r.log_gap);
    j["samples"] = r.samples;
    j["quadrature_level"] = r.quadrature_level;
    j["notes"] = r.notes;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_header() {
  return "estimate_id,status,pass,gating,params,lhs,log10:rhs,ratio,log10:gap,samples,"
         "quadrature_level,notes\n";
}

std::string to_csv_row(const VerificationReport& r) {
  auto num = [](double v) { return std::isfinite(v) ? format_real(v) : std::string(); };
  std::string params;
  for (const auto& [k, v] : r.params) {
    if (!params.empty()) params += ' ';
    params += k + "=" + v;
  }
  std::string notes;
  for (const auto& n : r.notes) {
    if (!notes.empty()) notes += "; ";
    notes += n;
  }
  std::string row;
  row += csv_quote(r.estimate_id) + ',';
  row += to_string(r.status) + ',';
  row += std::string(r.pass ? "true" : "false") + ',';
  row += std::string(r.gating ? "true" : "false") + ',';
  row += csv_quote(params) + ',';
  row += num(r.lhs) + ',';
  row += (r.rhs.is_zero() ? std::string() : num(r.rhs.log10_value())) + ',';
  row += (r.ratio ? num(*r.ratio) : std::string("rhs-overflow-safe")) + ',';
  row += num(r.log_gap / std::log(10.0)) + ',';
  row += std::to_string(r.samples) + ',';
  row += std::to_string(r.quadrature_level) + ',';
  row += csv_quote(notes) + '\n';
  return row;
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = csv_header();
  for (const auto& r : reports) out += to_csv_row(r);
  return out;
}

bool all_gating_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.gating && r.status != ReportStatus::pass) return false;
  }
  return true;
}

}  // namespace carleman
