#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "carleman/constants.hpp"
#include "carleman/parallel.hpp"
#include "carleman/random.hpp"
#include "carleman/report.hpp"

// Plain-text verification suites.
//
//   # comment
//   seed 6841
//   level 4
//   output reports.json json
//   domain ball4 ball dim=4 r=1
//   function f1 poly dim=4 expr=x1*x2
//   exponent laplace n=4 p=2
//   check laplace domain=ball4 function=f1
//
// `function=suite` on a laplace check expands to the built-in 20-function
// list. A laplace or holomorphic check without p= runs once per matching
// exponent line.
namespace carleman {

enum class OutputFormat { json, csv };
std::string to_string(OutputFormat f);

struct LabeledDescriptor {
  std::string label;
  std::string descriptor;  // canonical form
  friend bool operator==(const LabeledDescriptor&, const LabeledDescriptor&) = default;
};

struct ExponentEntry {
  ExponentFamily family;
  int n;
  double p;
  friend bool operator==(const ExponentEntry&, const ExponentEntry&) = default;
};

struct CheckSpec {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> options;
  friend bool operator==(const CheckSpec&, const CheckSpec&) = default;
};

struct SuiteConfig {
  std::vector<LabeledDescriptor> domains;
  std::vector<LabeledDescriptor> functions;
  std::vector<ExponentEntry> exponents;
  std::vector<CheckSpec> checks;
  int level = 4;
  std::uint64_t seed = kDefaultSeed;
  std::string output_path;
  OutputFormat output_format = OutputFormat::json;
  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

// Throws ParseError with 1-based line and column.
SuiteConfig parse_suite(const std::string& text);
std::string render_suite(const SuiteConfig& config);

// Runs every check. Failures inside a check become error reports; the
// result is stably ordered by estimate_id.
std::vector<VerificationReport> run_suite(const SuiteConfig& config,
                                          ExecutionPolicy policy = ExecutionPolicy::parallel);

std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat format);

}  // namespace carleman
