// Command-line front end: constant tables, suite runs, sweeps, domain facts.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "carleman/constants.hpp"
#include "carleman/descriptor.hpp"
#include "carleman/domain.hpp"
#include "carleman/errors.hpp"
#include "carleman/report.hpp"
#include "carleman/suite.hpp"
#include "carleman/test_function.hpp"
#include "carleman/verify.hpp"

using namespace carleman;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "1,2,4" or "start:stop:step" (stop included up to rounding).
std::vector<double> parse_grid(const std::string& text, const std::string& name) {
  std::vector<double> out;
  try {
    if (text.find(':') != std::string::npos) {
      const std::vector<std::string> parts = [&] {
        std::vector<std::string> p;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':')) p.push_back(item);
        return p;
      }();
      if (parts.size() != 3) throw UsageError("--" + name + ": expected start:stop:step");
      const double a = parse_real(parts[0], 1), b = parse_real(parts[1], 1), h = parse_real(parts[2], 1);
      if (!(h > 0.0)) throw UsageError("--" + name + ": step must be positive");
      const long long count = static_cast<long long>(std::floor((b - a) / h + 1e-9)) + 1;
      if (count > 1000000) throw UsageError("--" + name + ": grid too large");
      for (long long i = 0; i < count; ++i) out.push_back(a + static_cast<double>(i) * h);
    } else if (!text.empty()) {
      out = parse_real_list(text, 1);
    }
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
  if (out.empty()) throw UsageError("--" + name + ": empty grid");
  return out;
}

using Cell = std::variant<double, LogNumber>;

struct Family {
  std::vector<std::string> axes;
  std::vector<std::string> columns;
  std::function<std::vector<Cell>(const std::map<std::string, double>&)> eval;
};

int as_int(double v, const char* name) {
  if (v != std::floor(v)) throw DomainError(std::string(name) + " must be an integer");
  return static_cast<int>(v);
}

struct Options {
  ConstantMode mode = ConstantMode::statement;
  bool convex = false;
  double k_plus = 0.0;
  double k_minus = 0.0;
};

std::map<std::string, Family> families(const Options& o) {
  std::map<std::string, Family> f;
  f["laplace"] = {{"n", "p", "ld"}, {"p_star", "p_sharp", "delta1", "delta2"}, [](const auto& x) {
                    const int n = as_int(x.at("n"), "n");
                    const ExponentSet e = exponents(ExponentFamily::laplace, n, x.at("p"));
                    return std::vector<Cell>{e.p_star, *e.p_sharp, delta1(RealDim{n}, x.at("p")),
                                             delta2(RealDim{n}, x.at("p"), x.at("ld"))};
                  }};
  f["holomorphic"] = {{"n", "p", "ld"}, {"p_star", "holo"}, [o](const auto& x) {
                        const int n = as_int(x.at("n"), "n");
                        const ExponentSet e = exponents(ExponentFamily::holomorphic, n, x.at("p"));
                        return std::vector<Cell>{
                            e.p_star, carleman_holo_constant(ComplexDim{n}, x.at("p"), x.at("ld"), o.convex)};
                      }};
  f["section"] = {{"n", "k", "diam", "ld"}, {"c1", "c2", "c11", "c3"}, [o](const auto& x) {
                    const int n = as_int(x.at("n"), "n");
                    const GreenFormConstants c = green_form_constants(
                        ComplexDim{n}, CurvatureParams{x.at("k"), o.k_plus, o.k_minus}, x.at("diam"),
                        x.at("ld"), o.mode);
                    return std::vector<Cell>{c.c1, c.c2, c.c11, c.c3};
                  }};
  f["green"] = {{"n", "ld"},
                {"green_pointwise", "green_boundary", "green_gradient", "weak_type", "boundary_weak"},
                [](const auto& x) {
                  const int n = as_int(x.at("n"), "n");
                  const GreenBoundConstants g = green_bound_constants(RealDim{n}, x.at("ld"));
                  return std::vector<Cell>{g.pointwise, g.boundary, g.gradient,
                                           weak_type_constant(RealDim{n}),
                                           boundary_weak_constant(RealDim{n}, x.at("ld"))};
                }};
  f["riesz"] = {{"n", "p", "a"}, {"riesz"}, [](const auto& x) {
                  const int n = as_int(x.at("n"), "n");
                  return std::vector<Cell>{riesz_constant(RealDim{n}, x.at("p"), x.at("a"))};
                }};
  f["heat"] = {{"n", "diam"}, {"heat"}, [](const auto& x) {
                 const int n = as_int(x.at("n"), "n");
                 return std::vector<Cell>{heat_bound_constant(ComplexDim{n}, x.at("diam"))};
               }};
  return f;
}

std::string format_cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_real(*d);
  const LogNumber& v = std::get<LogNumber>(c);
  if (!v.is_zero() && std::abs(v.log10_value()) > 300.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "log10=%.9g", v.log10_value());
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", v.is_zero() ? 0.0 : v.to_double());
  return buf;
}

std::string format_cell_csv(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_real(*d);
  return format_real(std::get<LogNumber>(c).log10_value());
}

std::string column_header(const Cell& sample, const std::string& name) {
  return std::holds_alternative<LogNumber>(sample) ? "log10:" + name : name;
}

std::string row_error(const std::exception& e) {
  const std::string what = e.what();
  if (dynamic_cast<const InvalidDimension*>(&e) && what.rfind("dimension out of range", 0) != 0) {
    return "dimension out of range: " + what;
  }
  return what;
}

struct GridRow {
  std::map<std::string, double> point;
  std::vector<Cell> cells;
  std::string error;
};

std::vector<GridRow> evaluate_grid(const Family& fam, const std::map<std::string, std::vector<double>>& grids) {
  std::vector<GridRow> rows;
  std::vector<std::size_t> idx(fam.axes.size(), 0);
  while (true) {
    GridRow r;
    for (std::size_t a = 0; a < fam.axes.size(); ++a) r.point[fam.axes[a]] = grids.at(fam.axes[a])[idx[a]];
    try {
      r.cells = fam.eval(r.point);
    } catch (const std::exception& e) {
      r.error = row_error(e);
    }
    rows.push_back(std::move(r));
    // Odometer over the axes, last axis fastest.
    std::size_t a = fam.axes.size();
    while (a > 0) {
      --a;
      if (++idx[a] < grids.at(fam.axes[a]).size()) break;
      idx[a] = 0;
      if (a == 0) return rows;
    }
    if (fam.axes.empty()) return rows;
  }
}

// Column kinds come from the first successful row; default to log columns.
std::vector<std::string> headers(const Family& fam, const std::vector<GridRow>& rows) {
  std::vector<std::string> h;
  const GridRow* ok = nullptr;
  for (const auto& r : rows) {
    if (r.error.empty()) {
      ok = &r;
      break;
    }
  }
  for (std::size_t i = 0; i < fam.columns.size(); ++i) {
    h.push_back(ok ? column_header(ok->cells[i], fam.columns[i]) : "log10:" + fam.columns[i]);
  }
  return h;
}

struct GridArgs {
  std::map<std::string, std::string> text = {{"n", "4"}, {"p", "2"}, {"ld", "0"}, {"k", "0"},
                                             {"diam", "2"}, {"a", "1"}};
  Options opts;
  std::string mode = "statement";

  void add_to(CLI::App* cmd) {
    for (auto& [name, value] : text) {
      cmd->add_option("--" + name, value, "grid for " + name + " (list a,b,c or start:stop:step)")
          ->capture_default_str();
    }
    cmd->add_option("--mode", mode, "section constants: statement or proof")
        ->check(CLI::IsMember({"statement", "proof"}))
        ->capture_default_str();
    cmd->add_flag("--convex", opts.convex, "holomorphic constant: convex domain");
    cmd->add_option("--k-plus", opts.k_plus, "K+ for section constants")->capture_default_str();
    cmd->add_option("--k-minus", opts.k_minus, "K- for section constants")->capture_default_str();
  }

  std::map<std::string, std::vector<double>> grids(const Family& fam) const {
    std::map<std::string, std::vector<double>> g;
    for (const auto& a : fam.axes) g[a] = parse_grid(text.at(a), a);
    return g;
  }
  Options options() const {
    Options o = opts;
    o.mode = mode == "proof" ? ConstantMode::proof : ConstantMode::statement;
    return o;
  }
};

int cmd_constants(const std::string& family, GridArgs& args, bool csv) {
  const auto fams = families(args.options());
  const auto it = fams.find(family);
  if (it == fams.end()) throw UsageError("unknown family '" + family + "'");
  const Family& fam = it->second;
  const auto rows = evaluate_grid(fam, args.grids(fam));
  const auto hdr = headers(fam, rows);
  if (csv) {
    std::string line;
    for (const auto& a : fam.axes) line += a + ",";
    for (const auto& h : hdr) line += csv_quote(h) + ",";
    std::cout << line << "error\n";
    for (const auto& r : rows) {
      line.clear();
      for (const auto& a : fam.axes) line += format_real(r.point.at(a)) + ",";
      for (std::size_t i = 0; i < fam.columns.size(); ++i) {
        line += (r.error.empty() ? format_cell_csv(r.cells[i]) : std::string()) + ",";
      }
      std::cout << line << csv_quote(r.error) << '\n';
    }
    return kExitPass;
  }
  for (const auto& r : rows) {
    std::string line;
    for (const auto& a : fam.axes) line += a + "=" + format_real(r.point.at(a)) + " ";
    if (!r.error.empty()) {
      std::cout << line << "error: " << r.error << '\n';
      continue;
    }
    for (std::size_t i = 0; i < fam.columns.size(); ++i) {
      line += " " + fam.columns[i] + "=" + format_cell_text(r.cells[i]);
    }
    std::cout << line << '\n';
  }
  return kExitPass;
}

// Ratio of the holomorphic estimate for z1^degree on the unit ball of C^n.
int sweep_holo_ratio(GridArgs& args, const std::string& degrees, int level) {
  const auto ns = parse_grid(args.text.at("n"), "n");
  const auto ps = parse_grid(args.text.at("p"), "p");
  const auto ds = parse_grid(degrees, "degree");
  std::cout << "n,p,degree,ratio,log10:gap,status,error\n";
  for (double nv : ns) {
    for (double p : ps) {
      for (double dv : ds) {
        std::string out = format_real(nv) + "," + format_real(p) + "," + format_real(dv) + ",";
        try {
          const int n = as_int(nv, "n");
          const int degree = as_int(dv, "degree");
          if (n < 1) throw InvalidDimension("n must be >= 1");
          std::vector<int> alpha(static_cast<std::size_t>(n), 0);
          alpha[0] = degree;
          const VerificationReport r = verify_holomorphic_carleman(
              Domain::unit_ball(2 * n), TestFunction::holo_monomial(alpha), p, level);
          if (r.status == ReportStatus::error) throw DomainError(r.notes.empty() ? "error" : r.notes.back());
          out += (r.ratio ? format_real(*r.ratio) : std::string("rhs-overflow-safe")) + "," +
                 format_real(r.log_gap / std::log(10.0)) + "," + to_string(r.status) + ",";
        } catch (const std::exception& e) {
          out += ",,error," + csv_quote(row_error(e));
        }
        std::cout << out << '\n';
      }
    }
  }
  return kExitPass;
}

int cmd_sweep(const std::string& quantity, GridArgs& args, const std::string& degrees, int level) {
  if (quantity == "holo-ratio") return sweep_holo_ratio(args, degrees, level);
  const auto fams = families(args.options());
  for (const auto& [name, fam] : fams) {
    for (std::size_t c = 0; c < fam.columns.size(); ++c) {
      if (fam.columns[c] != quantity) continue;
      const auto rows = evaluate_grid(fam, args.grids(fam));
      const auto hdr = headers(fam, rows);
      std::string line;
      for (const auto& a : fam.axes) line += a + ",";
      std::cout << line << hdr[c] << ",error\n";
      for (const auto& r : rows) {
        line.clear();
        for (const auto& a : fam.axes) line += format_real(r.point.at(a)) + ",";
        line += r.error.empty() ? format_cell_csv(r.cells[c]) : std::string();
        std::cout << line << "," << csv_quote(r.error) << '\n';
      }
      return kExitPass;
    }
  }
  throw UsageError("unknown quantity '" + quantity + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_verify(const std::string& path, const std::string& output, const std::string& format, bool serial,
               bool quiet) {
  const std::string text = read_file(path);
  SuiteConfig config;
  try {
    config = parse_suite(text);
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line << ":" << e.col << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (!output.empty()) config.output_path = output;
  if (!format.empty()) config.output_format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  const auto reports = run_suite(config, serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel);
  const std::string body = format_reports(reports, config.output_format);
  if (config.output_path.empty() || config.output_path == "-") {
    std::cout << body;
  } else {
    const std::filesystem::path out(config.output_path);
    if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + config.output_path + "'");
    f << body;
  }
  int failed = 0;
  for (const auto& r : reports) {
    const bool bad = r.gating && r.status != ReportStatus::pass;
    failed += bad ? 1 : 0;
    if (!quiet || bad) {
      std::cerr << to_string(r.status) << (r.gating ? "" : " (informational)") << "  " << r.estimate_id
                << "  ratio=" << (r.ratio ? format_real(*r.ratio) : std::string("rhs-overflow-safe")) << '\n';
    }
  }
  std::cerr << reports.size() << " reports, " << failed << " gating failure(s)\n";
  return all_gating_pass(reports) ? kExitPass : kExitFail;
}

int cmd_domain_info(const std::vector<std::string>& words, int samples) {
  std::string descriptor;
  for (const auto& w : words) descriptor += (descriptor.empty() ? "" : " ") + w;
  Domain d = Domain::unit_ball(2);
  try {
    d = parse_domain(descriptor);
  } catch (const ParseError& e) {
    throw UsageError("column " + std::to_string(e.col) + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const GeometryParams g = geometry(d);
  nlohmann::ordered_json j;
  j["descriptor"] = d.descriptor();
  j["kind"] = to_string(d.kind());
  j["dim"] = g.dim;
  j["diam"] = g.diam;
  j["volume"] = g.volume;
  j["boundary_area"] = g.boundary_area;
  j["convex"] = g.convex;
  j["lc"] = g.lc ? nlohmann::ordered_json(*g.lc) : nlohmann::ordered_json(nullptr);
  j["ld"] = g.ld;
  const auto est = lc_estimate(d, samples);
  j["lc_estimate"] = est ? nlohmann::ordered_json(*est) : nlohmann::ordered_json(nullptr);
  if (g.dim % 2 == 0 && g.dim >= 4) {
    j["curvature_threshold"] = curvature_threshold(ComplexDim{g.dim / 2}, g.volume);
  }
  std::cout << j.dump(2) << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit Sobolev and Carleman constants: tables and numerical verification"};
  app.require_subcommand(1);

  std::string family = "laplace";
  bool csv = false;
  GridArgs const_args;
  auto* constants = app.add_subcommand("constants", "tabulate constants over a parameter grid");
  constants->add_option("--family", family, "laplace, holomorphic, section, green, riesz or heat")
      ->capture_default_str();
  constants->add_flag("--csv", csv, "CSV output with log10 columns");
  const_args.add_to(constants);

  std::string config, output, format;
  bool serial = false, quiet = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("config", config, "suite file")->required();
  verify->add_option("-o,--output", output, "report path ('-' for stdout); overrides the suite");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--serial", serial, "use the serial reference kernels");
  verify->add_flag("-q,--quiet", quiet, "only list failing rows");

  std::string quantity, degrees = "0:5:1";
  int level = 4;
  GridArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "one quantity across a grid, as CSV");
  sweep->add_option("--quantity", quantity,
                    "a constant column (delta2, c1, ...) or holo-ratio")->required();
  sweep->add_option("--degree", degrees, "holo-ratio: degrees of z1^k")->capture_default_str();
  sweep->add_option("--level", level, "holo-ratio: quadrature level")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  sweep_args.add_to(sweep);

  std::vector<std::string> words;
  int samples = 2000;
  auto* info = app.add_subcommand("domain-info", "geometry of a domain descriptor");
  info->add_option("descriptor", words, "e.g. ball dim=3 r=1")->required();
  info->add_option("--samples", samples, "boundary pairs for the sampled normal-map constant")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*constants) return cmd_constants(family, const_args, csv);
    if (*verify) return cmd_verify(config, output, format, serial, quiet);
    if (*sweep) return cmd_sweep(quantity, sweep_args, degrees, level);
    if (*info) return cmd_domain_info(words, samples);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
