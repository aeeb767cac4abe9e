#include "carleman/suite.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "carleman/descriptor.hpp"
#include "carleman/domain.hpp"
#include "carleman/errors.hpp"
#include "carleman/test_function.hpp"
#include "carleman/verify.hpp"

namespace carleman {

std::string to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

namespace {

enum class OptType { real, integer, domain, function, item, mode };

struct OptSpec {
  const char* key;
  OptType type;
  bool required;
};

const std::map<std::string, std::vector<OptSpec>>& check_schema() {
  static const std::map<std::string, std::vector<OptSpec>> schema = {
      {"laplace",
       {{"domain", OptType::domain, true}, {"function", OptType::function, true},
        {"p", OptType::real, false}, {"level", OptType::integer, false}}},
      {"holomorphic",
       {{"domain", OptType::domain, true}, {"function", OptType::function, true},
        {"p", OptType::real, false}, {"level", OptType::integer, false}}},
      {"riesz",
       {{"domain", OptType::domain, true}, {"a", OptType::real, true}, {"p", OptType::real, true},
        {"trials", OptType::integer, false}, {"level", OptType::integer, false},
        {"seed", OptType::integer, false}}},
      {"weak-type",
       {{"domain", OptType::domain, true}, {"densities", OptType::integer, false},
        {"level", OptType::integer, false}, {"seed", OptType::integer, false}}},
      {"green-bounds",
       {{"n", OptType::integer, true}, {"pairs", OptType::integer, false},
        {"ld", OptType::real, false}, {"seed", OptType::integer, false}}},
      {"eigen", {{"domain", OptType::domain, true}, {"count", OptType::integer, false}}},
      {"heat",
       {{"domain", OptType::domain, true}, {"tmin", OptType::real, false},
        {"tmax", OptType::real, false}, {"points", OptType::integer, false},
        {"pairs", OptType::integer, false}, {"truncation", OptType::integer, false},
        {"seed", OptType::integer, false}}},
      {"green-form",
       {{"n", OptType::integer, true}, {"item", OptType::item, false},
        {"mode", OptType::mode, false}, {"pairs", OptType::integer, false},
        {"seed", OptType::integer, false}}},
      {"max-principle",
       {{"domain", OptType::domain, true}, {"function", OptType::function, true},
        {"k", OptType::real, false}, {"level", OptType::integer, false}}},
      {"gradient-interior",
       {{"n", OptType::integer, true}, {"function", OptType::function, true},
        {"rho", OptType::real, false}, {"level", OptType::integer, false}}},
  };
  return schema;
}

std::uint64_t parse_seed(const std::string& text, int column) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected an unsigned 64-bit seed, got '" + text + "'", 0, column);
  }
  return v;
}

int parse_level(const std::string& text, int column) {
  const long long v = parse_integer(text, column);
  if (v < 1 || v > 6) throw ParseError("quadrature level must be in 1..6", 0, column);
  return static_cast<int>(v);
}

// Re-raises a descriptor error at its position inside the whole line.
template <class F>
auto parse_at(int offset, F&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(e.what(), 0, e.col + offset);
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, offset + 1);
  }
}

bool has_label(const std::vector<LabeledDescriptor>& v, const std::string& label) {
  return std::any_of(v.begin(), v.end(), [&](const auto& d) { return d.label == label; });
}

void parse_line(SuiteConfig& c, const std::string& line, std::vector<std::pair<CheckSpec, std::vector<KeyValue>>>& pending) {
  const std::vector<Token> tok = tokenize(line);
  if (tok.empty() || tok[0].text[0] == '#') return;
  const std::string& kw = tok[0].text;
  auto need = [&](std::size_t count) {
    if (tok.size() < count) {
      throw ParseError("'" + kw + "' needs " + std::to_string(count - 1) + " argument(s)", 0,
                       static_cast<int>(line.size()) + 1);
    }
  };
  auto no_extra = [&](std::size_t count) {
    if (tok.size() > count) throw ParseError("unexpected token '" + tok[count].text + "'", 0, tok[count].column);
  };
  if (kw == "seed") {
    need(2);
    no_extra(2);
    c.seed = parse_seed(tok[1].text, tok[1].column);
  } else if (kw == "level") {
    need(2);
    no_extra(2);
    c.level = parse_level(tok[1].text, tok[1].column);
  } else if (kw == "output") {
    need(2);
    no_extra(3);
    c.output_path = tok[1].text;
    c.output_format = OutputFormat::json;
    if (tok.size() == 3) {
      if (tok[2].text == "csv") {
        c.output_format = OutputFormat::csv;
      } else if (tok[2].text != "json") {
        throw ParseError("output format must be json or csv", 0, tok[2].column);
      }
    }
  } else if (kw == "domain" || kw == "function") {
    need(3);
    const std::string& label = tok[1].text;
    if (label == "suite") throw ParseError("'suite' is reserved", 0, tok[1].column);
    auto& list = kw == "domain" ? c.domains : c.functions;
    if (has_label(list, label)) throw ParseError("duplicate " + kw + " label '" + label + "'", 0, tok[1].column);
    const int offset = tok[2].column - 1;
    const std::string rest = line.substr(static_cast<std::size_t>(offset));
    const std::string canonical = parse_at(offset, [&] {
      return kw == "domain" ? parse_domain(rest).descriptor() : parse_test_function(rest).descriptor();
    });
    list.push_back({label, canonical});
  } else if (kw == "exponent") {
    need(4);
    no_extra(4);
    ExponentEntry e{};
    e.family = parse_at(tok[1].column - 1, [&] { return parse_exponent_family(tok[1].text); });
    bool have_n = false, have_p = false;
    for (std::size_t i = 2; i < 4; ++i) {
      const KeyValue kv = parse_at(0, [&] { return split_key_value(tok[i]); });
      if (kv.key == "n") {
        e.n = static_cast<int>(parse_integer(kv.value, kv.value_column));
        have_n = true;
      } else if (kv.key == "p") {
        e.p = parse_real(kv.value, kv.value_column);
        have_p = true;
      } else {
        throw ParseError("unknown exponent key '" + kv.key + "'", 0, kv.column);
      }
    }
    if (!have_n || !have_p) throw ParseError("exponent needs n= and p=", 0, tok[0].column);
    c.exponents.push_back(e);
  } else if (kw == "check") {
    need(2);
    const auto& schema = check_schema();
    const auto it = schema.find(tok[1].text);
    if (it == schema.end()) throw ParseError("unknown check kind '" + tok[1].text + "'", 0, tok[1].column);
    CheckSpec spec{tok[1].text, {}};
    std::vector<KeyValue> kvs;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      const KeyValue kv = parse_at(0, [&] { return split_key_value(tok[i]); });
      const auto opt = std::find_if(it->second.begin(), it->second.end(),
                                    [&](const OptSpec& s) { return kv.key == s.key; });
      if (opt == it->second.end()) {
        throw ParseError("unknown option '" + kv.key + "' for check " + spec.kind, 0, kv.column);
      }
      for (const auto& prev : spec.options) {
        if (prev.first == kv.key) throw ParseError("repeated option '" + kv.key + "'", 0, kv.column);
      }
      switch (opt->type) {
        case OptType::real:
          parse_real(kv.value, kv.value_column);
          break;
        case OptType::integer:
          if (kv.key == "seed") {
            parse_seed(kv.value, kv.value_column);
          } else if (kv.key == "level") {
            parse_level(kv.value, kv.value_column);
          } else {
            parse_integer(kv.value, kv.value_column);
          }
          break;
        case OptType::item:
          if (kv.value != "pointwise" && kv.value != "boundary") {
            throw ParseError("item must be pointwise or boundary", 0, kv.value_column);
          }
          break;
        case OptType::mode:
          if (kv.value != "statement" && kv.value != "proof") {
            throw ParseError("mode must be statement or proof", 0, kv.value_column);
          }
          break;
        case OptType::domain:
        case OptType::function:
          break;  // resolved after all lines are read
      }
      spec.options.emplace_back(kv.key, kv.value);
      kvs.push_back(kv);
    }
    for (const OptSpec& s : it->second) {
      if (s.required && std::none_of(spec.options.begin(), spec.options.end(),
                                     [&](const auto& o) { return o.first == s.key; })) {
        throw ParseError("check " + spec.kind + " needs " + s.key + "=", 0, tok[1].column);
      }
    }
    pending.emplace_back(std::move(spec), std::move(kvs));
  } else {
    throw ParseError("unknown keyword '" + kw + "'", 0, tok[0].column);
  }
}

}  // namespace

SuiteConfig parse_suite(const std::string& text) {
  SuiteConfig c;
  std::vector<std::pair<CheckSpec, std::vector<KeyValue>>> pending;
  std::vector<int> check_lines;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t before = pending.size();
    try {
      parse_line(c, line, pending);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, e.col);
    }
    if (pending.size() != before) check_lines.push_back(line_no);
  }
  // Label references may point forward, so they are resolved here.
  const auto& schema = check_schema();
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& [spec, kvs] = pending[i];
    const auto& opts = schema.at(spec.kind);
    for (const KeyValue& kv : kvs) {
      const auto opt = std::find_if(opts.begin(), opts.end(), [&](const OptSpec& s) { return kv.key == s.key; });
      if (opt->type == OptType::domain && !has_label(c.domains, kv.value)) {
        throw ParseError("unknown domain label '" + kv.value + "'", check_lines[i], kv.value_column);
      }
      if (opt->type == OptType::function && kv.value != "suite" && !has_label(c.functions, kv.value)) {
        throw ParseError("unknown function label '" + kv.value + "'", check_lines[i], kv.value_column);
      }
    }
    c.checks.push_back(spec);
  }
  return c;
}

std::string render_suite(const SuiteConfig& c) {
  std::ostringstream out;
  out << "seed " << c.seed << '\n';
  out << "level " << c.level << '\n';
  if (!c.output_path.empty()) out << "output " << c.output_path << ' ' << to_string(c.output_format) << '\n';
  for (const auto& d : c.domains) out << "domain " << d.label << ' ' << d.descriptor << '\n';
  for (const auto& f : c.functions) out << "function " << f.label << ' ' << f.descriptor << '\n';
  for (const auto& e : c.exponents) {
    out << "exponent " << to_string(e.family) << " n=" << e.n << " p=" << format_real(e.p) << '\n';
  }
  for (const auto& k : c.checks) {
    out << "check " << k.kind;
    for (const auto& [key, value] : k.options) out << ' ' << key << '=' << value;
    out << '\n';
  }
  return out.str();
}

namespace {

class CheckRunner {
 public:
  CheckRunner(const SuiteConfig& c, const CheckSpec& s, ExecutionPolicy policy)
      : config_(c), spec_(s), policy_(policy) {}

  std::vector<VerificationReport> run() {
    const std::string& k = spec_.kind;
    if (k == "laplace" || k == "holomorphic") return run_function_family(k == "laplace");
    if (k == "riesz") {
      return {verify_riesz(domain(), real("a"), real("p"), integer("trials", 100), level(), seed(), policy_)};
    }
    if (k == "weak-type") {
      const Domain d = domain();
      const auto family = boundary_density_family(d, integer("densities", 20), seed());
      return {verify_weak_type(d, family, level(), policy_)};
    }
    if (k == "green-bounds") {
      std::optional<double> ld;
      if (find("ld")) ld = real("ld");
      return verify_green_bounds(integer("n"), ld, integer("pairs", 10000), seed(), policy_);
    }
    if (k == "eigen") return verify_eigen_bounds(domain(), integer("count", 100));
    if (k == "heat") {
      const double t0 = real("tmin", 0.01), t1 = real("tmax", 10.0);
      const int points = integer("points", 20);
      if (points < 1) throw DomainError("points must be >= 1");
      std::vector<double> grid;
      for (int i = 0; i < points; ++i) {
        grid.push_back(points == 1 ? t0 : t0 * std::pow(t1 / t0, static_cast<double>(i) / (points - 1)));
      }
      return {verify_heat_bound(domain(), grid, integer("pairs", 100), seed(), integer("truncation", 0))};
    }
    if (k == "green-form") {
      const auto item = text("item", "pointwise") == "pointwise" ? GreenFormItem::pointwise : GreenFormItem::boundary;
      const auto mode = text("mode", "proof") == "proof" ? ConstantMode::proof : ConstantMode::statement;
      return {verify_scalar_green_form(integer("n"), item, integer("pairs", 10000), mode, seed(), policy_)};
    }
    if (k == "max-principle") {
      return {verify_max_principle(domain(), function(), level(), real("k", 0.0))};
    }
    if (k == "gradient-interior") {
      return {verify_gradient_interior(integer("n"), function(), level(), real("rho", 0.45))};
    }
    throw DomainError("unknown check kind " + k);
  }

 private:
  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : spec_.options) {
      if (k == key) return &v;
    }
    return nullptr;
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    const std::string* v = find(key);
    return v ? *v : fallback;
  }
  double real(const std::string& key, std::optional<double> fallback = std::nullopt) const {
    const std::string* v = find(key);
    if (!v) return fallback.value();
    return parse_real(*v, 0);
  }
  int integer(const std::string& key, std::optional<int> fallback = std::nullopt) const {
    const std::string* v = find(key);
    if (!v) return fallback.value();
    return static_cast<int>(parse_integer(*v, 0));
  }
  int level() const { return find("level") ? integer("level") : config_.level; }
  std::uint64_t seed() const { return find("seed") ? parse_seed(*find("seed"), 0) : config_.seed; }
  static const std::string& lookup(const std::vector<LabeledDescriptor>& v, const std::string& label) {
    for (const auto& d : v) {
      if (d.label == label) return d.descriptor;
    }
    throw DomainError("unknown label " + label);
  }
  Domain domain() const { return parse_domain(lookup(config_.domains, *find("domain"))); }
  TestFunction function() const { return parse_test_function(lookup(config_.functions, *find("function"))); }

  std::vector<VerificationReport> run_function_family(bool laplace) {
    const Domain d = domain();
    std::vector<double> ps;
    if (find("p")) {
      ps.push_back(real("p"));
    } else {
      const int n = laplace ? d.dim() : d.dim() / 2;
      const ExponentFamily fam = laplace ? ExponentFamily::laplace : ExponentFamily::holomorphic;
      for (const auto& e : config_.exponents) {
        if (e.family == fam && e.n == n) ps.push_back(e.p);
      }
      if (ps.empty()) throw DomainError("no matching exponent line for this check");
    }
    std::vector<std::string> fns;
    if (*find("function") == "suite") {
      if (!laplace) throw DomainError("function=suite is only defined for laplace checks");
      fns = laplace_function_suite(d.dim());
    } else {
      fns.push_back(lookup(config_.functions, *find("function")));
    }
    std::vector<VerificationReport> out;
    for (double p : ps) {
      for (const auto& f : fns) {
        const TestFunction tf = parse_test_function(f);
        out.push_back(laplace ? verify_laplace_sobolev(d, tf, p, level())
                              : verify_holomorphic_carleman(d, tf, p, level()));
      }
    }
    return out;
  }

  const SuiteConfig& config_;
  const CheckSpec& spec_;
  ExecutionPolicy policy_;
};

}  // namespace

std::vector<VerificationReport> run_suite(const SuiteConfig& config, ExecutionPolicy policy) {
  std::vector<VerificationReport> all;
  for (const CheckSpec& spec : config.checks) {
    std::vector<VerificationReport> part;
    try {
      part = CheckRunner(config, spec, policy).run();
    } catch (const std::exception& e) {
      std::vector<std::pair<std::string, std::string>> params(spec.options.begin(), spec.options.end());
      part.push_back(error_report(spec.kind, std::move(params), e.what()));
    }
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.estimate_id < b.estimate_id; });
  return all;
}

std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat format) {
  return format == OutputFormat::json ? to_json(reports) : to_csv(reports);
}

}  // namespace carleman
