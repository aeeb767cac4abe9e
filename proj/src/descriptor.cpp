#include "carleman/descriptor.hpp"

#include <charconv>
#include <cmath>

#include "carleman/errors.hpp"

namespace carleman {

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

KeyValue split_key_value(const Token& t) {
  const auto eq = t.text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ParseError("expected key=value, got '" + t.text + "'", 0, t.column);
  }
  return {t.text.substr(0, eq), t.text.substr(eq + 1), t.column,
          t.column + static_cast<int>(eq) + 1};
}

double parse_real(const std::string& text, int column) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ParseError("expected a real number, got '" + text + "'", 0, column);
  }
  return v;
}

long long parse_integer(const std::string& text, int column) {
  long long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer, got '" + text + "'", 0, column);
  }
  return v;
}

namespace {

template <class F>
void for_each_item(const std::string& text, int column, F f) {
  if (text.empty()) throw ParseError("empty list", 0, column);
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    f(item, column + static_cast<int>(start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text, int column) {
  std::vector<double> out;
  for_each_item(text, column, [&](const std::string& s, int c) { out.push_back(parse_real(s, c)); });
  return out;
}

std::vector<int> parse_int_list(const std::string& text, int column) {
  std::vector<int> out;
  for_each_item(text, column,
                [&](const std::string& s, int c) { out.push_back(static_cast<int>(parse_integer(s, c))); });
  return out;
}

bool parse_bool(const std::string& text, int column) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ParseError("expected true/false, got '" + text + "'", 0, column);
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_real_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_real(v[i]);
  }
  return out;
}

}  // namespace carleman
