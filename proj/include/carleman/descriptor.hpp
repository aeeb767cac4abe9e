#pragma once

#include <string>
#include <string_view>
#include <vector>

// Tokenizer and value parsers shared by the plain-text config grammars.

namespace carleman {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line);

struct KeyValue {
  std::string key;
  std::string value;
  int column;
  int value_column;
};

// "key=value"; throws ParseError (line 0) when '=' is missing.
KeyValue split_key_value(const Token& t);

double parse_real(const std::string& text, int column);
long long parse_integer(const std::string& text, int column);
std::vector<double> parse_real_list(const std::string& text, int column);
std::vector<int> parse_int_list(const std::string& text, int column);
bool parse_bool(const std::string& text, int column);

// Shortest text that parses back to the same double.
std::string format_real(double v);
std::string format_real_list(const std::vector<double>& v);

}  // namespace carleman
