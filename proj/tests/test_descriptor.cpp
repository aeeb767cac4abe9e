#include <gtest/gtest.h>

#include <cmath>

#include "carleman/descriptor.hpp"
#include "carleman/errors.hpp"
#include "carleman/random.hpp"

using namespace carleman;

TEST(Tokenize, Columns) {
  const auto t = tokenize("  ball  dim=3 r=1");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].text, "ball");
  EXPECT_EQ(t[0].column, 3);
  EXPECT_EQ(t[1].column, 9);
  EXPECT_EQ(t[2].column, 15);
}

TEST(KeyValue, SplitAndErrors) {
  const KeyValue kv = split_key_value({"dim=3", 5});
  EXPECT_EQ(kv.key, "dim");
  EXPECT_EQ(kv.value, "3");
  EXPECT_EQ(kv.value_column, 9);
  EXPECT_THROW(split_key_value({"dim", 1}), ParseError);
}

TEST(Values, Parsers) {
  EXPECT_EQ(parse_real("2.5", 1), 2.5);
  EXPECT_EQ(parse_integer("-7", 1), -7);
  EXPECT_EQ(parse_real_list("1,2.5,3", 1), (std::vector<double>{1, 2.5, 3}));
  EXPECT_EQ(parse_int_list("3,0", 1), (std::vector<int>{3, 0}));
  EXPECT_TRUE(parse_bool("yes", 1));
  EXPECT_FALSE(parse_bool("false", 1));
  EXPECT_THROW(parse_real("1.5x", 4), ParseError);
  EXPECT_THROW(parse_integer("1.5", 4), ParseError);
  EXPECT_THROW(parse_bool("maybe", 4), ParseError);
  EXPECT_THROW(parse_real_list("1,,2", 4), ParseError);
}

TEST(Values, ShortestRoundTrip) {
  SplitMix64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(rng.uniform(-1, 1), rng.uniform_int(-60, 60));
    EXPECT_EQ(parse_real(format_real(v), 1), v);
  }
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(2.0), "2");
}
