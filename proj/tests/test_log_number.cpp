#include <gtest/gtest.h>

#include <cmath>

#include "carleman/errors.hpp"
#include "carleman/log_number.hpp"
#include "carleman/random.hpp"

using namespace carleman;

TEST(LogNumber, ArithmeticMatchesPlainDoubles) {
  SplitMix64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::exp(rng.uniform(-30, 30));
    const double b = std::exp(rng.uniform(-30, 30));
    const LogNumber la = LogNumber::from_value(a), lb = LogNumber::from_value(b);
    EXPECT_NEAR((la * lb).to_double() / (a * b), 1.0, 1e-12);
    EXPECT_NEAR((la / lb).to_double() / (a / b), 1.0, 1e-12);
    EXPECT_NEAR((la + lb).to_double() / (a + b), 1.0, 1e-12);
    EXPECT_NEAR(la.pow(1.7).to_double() / std::pow(a, 1.7), 1.0, 1e-12);
    EXPECT_GE(la + lb, max(la, lb));
  }
}

TEST(LogNumber, Zero) {
  const LogNumber z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_double(), 0.0);
  EXPECT_EQ(LogNumber::from_value(0.0), z);
  const LogNumber three = LogNumber::from_value(3.0);
  EXPECT_EQ(z + three, three);
  EXPECT_TRUE((z * three).is_zero());
  EXPECT_LT(z, three);
}

TEST(LogNumber, ConversionGate) {
  EXPECT_NO_THROW(LogNumber::from_log(699.0).to_double());
  EXPECT_THROW(LogNumber::from_log(701.0).to_double(), NotRepresentable);
  EXPECT_THROW(LogNumber::from_log(-701.0).to_double(), NotRepresentable);
  EXPECT_FALSE(LogNumber::from_log(1e6).representable());
}

TEST(LogNumber, HugeValuesStayFinite) {
  const LogNumber big = LogNumber::exp(1e8);
  const LogNumber sum = big + big;
  EXPECT_NEAR(sum.log_value() - big.log_value(), std::log(2.0), 1e-6);
  EXPECT_NEAR((big * big).log_value(), 2e8, 1e-6);
  EXPECT_EQ(big.root(2.0).log_value(), 5e7);
  EXPECT_EQ(big.to_string().substr(0, 3), "10^");
}

TEST(LogNumber, RejectsInvalidInput) {
  EXPECT_THROW(LogNumber::from_value(-1.0), DomainError);
  EXPECT_THROW(LogNumber::from_value(NAN), DomainError);
  EXPECT_THROW(LogNumber::from_value(INFINITY), DomainError);
}
