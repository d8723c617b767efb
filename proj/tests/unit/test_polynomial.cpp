#include <gtest/gtest.h>

#include "wonderful/error.hpp"
#include "wonderful/polynomial.hpp"

namespace wonderful {
namespace {

const KPolynomial T = KPolynomial::first_var();
const KPolynomial L = KPolynomial::second_var();

TEST(KPolynomial, ArithmeticAndZeroTerms) {
  const KPolynomial p = T * T - T;
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((T + L).pow(2), T * T + KPolynomial(2) * T * L + L * L);
  EXPECT_EQ(KPolynomial(0).terms().size(), 0u);
  EXPECT_EQ((T - T + L).terms().size(), 1u);
}

TEST(KPolynomial, Rendering) {
  EXPECT_EQ((T.pow(3) + KPolynomial(3) * T * T * L - KPolynomial(2) * T).to_string(),
            "T^3 + 3*T^2*L - 2*T");
  EXPECT_EQ(KPolynomial(-1).to_string(), "-1");
  EXPECT_EQ(KPolynomial().to_string(), "0");
  EXPECT_EQ((L - KPolynomial(1)).to_string(), "L - 1");
}

TEST(KPolynomial, BigCoefficientsStayExact) {
  const KPolynomial p = (T + KPolynomial(1)).pow(200);
  BigInt binom = 1;
  for (int i = 0; i < 100; ++i) binom = binom * (200 - i) / (i + 1);
  EXPECT_EQ(p.coefficient(100, 0), binom);
  EXPECT_GT(binom, BigInt("1000000000000000000000000000000"));
}

TEST(KPolynomial, EvaluateAndSubstitute) {
  const KPolynomial p = T * T * L - KPolynomial(3) * L + KPolynomial(1);
  EXPECT_EQ(p.evaluate(2, 5), BigInt(4 * 5 - 15 + 1));
  const HodgePolynomial xy = HodgePolynomial::monomial(1, 1);
  const HodgePolynomial h = p.substitute(HodgePolynomial(1) + xy, xy);
  EXPECT_EQ(h, (HodgePolynomial(1) + xy).pow(2) * xy - HodgePolynomial(3) * xy + HodgePolynomial(1));
}

TEST(KPolynomial, LefschetzHelpers) {
  EXPECT_EQ(projective_class(2), KPolynomial(1) + L + L * L);
  EXPECT_TRUE(projective_class(-1).is_zero());
  EXPECT_EQ(lefschetz_range(1, 3), L + L * L + L.pow(3));
  EXPECT_TRUE(lefschetz_range(1, 0).is_zero());
}

TEST(DivideExact, ExactAndFailing) {
  // (L^2 - 1) / (L - 1) = L + 1
  const auto q = divide_exact({BigInt(-1), BigInt(0), BigInt(1)}, {BigInt(-1), BigInt(1)});
  EXPECT_EQ(from_univariate_l(q), L + KPolynomial(1));
  try {
    divide_exact({BigInt(1), BigInt(0), BigInt(1)}, {BigInt(-1), BigInt(1)});
    FAIL() << "expected DivisionFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionFailure);
  }
  // non-integral quotient: L / (2L)
  EXPECT_THROW(divide_exact({BigInt(0), BigInt(1)}, {BigInt(0), BigInt(2)}), Error);
  EXPECT_THROW(to_univariate_l(T), Error);
}

}  // namespace
}  // namespace wonderful
