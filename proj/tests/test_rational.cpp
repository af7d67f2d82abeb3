// Tests for the exact rational scalar layer: canonical form, wire-format
// parsing and printing, and error handling on malformed input.

#include "jk/rational.hpp"

#include <gtest/gtest.h>

namespace jk {
namespace {

// ===== Canonical form =====

TEST(Rational, ConstructionCanonicalizes) {
  EXPECT_EQ(make_rational(22, 4), make_rational(11, 2));
  EXPECT_EQ(make_rational(22, 4).get_num(), 11);
  EXPECT_EQ(make_rational(22, 4).get_den(), 2);
  // Denominator is kept positive; sign lives on the numerator.
  EXPECT_EQ(make_rational(3, -6).get_num(), -1);
  EXPECT_EQ(make_rational(3, -6).get_den(), 2);
  // Zero is 0/1.
  EXPECT_EQ(make_rational(0, 7).get_num(), 0);
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
}

TEST(Rational, ArithmeticStaysCanonical) {
  const Rational a = make_rational(1, 6);
  const Rational b = make_rational(1, 3);
  const Rational sum = a + b;  // 1/2
  EXPECT_EQ(sum.get_num(), 1);
  EXPECT_EQ(sum.get_den(), 2);
  const Rational prod = a * make_rational(3);  // 1/2
  EXPECT_EQ(prod, make_rational(1, 2));
  EXPECT_EQ(make_rational(2, 3) / make_rational(4, 3), make_rational(1, 2));
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(make_rational(1, 0), InputError);
}

// ===== Wire format =====

TEST(Rational, ParsePlainAndFractionForms) {
  EXPECT_EQ(rational_from_string("5"), make_rational(5));
  EXPECT_EQ(rational_from_string("-5"), make_rational(-5));
  EXPECT_EQ(rational_from_string("11/2"), make_rational(11, 2));
  EXPECT_EQ(rational_from_string("-3/9"), make_rational(-1, 3));
  EXPECT_EQ(rational_from_string("0"), make_rational(0));
  // Parsing canonicalizes.
  EXPECT_EQ(rational_from_string("4/8").get_den(), 2);
}

TEST(Rational, PrintFollowsWireFormat) {
  EXPECT_EQ(rational_to_string(make_rational(11, 2)), "11/2");
  EXPECT_EQ(rational_to_string(make_rational(-1, 3)), "-1/3");
  EXPECT_EQ(rational_to_string(make_rational(7)), "7");
  EXPECT_EQ(rational_to_string(make_rational(0)), "0");
}

TEST(Rational, ParseRejectsMalformedInput) {
  EXPECT_THROW(rational_from_string(""), InputError);
  EXPECT_THROW(rational_from_string("1/0"), InputError);
  EXPECT_THROW(rational_from_string("1/-2"), InputError);
  EXPECT_THROW(rational_from_string("a"), InputError);
  EXPECT_THROW(rational_from_string("1.5"), InputError);
  EXPECT_THROW(rational_from_string("1/2/3"), InputError);
  EXPECT_THROW(rational_from_string(" 1"), InputError);
  EXPECT_THROW(rational_from_string("1 "), InputError);
  EXPECT_THROW(rational_from_string("1/"), InputError);
  EXPECT_THROW(rational_from_string("/2"), InputError);
  EXPECT_THROW(rational_from_string("0x10"), InputError);
}

// Property: parse(print(x)) == x over a grid of values.
TEST(Rational, RoundTrip) {
  for (long num = -20; num <= 20; ++num) {
    for (long den = 1; den <= 12; ++den) {
      const Rational value = make_rational(num, den);
      EXPECT_EQ(rational_from_string(rational_to_string(value)), value);
    }
  }
}

TEST(Rational, BitSizeHeuristic) {
  EXPECT_EQ(rational_bit_size(make_rational(1)), 2u);   // 1 bit + 1 bit
  EXPECT_EQ(rational_bit_size(make_rational(4, 3)), 5u);  // 3 bits + 2 bits
}

}  // namespace
}  // namespace jk
