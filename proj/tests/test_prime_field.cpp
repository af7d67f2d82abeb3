// Tests for the advisory prime-field fast path: modulus validation, basic
// field axioms at word size, and agreement with exact rational arithmetic
// reduced mod p.

#include "jk/prime_field.hpp"

#include <gtest/gtest.h>

#include <cstdint>

#include "jk/prng.hpp"
#include "jk/rational.hpp"

namespace jk {
namespace {

// ===== Modulus validation =====

TEST(PrimeField, DefaultModulusIsPrimeAndHuge) {
  const PrimeField field;
  EXPECT_EQ(field.modulus(), 9223372036854775783ULL);
}

TEST(PrimeField, CompositeModulusRejected) {
  EXPECT_THROW(PrimeField(9223372036854775784ULL), InternalError);
  EXPECT_THROW(PrimeField(1), InternalError);
  EXPECT_THROW(PrimeField(0), InternalError);
  EXPECT_NO_THROW(PrimeField(7));
  EXPECT_NO_THROW(PrimeField(2));
}

// ===== Field arithmetic =====

TEST(PrimeField, SmallFieldTables) {
  const PrimeField f7(7);
  EXPECT_EQ(f7.add(5, 4), 2u);
  EXPECT_EQ(f7.sub(2, 5), 4u);
  EXPECT_EQ(f7.neg(3), 4u);
  EXPECT_EQ(f7.mul(3, 5), 1u);
  EXPECT_EQ(f7.inv(3), 5u);
  EXPECT_EQ(f7.div(1, 3), 5u);
  EXPECT_EQ(f7.pow(3, 6), 1u);  // Fermat
  EXPECT_THROW(f7.inv(0), InternalError);
  EXPECT_THROW(f7.inv(7), InternalError);
}

TEST(PrimeField, WordSizeProductsDoNotOverflow) {
  const PrimeField field;
  const std::uint64_t p = field.modulus();
  // (p-1)^2 mod p = 1.
  EXPECT_EQ(field.mul(p - 1, p - 1), 1u);
  EXPECT_EQ(field.add(p - 1, p - 1), p - 2);
  EXPECT_EQ(field.inv(p - 1), p - 1);
}

// Property: a * inv(a) = 1 for random nonzero a at the default modulus.
TEST(PrimeField, InverseProperty) {
  const PrimeField field;
  SplitMix64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t a = rng.next() % field.modulus();
    if (a == 0) {
      continue;
    }
    EXPECT_EQ(field.mul(a, field.inv(a)), 1u);
  }
}

// ===== Agreement with rational arithmetic =====

// Property: prime-field arithmetic agrees with rational arithmetic reduced
// mod p on +, -, *, / whenever no denominator is divisible by p.
TEST(PrimeField, AgreesWithRationalsReducedModP) {
  const PrimeField field;
  SplitMix64 rng(7777);
  constexpr int kIterations = 500;
  for (int i = 0; i < kIterations; ++i) {
    const Rational a = make_rational(rng.next_in_range(-50, 50),
                                     rng.next_in_range(1, 20));
    const Rational b = make_rational(rng.next_in_range(-50, 50),
                                     rng.next_in_range(1, 20));
    std::uint64_t ra = 0;
    std::uint64_t rb = 0;
    ASSERT_TRUE(field.from_rational(a, ra));
    ASSERT_TRUE(field.from_rational(b, rb));

    std::uint64_t reduced = 0;
    ASSERT_TRUE(field.from_rational(a + b, reduced));
    EXPECT_EQ(field.add(ra, rb), reduced);
    ASSERT_TRUE(field.from_rational(a - b, reduced));
    EXPECT_EQ(field.sub(ra, rb), reduced);
    ASSERT_TRUE(field.from_rational(a * b, reduced));
    EXPECT_EQ(field.mul(ra, rb), reduced);
    if (b != 0) {
      ASSERT_TRUE(field.from_rational(a / b, reduced));
      EXPECT_EQ(field.div(ra, rb), reduced);
    }
  }
}

TEST(PrimeField, UnluckyDenominatorSignalled) {
  const PrimeField f7(7);
  std::uint64_t out = 0;
  EXPECT_FALSE(f7.from_rational(make_rational(1, 7), out));
  EXPECT_FALSE(f7.from_rational(make_rational(3, 14), out));
  EXPECT_TRUE(f7.from_rational(make_rational(14, 3), out));
  EXPECT_EQ(out, 0u);  // 14 ≡ 0 (mod 7)
}

TEST(PrimeField, NegativeIntegersReduceIntoRange) {
  const PrimeField f7(7);
  EXPECT_EQ(f7.from_integer(Integer(-1)), 6u);
  EXPECT_EQ(f7.from_integer(Integer(-14)), 0u);
  EXPECT_EQ(f7.from_integer(Integer(20)), 6u);
}

}  // namespace
}  // namespace jk
