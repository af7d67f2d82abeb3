// Tests for the minor-gcd characteristic oracle: finite part as the monic
// gcd of r x r minors, infinity exponent from the reversed pencil, and the
// work cap.

#include "jk/minor_charpoly.hpp"

#include <gtest/gtest.h>

#include <cstddef>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/pencil.hpp"
#include "jk/poly.hpp"
#include "jk/prng.hpp"
#include "jk/rational.hpp"
#include "jk/smith.hpp"

namespace jk {
namespace {

QMatrix matrix_from(std::size_t rows, std::size_t cols,
                    std::initializer_list<long> entries) {
  std::vector<Rational> data;
  data.reserve(entries.size());
  for (long e : entries) {
    data.emplace_back(e);
  }
  return QMatrix(rows, cols, data);
}

Pencil random_pencil(SplitMix64& rng, std::size_t rows, std::size_t cols,
                     long bound) {
  QMatrix a(rows, cols);
  QMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a.at(i, j) = Rational(rng.next_in_range(-bound, bound));
      b.at(i, j) = Rational(rng.next_in_range(-bound, bound));
    }
  }
  return Pencil(std::move(a), std::move(b));
}

// ===== worked examples =====

TEST(MinorCharpolyTest, RegularJordanBlock) {
  const Pencil p(matrix_from(2, 2, {2, 1, 0, 2}), QMatrix::identity(2));
  const CharPoly c = charpoly_via_minor_gcd(p);
  EXPECT_EQ(c.finite_part, UniPoly::from_ints({4, 4, 1}));
  EXPECT_EQ(c.inf_exponent, 0);
}

TEST(MinorCharpolyTest, RowPencilIsTrivial) {
  const Pencil p(matrix_from(1, 2, {0, 1}), matrix_from(1, 2, {1, 0}));
  const CharPoly c = charpoly_via_minor_gcd(p);
  EXPECT_EQ(c.finite_part, UniPoly(1));
  EXPECT_EQ(c.inf_exponent, 0);
}

TEST(MinorCharpolyTest, UnipotentAllAtInfinity) {
  const Pencil p(QMatrix::identity(2), matrix_from(2, 2, {0, 1, 0, 0}));
  const CharPoly c = charpoly_via_minor_gcd(p);
  EXPECT_EQ(c.finite_part, UniPoly(1));
  EXPECT_EQ(c.inf_exponent, 2);
}

TEST(MinorCharpolyTest, ZeroPencil) {
  const Pencil p(QMatrix(2, 3), QMatrix(2, 3));
  const CharPoly c = charpoly_via_minor_gcd(p);
  EXPECT_EQ(c.finite_part, UniPoly(1));
  EXPECT_EQ(c.inf_exponent, 0);
}

TEST(MinorCharpolyTest, MixedFiniteAndInfinite) {
  // diag(1, lambda): eigenvalue 0 once, one exponent at infinity.
  const Pencil p(matrix_from(2, 2, {1, 0, 0, 0}),
                 matrix_from(2, 2, {0, 0, 0, 1}));
  const CharPoly c = charpoly_via_minor_gcd(p);
  EXPECT_EQ(c.finite_part, UniPoly::variable());
  EXPECT_EQ(c.inf_exponent, 1);
}

TEST(MinorCharpolyTest, DeficientColumnSubsetsAreSkipped) {
  // Second column identically zero: its subsets contribute vanishing minors.
  const Pencil p(matrix_from(2, 2, {1, 0, 1, 0}), QMatrix(2, 2));
  const CharPoly c = charpoly_via_minor_gcd(p);
  EXPECT_EQ(c.finite_part, UniPoly(1));
  EXPECT_EQ(c.inf_exponent, 1);  // reversed pencil minors are mu, mu
}

// ===== the work cap =====

TEST(MinorCharpolyTest, CapRejectsLargeEnumerations) {
  // Rank 1 in a 2 x 2 pencil: binom(2,1)^2 = 4 candidate minors.
  const Pencil p(matrix_from(2, 2, {1, 0, 0, 0}), QMatrix(2, 2));
  EXPECT_THROW(charpoly_via_minor_gcd(p, 3), OracleTooLarge);
  try {
    charpoly_via_minor_gcd(p, 3);
    FAIL() << "expected OracleTooLarge";
  } catch (const OracleTooLarge& e) {
    EXPECT_NE(std::string(e.what()).find("oracle too large"),
              std::string::npos);
  }
  const CharPoly c = charpoly_via_minor_gcd(p, 4);
  EXPECT_EQ(c.finite_part, UniPoly(1));
  EXPECT_EQ(c.inf_exponent, 1);
}

TEST(MinorCharpolyTest, RankZeroIgnoresCap) {
  const Pencil p(QMatrix(3, 3), QMatrix(3, 3));
  const CharPoly c = charpoly_via_minor_gcd(p, 0);
  EXPECT_EQ(c.finite_part, UniPoly(1));
  EXPECT_EQ(c.inf_exponent, 0);
}

// ===== agreement with the Smith-form pipeline =====

// Property: the finite part equals the product of the invariant factors and
// the infinity exponent equals the total size of the blocks at infinity.
TEST(MinorCharpolyTest, AgreesWithSmithForm) {
  SplitMix64 rng(1111);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(rng.next_in_range(1, 4));
    const std::size_t cols = static_cast<std::size_t>(rng.next_in_range(1, 4));
    const long bound = (iter % 2 == 0) ? 1 : 3;
    const Pencil p = random_pencil(rng, rows, cols, bound);
    const CharPoly c = charpoly_via_minor_gcd(p);

    UniPoly product(1);
    for (const UniPoly& f : smith_invariant_factors(p)) {
      product = product * f;
    }
    EXPECT_EQ(c.finite_part, product.monic());

    int total_at_infinity = 0;
    for (int s : infinity_structure(p)) {
      total_at_infinity += s;
    }
    EXPECT_EQ(c.inf_exponent, total_at_infinity);
  }
}

// Property: scaling the pencil by a nonzero rational changes nothing.
TEST(MinorCharpolyTest, ScalingInvariance) {
  SplitMix64 rng(1212);
  const Rational scale = rational_from_string("7/3");
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(rng.next_in_range(1, 3));
    const std::size_t cols = static_cast<std::size_t>(rng.next_in_range(1, 3));
    const Pencil p = random_pencil(rng, rows, cols, 2);
    const Pencil q(scale * p.A, scale * p.B);
    const CharPoly cp = charpoly_via_minor_gcd(p);
    const CharPoly cq = charpoly_via_minor_gcd(q);
    EXPECT_EQ(cp.finite_part, cq.finite_part);
    EXPECT_EQ(cp.inf_exponent, cq.inf_exponent);
  }
}

}  // namespace
}  // namespace jk
