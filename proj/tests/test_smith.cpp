// Tests for Smith normal form over Q[lambda] and the Jordan structure at
// infinity read off the reversed pencil.

#include "jk/smith.hpp"

#include <gtest/gtest.h>

#include <cstddef>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/pencil.hpp"
#include "jk/poly.hpp"
#include "jk/poly_gcd.hpp"
#include "jk/prng.hpp"
#include "jk/rational.hpp"

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

// Reference determinant by Laplace expansion, for cross-checks.
UniPoly poly_det(const Matrix<UniPoly>& m) {
  const std::size_t n = m.rows();
  if (n == 0) {
    return UniPoly(1);
  }
  if (n == 1) {
    return m.at(0, 0);
  }
  UniPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<UniPoly> sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t c = 0;
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (jj == j) {
          continue;
        }
        sub.at(i - 1, c++) = m.at(i, jj);
      }
    }
    const UniPoly term = m.at(0, j) * poly_det(sub);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// Monic gcd of all r x r minors of the pencil's polynomial matrix.
UniPoly minor_gcd(const Pencil& p, std::size_t r) {
  const Matrix<UniPoly> m = pencil_poly_matrix(p);
  std::vector<std::size_t> row_sel(r);
  std::vector<std::size_t> col_sel(r);
  UniPoly g;
  // Iterate over all r-subsets of rows and columns.
  std::vector<bool> row_mask(m.rows(), false);
  std::fill(row_mask.begin(), row_mask.begin() + static_cast<long>(r), true);
  do {
    std::size_t ri = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (row_mask[i]) {
        row_sel[ri++] = i;
      }
    }
    std::vector<bool> col_mask(m.cols(), false);
    std::fill(col_mask.begin(), col_mask.begin() + static_cast<long>(r), true);
    do {
      std::size_t ci = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (col_mask[j]) {
          col_sel[ci++] = j;
        }
      }
      Matrix<UniPoly> sub(r, r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          sub.at(i, j) = m.at(row_sel[i], col_sel[j]);
        }
      }
      g = poly_gcd(g, poly_det(sub));
    } while (std::prev_permutation(col_mask.begin(), col_mask.end()));
  } while (std::prev_permutation(row_mask.begin(), row_mask.end()));
  return g;
}

// ===== invariant factors: worked examples =====

TEST(SmithTest, JordanBlockShiftedEigenvalue) {
  // [[lambda+2, 1], [0, lambda+2]] -> 1, (lambda+2)^2.
  const Pencil p(matrix_from(2, 2, {2, 1, 0, 2}), QMatrix::identity(2));
  const auto factors = smith_invariant_factors(p);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0], UniPoly(1));
  EXPECT_EQ(factors[1], UniPoly::from_ints({4, 4, 1}));
}

TEST(SmithTest, DiagonalDistinctEigenvalues) {
  // diag(lambda+1, lambda+2) -> 1, (lambda+1)(lambda+2).
  const Pencil p(matrix_from(2, 2, {1, 0, 0, 2}), QMatrix::identity(2));
  const auto factors = smith_invariant_factors(p);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0], UniPoly(1));
  EXPECT_EQ(factors[1], UniPoly::from_ints({2, 3, 1}));
}

TEST(SmithTest, ZeroPencilHasNoFactors) {
  const Pencil p(QMatrix(2, 3), QMatrix(2, 3));
  EXPECT_TRUE(smith_invariant_factors(p).empty());
}

TEST(SmithTest, RankOneRowPencil) {
  const Pencil p(matrix_from(1, 2, {0, 1}), matrix_from(1, 2, {1, 0}));
  const auto factors = smith_invariant_factors(p);
  ASSERT_EQ(factors.size(), 1u);
  EXPECT_EQ(factors[0], UniPoly(1));
}

TEST(SmithTest, NilpotentJordanBlock) {
  // [[lambda, 1], [0, lambda]] -> 1, lambda^2.
  const Pencil p(matrix_from(2, 2, {0, 1, 0, 0}), QMatrix::identity(2));
  const auto factors = smith_invariant_factors(p);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0], UniPoly(1));
  EXPECT_EQ(factors[1], UniPoly::from_ints({0, 0, 1}));
}

TEST(SmithTest, DivisibilityFixUpAcrossDiagonal) {
  // diag(lambda, lambda+1): diagonal entries are coprime, so the chain must
  // be rebuilt to 1, lambda(lambda+1).
  const Pencil p(matrix_from(2, 2, {0, 0, 0, 1}), QMatrix::identity(2));
  const auto factors = smith_invariant_factors(p);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0], UniPoly(1));
  EXPECT_EQ(factors[1], UniPoly::from_ints({0, 1, 1}));
}

TEST(SmithTest, FractionalEntriesNormalizeMonic) {
  // (1/2) * (lambda + 3) as a 1 x 1 pencil: the factor is monic lambda + 3.
  const Pencil p(QMatrix(1, 1, {rational_from_string("3/2")}),
                 QMatrix(1, 1, {rational_from_string("1/2")}));
  const auto factors = smith_invariant_factors(p);
  ASSERT_EQ(factors.size(), 1u);
  EXPECT_EQ(factors[0], UniPoly::from_ints({3, 1}));
}

// ===== infinity structure: worked examples =====

TEST(InfinityTest, UnipotentPencil) {
  // [[1, lambda], [0, 1]]: reversed pencil [[mu, 1], [0, mu]] has factors
  // 1, mu^2 -> one block of size 2 at infinity.
  const Pencil p(QMatrix::identity(2), matrix_from(2, 2, {0, 1, 0, 0}));
  EXPECT_EQ(infinity_structure(p), (IndexMultiset{2}));
}

TEST(InfinityTest, ZeroBMeansAllAtInfinity) {
  const Pencil p(matrix_from(2, 2, {1, 0, 0, 2}), QMatrix(2, 2));
  EXPECT_EQ(infinity_structure(p), (IndexMultiset{1, 1}));
}

TEST(InfinityTest, InvertibleBMeansNoneAtInfinity) {
  const Pencil p(matrix_from(2, 2, {2, 1, 0, 2}), QMatrix::identity(2));
  EXPECT_EQ(infinity_structure(p), IndexMultiset{});
}

TEST(InfinityTest, MixedFiniteAndInfinite) {
  // diag(1, lambda): one eigenvalue 0 block and one block at infinity.
  const Pencil p(matrix_from(2, 2, {1, 0, 0, 0}), matrix_from(2, 2, {0, 0, 0, 1}));
  const auto factors = smith_invariant_factors(p);
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[1], UniPoly::from_ints({0, 1}));
  EXPECT_EQ(infinity_structure(p), (IndexMultiset{1}));
}

// ===== properties =====

// Property: factors are monic, nonzero, and form a divisibility chain of
// length equal to the pencil rank.
TEST(SmithTest, ChainAndRankProperty) {
  SplitMix64 rng(707);
  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(rng.next_in_range(1, 4));
    const std::size_t cols = static_cast<std::size_t>(rng.next_in_range(1, 4));
    const Pencil p = random_pencil(rng, rows, cols, 2);
    const auto factors = smith_invariant_factors(p);
    EXPECT_EQ(factors.size(), pencil_rank(p));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      ASSERT_FALSE(factors[i].is_zero());
      EXPECT_EQ(factors[i].leading_coeff(), Rational(1));
      if (i > 0) {
        EXPECT_TRUE(
            UniPoly::divmod(factors[i], factors[i - 1]).second.is_zero());
      }
    }
  }
}

// Property: the product of the invariant factors equals the monic gcd of
// all r x r minors of A + lambda B.
TEST(SmithTest, ProductEqualsMinorGcd) {
  SplitMix64 rng(808);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(rng.next_in_range(1, 3));
    const std::size_t cols = static_cast<std::size_t>(rng.next_in_range(1, 4));
    const Pencil p = random_pencil(rng, rows, cols, 2);
    const auto factors = smith_invariant_factors(p);
    if (factors.empty()) {
      continue;
    }
    UniPoly product(1);
    for (const auto& f : factors) {
      product = product * f;
    }
    EXPECT_EQ(product, minor_gcd(p, factors.size()).monic());
  }
}

// Property: invariant factors and infinity structure are invariant under
// strict equivalence (A, B) -> (P A Q, P B Q) with P, Q invertible.
TEST(SmithTest, StrictEquivalenceInvariance) {
  SplitMix64 rng(909);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(rng.next_in_range(1, 3));
    const std::size_t cols = static_cast<std::size_t>(rng.next_in_range(1, 3));
    const Pencil p = random_pencil(rng, rows, cols, 2);

    auto random_invertible = [&rng](std::size_t n) {
      while (true) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = Rational(rng.next_in_range(-3, 3));
          }
        }
        if (determinant(m) != 0) {
          return m;
        }
      }
    };
    const QMatrix left = random_invertible(rows);
    const QMatrix right = random_invertible(cols);
    const Pencil q(left * p.A * right, left * p.B * right);
    EXPECT_EQ(smith_invariant_factors(q), smith_invariant_factors(p));
    EXPECT_EQ(infinity_structure(q), infinity_structure(p));
  }
}

// ===== agreement with the elementary-operation reference =====

// Infinity structure read off the reference implementation: positive
// valuations of the invariant factors of the reversed pencil.
IndexMultiset elimination_infinity(const Pencil& p) {
  IndexMultiset sizes;
  for (const UniPoly& f : smith_invariant_factors_elimination(reversed(p))) {
    if (f.valuation() > 0) {
      sizes.push_back(f.valuation());
    }
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

QMatrix random_invertible(SplitMix64& rng, std::size_t n, long bound) {
  while (true) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) = Rational(rng.next_in_range(-bound, bound));
      }
    }
    if (determinant(m) != 0) {
      return m;
    }
  }
}

// Kronecker blocks for ground-truth constructions.

// Finite Jordan block: lambda I - J with J the size-t Jordan block at
// eigenvalue0, contributing the elementary divisor (lambda - eigenvalue0)^t.
Pencil jordan_block_pencil(long eigenvalue0, std::size_t t) {
  QMatrix a(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    a.at(i, i) = Rational(-eigenvalue0);
    if (i + 1 < t) {
      a.at(i, i + 1) = Rational(-1);
    }
  }
  return Pencil(std::move(a), QMatrix::identity(t));
}

// Block at infinity: I + lambda N with N the size-t nilpotent Jordan block.
Pencil infinity_block_pencil(std::size_t t) {
  QMatrix b(t, t);
  for (std::size_t i = 0; i + 1 < t; ++i) {
    b.at(i, i + 1) = Rational(1);
  }
  return Pencil(QMatrix::identity(t), std::move(b));
}

// Horizontal block of index h: the (h-1) x h pencil with lambda on the
// diagonal and ones on the superdiagonal.
Pencil horizontal_block_pencil(std::size_t h) {
  QMatrix a(h - 1, h);
  QMatrix b(h - 1, h);
  for (std::size_t i = 0; i + 1 < h; ++i) {
    b.at(i, i) = Rational(1);
    a.at(i, i + 1) = Rational(1);
  }
  return Pencil(std::move(a), std::move(b));
}

// Vertical block of index v: the transpose of a horizontal block.
Pencil vertical_block_pencil(std::size_t v) {
  const Pencil h = horizontal_block_pencil(v);
  return Pencil(h.A.transpose(), h.B.transpose());
}

Pencil direct_sum(const std::vector<Pencil>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const Pencil& block : blocks) {
    rows += block.rows();
    cols += block.cols();
  }
  QMatrix a(rows, cols);
  QMatrix b(rows, cols);
  std::size_t row0 = 0;
  std::size_t col0 = 0;
  for (const Pencil& block : blocks) {
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) {
        a.at(row0 + i, col0 + j) = block.A.at(i, j);
        b.at(row0 + i, col0 + j) = block.B.at(i, j);
      }
    }
    row0 += block.rows();
    col0 += block.cols();
  }
  return Pencil(std::move(a), std::move(b));
}

// Property: the deflation-based factors agree with the elementary-operation
// reference on dense random pencils of every shape.
TEST(SmithAgreementTest, MatchesEliminationOnRandomPencils) {
  constexpr int kIterations = 120;
  SplitMix64 rng(515151);
  for (int iter = 0; iter < kIterations; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(rng.next_in_range(1, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.next_in_range(1, 5));
    const Pencil p = random_pencil(rng, rows, cols, 3);
    EXPECT_EQ(smith_invariant_factors(p), smith_invariant_factors_elimination(p));
    EXPECT_EQ(infinity_structure(p), elimination_infinity(p));
  }
}

// Property: on random direct sums of Kronecker blocks pushed through random
// strict equivalences, the factors match the reference implementation. The
// mixtures exercise every deflation path: horizontal and vertical chains,
// finite eigenvalues, and blocks at infinity in one pencil.
TEST(SmithAgreementTest, MatchesEliminationOnKroneckerMixtures) {
  constexpr int kIterations = 60;
  SplitMix64 rng(626262);
  for (int iter = 0; iter < kIterations; ++iter) {
    std::vector<Pencil> blocks;
    const int count = static_cast<int>(rng.next_in_range(1, 4));
    for (int k = 0; k < count; ++k) {
      switch (rng.next_in_range(0, 3)) {
        case 0:
          blocks.push_back(horizontal_block_pencil(
              static_cast<std::size_t>(rng.next_in_range(1, 3))));
          break;
        case 1:
          blocks.push_back(vertical_block_pencil(
              static_cast<std::size_t>(rng.next_in_range(1, 3))));
          break;
        case 2:
          blocks.push_back(jordan_block_pencil(
              rng.next_in_range(-2, 2),
              static_cast<std::size_t>(rng.next_in_range(1, 3))));
          break;
        default:
          blocks.push_back(infinity_block_pencil(
              static_cast<std::size_t>(rng.next_in_range(1, 3))));
          break;
      }
    }
    const Pencil sum = direct_sum(blocks);
    if (sum.rows() == 0 || sum.cols() == 0) {
      continue;  // pure index-one singular sums can have an empty side
    }
    const QMatrix left = random_invertible(rng, sum.rows(), 2);
    const QMatrix right = random_invertible(rng, sum.cols(), 2);
    const Pencil p(left * sum.A * right, left * sum.B * right);
    EXPECT_EQ(smith_invariant_factors(p), smith_invariant_factors_elimination(p));
    EXPECT_EQ(infinity_structure(p), elimination_infinity(p));
  }
}

// Two eigenvalues sharing the same total multiplicity, the same largest
// block, and kernel profiles whose eigenvalue-aggregated averages form a
// valid partition: only a true invariant-factor chain separates the block
// patterns {4,1,1,1,1} at 2 from {4,2,1,1} at 3. The full chain is checked
// exactly.
TEST(SmithAgreementTest, SeparatesEigenvaluesWithEntangledBlockProfiles) {
  std::vector<Pencil> blocks;
  for (std::size_t t : {4, 1, 1, 1, 1}) {
    blocks.push_back(jordan_block_pencil(2, t));
  }
  for (std::size_t t : {4, 2, 1, 1}) {
    blocks.push_back(jordan_block_pencil(3, t));
  }
  const Pencil sum = direct_sum(blocks);
  SplitMix64 rng(737373);
  const QMatrix left = random_invertible(rng, sum.rows(), 1);
  const QMatrix right = random_invertible(rng, sum.cols(), 1);
  const Pencil p(left * sum.A * right, left * sum.B * right);

  const UniPoly at2 = UniPoly::from_ints({-2, 1});
  const UniPoly at3 = UniPoly::from_ints({-3, 1});
  auto power = [](const UniPoly& base, int e) {
    UniPoly out(1);
    for (int k = 0; k < e; ++k) {
      out = out * base;
    }
    return out;
  };
  std::vector<UniPoly> expected(11, UniPoly(1));
  expected.push_back(at2);
  expected.push_back(at2 * at3);
  expected.push_back(at2 * at3);
  expected.push_back(at2 * power(at3, 2));
  expected.push_back(power(at2, 4) * power(at3, 4));
  EXPECT_EQ(smith_invariant_factors(p), expected);
  EXPECT_EQ(infinity_structure(p), IndexMultiset{});
}

}  // namespace
}  // namespace jk
