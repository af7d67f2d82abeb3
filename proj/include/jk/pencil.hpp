#ifndef JK_PENCIL_HPP
#define JK_PENCIL_HPP

/**
 * Matrix pencils A + λB over Q and their Kronecker index data.
 *
 * - pencil_rank: rank over the rational-function field Q(λ), computed by
 *   fraction-free (Bareiss) elimination on the polynomial matrix, with an
 *   advisory prime-field evaluation that can certify full rank early (a
 *   modular rank at an evaluation point never exceeds the pencil rank).
 * - kernel_dim_sequence: dimensions n_k of the spaces of polynomial
 *   solutions u(λ) of (A + λB) u(λ) = 0 with deg u <= k, via the nullity of
 *   an explicit block-banded system.
 * - horizontal/vertical indices: the number of horizontal indices equal to
 *   k+1 is the second difference n_k - 2 n_{k-1} + n_{k-2}; vertical indices
 *   are the horizontal indices of the transposed pencil.
 *
 * Degenerate shapes follow the zero-block convention: a 0 x c pencil has c
 * horizontal indices 1, an r x 0 pencil has r vertical indices 1.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/poly.hpp"
#include "jk/prime_field.hpp"
#include "jk/prng.hpp"
#include "jk/rational.hpp"

namespace jk {

/** Sorted-ascending multiset of block indices. */
using IndexMultiset = std::vector<int>;

struct Pencil {
  QMatrix A;
  QMatrix B;

  Pencil() = default;

  Pencil(QMatrix a, QMatrix b) : A(std::move(a)), B(std::move(b)) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
      throw InputError("pencil: A and B must have identical shape");
    }
    // GMP only guarantees canonical arithmetic results for canonical inputs,
    // and equality on mpq_class assumes canonical form. Callers may build
    // entries with the raw two-argument mpq constructor (which does not
    // reduce), so restore the invariant once at the boundary.
    canonicalize_entries(A);
    canonicalize_entries(B);
  }

  std::size_t rows() const { return A.rows(); }
  std::size_t cols() const { return A.cols(); }

 private:
  static void canonicalize_entries(QMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m.at(i, j).canonicalize();
      }
    }
  }
};

/** The transposed pencil (both matrices transposed). */
inline Pencil transpose(const Pencil& p) {
  return Pencil(p.A.transpose(), p.B.transpose());
}

/** The reversed pencil B + mu A, whose finite structure at mu = 0 is the
 * structure of A + lambda B at infinity. */
inline Pencil reversed(const Pencil& p) { return Pencil(p.B, p.A); }

inline bool operator==(const Pencil& a, const Pencil& b) {
  return a.A == b.A && a.B == b.B;
}

template <>
struct BareissTraits<UniPoly> {
  static bool is_zero(const UniPoly& v) { return v.is_zero(); }
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    return a / b;
  }
  static std::pair<std::size_t, std::size_t> pivot_cost(const UniPoly& v) {
    return {static_cast<std::size_t>(v.degree()), v.max_coeff_bit_size()};
  }
};

/**
 * The pencil as a polynomial matrix with integer coefficients: row i of
 * (A, B) is scaled by the common denominator of its entries (a unimodular
 * row operation over Q, harmless to rank and invariant factors up to
 * constants).
 */
inline Matrix<UniPoly> pencil_poly_matrix(const Pencil& p) {
  Matrix<UniPoly> m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Integer lcm(1);
    for (std::size_t j = 0; j < p.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              p.A.at(i, j).get_den().get_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              p.B.at(i, j).get_den().get_mpz_t());
    }
    const Rational scale(lcm);
    for (std::size_t j = 0; j < p.cols(); ++j) {
      m.at(i, j) = UniPoly(std::vector<Rational>{scale * p.A.at(i, j),
                                                 scale * p.B.at(i, j)});
    }
  }
  return m;
}

/** Exact rank of the rational matrix A + λ0 B. */
inline std::size_t rank_at(const Pencil& p, const Rational& lambda0) {
  if (p.rows() == 0 || p.cols() == 0) {
    return 0;
  }
  return rank(p.A + lambda0 * p.B);
}

/**
 * Rank of A + λB over Q(λ). Advisory fast path first: the rank of the
 * pencil evaluated at a fixed pseudo-random point, taken mod p, is a lower
 * bound, so hitting min(rows, cols) certifies full rank without exact
 * elimination. Otherwise exact fraction-free elimination decides.
 */
inline std::size_t pencil_rank(const Pencil& p) {
  const std::size_t rows = p.rows();
  const std::size_t cols = p.cols();
  if (rows == 0 || cols == 0) {
    return 0;
  }
  const std::size_t max_rank = std::min(rows, cols);

  static const PrimeField field;
  SplitMix64 rng(0x4A4B52414E4BULL);
  const Rational lambda0(
      static_cast<unsigned long>(rng.next() >> 24));  // 40-bit point
  const auto advisory = rank_mod_p(p.A + lambda0 * p.B, field);
  if (advisory.has_value() && *advisory == max_rank) {
    return max_rank;
  }
  return bareiss_rank(pencil_poly_matrix(p));
}

namespace detail {

/** n_k for a single k: nullity of the degree-k block-banded system. */
inline std::size_t kernel_dim_at(const Pencil& p, std::size_t k) {
  const std::size_t block_rows = (k + 2) * p.rows();
  const std::size_t block_cols = (k + 1) * p.cols();
  QMatrix system(block_rows, block_cols);
  for (std::size_t block = 0; block <= k + 1; ++block) {
    for (std::size_t i = 0; i < p.rows(); ++i) {
      for (std::size_t j = 0; j < p.cols(); ++j) {
        if (block <= k) {  // A at block column `block`
          system.at(block * p.rows() + i, block * p.cols() + j) = p.A.at(i, j);
        }
        if (block >= 1) {  // B at block column `block - 1`
          system.at(block * p.rows() + i, (block - 1) * p.cols() + j) +=
              p.B.at(i, j);
        }
      }
    }
  }
  return block_cols - rank(system);
}

}  // namespace detail

/**
 * n_k for k = 0..kmax, where n_k = dim of polynomial kernel vectors of
 * degree <= k. Built from the block-banded system with rows
 *   A u_0 = 0;  A u_j + B u_{j-1} = 0 (1 <= j <= k);  B u_k = 0.
 * Weakly increasing in k. Requires kmax <= cols.
 */
inline std::vector<std::size_t> kernel_dim_sequence(const Pencil& p,
                                                    std::size_t kmax) {
  if (kmax > p.cols()) {
    throw InputError("kernel_dim_sequence: kmax exceeds column count");
  }
  std::vector<std::size_t> dims;
  dims.reserve(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    dims.push_back(detail::kernel_dim_at(p, k));
  }
  return dims;
}

namespace detail {

/** Horizontal indices given a precomputed pencil rank. */
inline IndexMultiset horizontal_indices_with_rank(const Pencil& p,
                                                  std::size_t pencil_rank_value) {
  const std::size_t target = p.cols() - pencil_rank_value;
  IndexMultiset indices;
  if (target == 0) {
    return indices;
  }
  // Second differences of n_k count the indices equal to k+1.
  std::size_t n_km1 = 0;  // n_{k-1}
  std::size_t n_km2 = 0;  // n_{k-2}
  std::size_t total = 0;
  for (std::size_t k = 0;; ++k) {
    if (k > p.cols()) {
      throw InternalError(
          "horizontal_indices: index extraction exceeded column bound");
    }
    const std::size_t n_k = kernel_dim_at(p, k);
    const std::size_t count = n_k + n_km2 - 2 * n_km1;
    if (n_k + n_km2 < 2 * n_km1 || total + count > target) {
      throw InternalError("horizontal_indices: inconsistent kernel growth");
    }
    for (std::size_t c = 0; c < count; ++c) {
      indices.push_back(static_cast<int>(k + 1));
    }
    total += count;
    if (total == target) {
      return indices;
    }
    n_km2 = n_km1;
    n_km1 = n_k;
  }
}

}  // namespace detail

/** Multiset of horizontal Kronecker indices (block widths; count equals
 * cols - rank). */
inline IndexMultiset horizontal_indices(const Pencil& p) {
  return detail::horizontal_indices_with_rank(p, pencil_rank(p));
}

/** Multiset of vertical Kronecker indices: horizontal indices of the
 * transposed pencil. */
inline IndexMultiset vertical_indices(const Pencil& p) {
  const Pencil t = transpose(p);
  return detail::horizontal_indices_with_rank(t, pencil_rank(t));
}

}  // namespace jk

#endif  // JK_PENCIL_HPP
