#ifndef JK_MATRIX_HPP
#define JK_MATRIX_HPP

/**
 * Dense matrices over exact scalar types, plus fraction-free (Bareiss)
 * elimination for ranks and determinants.
 *
 * Bareiss elimination performs only exact divisions (every intermediate
 * entry is, up to sign, a minor of the input), so it works verbatim over
 * the integers and over polynomial rings. Rational-matrix ranks clear row
 * denominators first and run the integer variant; an optional prime-field
 * pre-pass supplies advisory lower bounds that can certify full rank early
 * but never replaces exact arithmetic.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "jk/prime_field.hpp"
#include "jk/prng.hpp"
#include "jk/rational.hpp"

namespace jk {

template <typename T>
class Matrix {
 public:
  Matrix() : m_rows(0), m_cols(0) {}

  Matrix(std::size_t rows, std::size_t cols)
      : m_rows(rows), m_cols(cols), m_data(rows * cols, T(0)) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : m_rows(rows), m_cols(cols), m_data(std::move(data)) {
    if (m_data.size() != rows * cols) {
      throw InternalError("matrix: data size does not match shape");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, i) = T(1);
    }
    return m;
  }

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }

  T& at(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
  const T& at(std::size_t i, std::size_t j) const {
    return m_data[i * m_cols + j];
  }

  const std::vector<T>& data() const { return m_data; }

  Matrix transpose() const {
    Matrix t(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
      for (std::size_t j = 0; j < m_cols; ++j) {
        t.at(j, i) = at(i, j);
      }
    }
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.m_rows != b.m_rows || a.m_cols != b.m_cols) {
      throw InternalError("matrix: shape mismatch in addition");
    }
    Matrix c(a.m_rows, a.m_cols);
    for (std::size_t k = 0; k < a.m_data.size(); ++k) {
      c.m_data[k] = a.m_data[k] + b.m_data[k];
    }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.m_rows != b.m_rows || a.m_cols != b.m_cols) {
      throw InternalError("matrix: shape mismatch in subtraction");
    }
    Matrix c(a.m_rows, a.m_cols);
    for (std::size_t k = 0; k < a.m_data.size(); ++k) {
      c.m_data[k] = a.m_data[k] - b.m_data[k];
    }
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.m_cols != b.m_rows) {
      throw InternalError("matrix: shape mismatch in product");
    }
    Matrix c(a.m_rows, b.m_cols);
    for (std::size_t i = 0; i < a.m_rows; ++i) {
      for (std::size_t k = 0; k < a.m_cols; ++k) {
        const T& scale = a.at(i, k);
        if (scale == T(0)) {
          continue;
        }
        for (std::size_t j = 0; j < b.m_cols; ++j) {
          c.at(i, j) += scale * b.at(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix c(m.m_rows, m.m_cols);
    for (std::size_t k = 0; k < m.m_data.size(); ++k) {
      c.m_data[k] = s * m.m_data[k];
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.m_rows == b.m_rows && a.m_cols == b.m_cols &&
           a.m_data == b.m_data;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

 private:
  std::size_t m_rows;
  std::size_t m_cols;
  std::vector<T> m_data;
};

using QMatrix = Matrix<Rational>;

/** Stacks a on top of b (equal column counts). */
template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) {
    throw InternalError("matrix: vstack column mismatch");
  }
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c.at(i, j) = a.at(i, j);
    }
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      c.at(a.rows() + i, j) = b.at(i, j);
    }
  }
  return c;
}

/** Places a to the left of b (equal row counts). */
template <typename T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) {
    throw InternalError("matrix: hstack row mismatch");
  }
  Matrix<T> c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c.at(i, j) = a.at(i, j);
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      c.at(i, a.cols() + j) = b.at(i, j);
    }
  }
  return c;
}

/**
 * Customization point for Bareiss elimination: zero test, exact division,
 * and a deterministic pivot cost (smaller = preferred).
 */
template <typename T>
struct BareissTraits;

template <>
struct BareissTraits<Integer> {
  static bool is_zero(const Integer& v) { return v == 0; }
  static Integer exact_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static std::pair<std::size_t, std::size_t> pivot_cost(const Integer& v) {
    return {0, mpz_sizeinbase(v.get_mpz_t(), 2)};
  }
};

/**
 * Rank by fraction-free elimination with full (row and column) pivoting.
 * Destroys its working copy. Works over any BareissTraits scalar.
 */
template <typename T>
std::size_t bareiss_rank(Matrix<T> m) {
  using Traits = BareissTraits<T>;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  T previous_pivot(1);
  std::size_t rank = 0;
  while (rank < rows && rank < cols) {
    // Deterministic pivot: the nonzero candidate of minimal cost.
    std::size_t pivot_row = rows;
    std::size_t pivot_col = cols;
    std::pair<std::size_t, std::size_t> best_cost{};
    for (std::size_t i = rank; i < rows; ++i) {
      for (std::size_t j = rank; j < cols; ++j) {
        if (Traits::is_zero(m.at(i, j))) {
          continue;
        }
        const auto cost = Traits::pivot_cost(m.at(i, j));
        if (pivot_row == rows || cost < best_cost) {
          pivot_row = i;
          pivot_col = j;
          best_cost = cost;
        }
      }
    }
    if (pivot_row == rows) {
      break;  // remaining block is identically zero
    }
    for (std::size_t j = 0; j < cols; ++j) {
      std::swap(m.at(rank, j), m.at(pivot_row, j));
    }
    for (std::size_t i = 0; i < rows; ++i) {
      std::swap(m.at(i, rank), m.at(i, pivot_col));
    }
    const T pivot = m.at(rank, rank);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = rank + 1; j < cols; ++j) {
        m.at(i, j) = Traits::exact_div(
            pivot * m.at(i, j) - m.at(i, rank) * m.at(rank, j),
            previous_pivot);
      }
      m.at(i, rank) = T(0);
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

/** Clears denominators row by row (unimodular over Q), yielding an integer
 * matrix with the same rank. */
inline Matrix<Integer> clear_row_denominators(const QMatrix& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational scaled = Rational(lcm) * m.at(i, j);
      out.at(i, j) = scaled.get_num();
    }
  }
  return out;
}

/** Exact rank of a rational matrix. */
inline std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    return 0;
  }
  return bareiss_rank(clear_row_denominators(m));
}

/** Kernel dimension of a rational matrix. */
inline std::size_t nullity(const QMatrix& m) { return m.cols() - rank(m); }

/** Exact determinant of a square rational matrix. */
inline Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InternalError("matrix: determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return Rational(1);
  }
  // Clear row denominators, run fraction-free elimination without column
  // exchanges beyond what zero pivots force, divide the scale back out.
  Rational scale(1);
  Matrix<Integer> w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer lcm(1);
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    }
    scale *= Rational(lcm);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = Rational(lcm) * m.at(i, j);
      w.at(i, j) = scaled.get_num();
    }
  }
  Integer previous_pivot(1);
  int sign = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot_row = n;
    for (std::size_t i = step; i < n; ++i) {
      if (w.at(i, step) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == n) {
      return Rational(0);
    }
    if (pivot_row != step) {
      sign = -sign;
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w.at(step, j), w.at(pivot_row, j));
      }
    }
    const Integer pivot = w.at(step, step);
    for (std::size_t i = step + 1; i < n; ++i) {
      for (std::size_t j = step + 1; j < n; ++j) {
        w.at(i, j) = BareissTraits<Integer>::exact_div(
            pivot * w.at(i, j) - w.at(i, step) * w.at(step, j),
            previous_pivot);
      }
      w.at(i, step) = 0;
    }
    previous_pivot = pivot;
  }
  Rational result(previous_pivot);
  if (sign < 0) {
    result = -result;
  }
  return result / scale;
}

/** Exact inverse by Gauss-Jordan elimination; requires a square invertible
 * input. */
inline QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InternalError("matrix: inverse of non-square matrix");
  }
  const std::size_t n = m.rows();
  QMatrix work = m;
  QMatrix result = QMatrix::identity(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot_row = n;
    for (std::size_t i = step; i < n; ++i) {
      if (work.at(i, step) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == n) {
      throw InternalError("matrix: inverse of singular matrix");
    }
    if (pivot_row != step) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(step, j), work.at(pivot_row, j));
        std::swap(result.at(step, j), result.at(pivot_row, j));
      }
    }
    const Rational pivot = work.at(step, step);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(step, j) /= pivot;
      result.at(step, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == step || work.at(i, step) == 0) {
        continue;
      }
      const Rational factor = work.at(i, step);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= factor * work.at(step, j);
        result.at(i, j) -= factor * result.at(step, j);
      }
    }
  }
  return result;
}

/**
 * Advisory rank over GF(p). Returns nullopt when some denominator vanishes
 * mod p (unlucky prime). The result never exceeds the exact rank.
 */
inline std::optional<std::size_t> rank_mod_p(const QMatrix& m,
                                             const PrimeField& field) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> w(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!field.from_rational(m.at(i, j), w[i * cols + j])) {
        return std::nullopt;
      }
    }
  }
  std::size_t rank_count = 0;
  for (std::size_t col = 0; col < cols && rank_count < rows; ++col) {
    std::size_t pivot_row = rows;
    for (std::size_t i = rank_count; i < rows; ++i) {
      if (w[i * cols + col] != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) {
      continue;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      std::swap(w[rank_count * cols + j], w[pivot_row * cols + j]);
    }
    const std::uint64_t inv_pivot = field.inv(w[rank_count * cols + col]);
    for (std::size_t i = rank_count + 1; i < rows; ++i) {
      const std::uint64_t factor =
          field.mul(w[i * cols + col], inv_pivot);
      if (factor == 0) {
        continue;
      }
      for (std::size_t j = col; j < cols; ++j) {
        w[i * cols + j] = field.sub(w[i * cols + j],
                                    field.mul(factor, w[rank_count * cols + j]));
      }
    }
    ++rank_count;
  }
  return rank_count;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << m.at(i, j) << (j + 1 < m.cols() ? ", " : "");
    }
    os << "]" << (i + 1 < m.rows() ? "\n" : "");
  }
  return os << "]";
}

}  // namespace jk

#endif  // JK_MATRIX_HPP
