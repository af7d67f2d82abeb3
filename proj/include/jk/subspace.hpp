#ifndef JK_SUBSPACE_HPP
#define JK_SUBSPACE_HPP

/**
 * Exact subspace arithmetic over Q: reduced echelon forms, kernel and
 * column-space bases, preimages of subspaces under linear maps, basis
 * completion, and coordinates relative to a basis.
 *
 * Subspaces are represented by matrices whose columns form a basis. All
 * routines are deterministic (first-nonzero pivoting in a fixed scan order),
 * so equal subspaces produced along different routes get identical canonical
 * bases.
 */

#include <cstddef>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/rational.hpp"

namespace jk {

/**
 * In-place reduced row echelon form. Returns the pivot column indices in
 * increasing order; their count is the rank.
 */
inline std::vector<std::size_t> rref_in_place(QMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot_row = rows;
    for (std::size_t i = row; i < rows; ++i) {
      if (m.at(i, col) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) {
      continue;
    }
    if (pivot_row != row) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(m.at(row, j), m.at(pivot_row, j));
      }
    }
    const Rational pivot = m.at(row, col);
    for (std::size_t j = col; j < cols; ++j) {
      m.at(row, j) /= pivot;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m.at(i, col) == 0) {
        continue;
      }
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/**
 * Basis of the right kernel {x : m x = 0} as the columns of a cols x k
 * matrix, one column per non-pivot coordinate in its canonical form.
 */
inline QMatrix kernel_basis(const QMatrix& m) {
  const std::size_t cols = m.cols();
  QMatrix work = m;
  const std::vector<std::size_t> pivots = rref_in_place(work);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t col : pivots) {
    is_pivot[col] = true;
  }
  QMatrix basis(cols, cols - pivots.size());
  std::size_t k = 0;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    basis.at(free_col, k) = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis.at(pivots[i], k) = -work.at(i, free_col);
    }
    ++k;
  }
  return basis;
}

/**
 * Canonical basis of the column space: the nonzero rows of the reduced row
 * echelon form of the transpose, returned as columns.
 */
inline QMatrix column_space_basis(const QMatrix& m) {
  QMatrix work = m.transpose();
  const std::vector<std::size_t> pivots = rref_in_place(work);
  QMatrix basis(m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      basis.at(i, k) = work.at(k, i);
    }
  }
  return basis;
}

/**
 * Basis of the preimage {x : m x lies in the column space of `space`}.
 * Computed as the projection onto the x-coordinates of the kernel of the
 * augmented map (x, c) -> m x - space c.
 */
inline QMatrix preimage_basis(const QMatrix& m, const QMatrix& space) {
  if (m.rows() != space.rows()) {
    throw InternalError("subspace: preimage shape mismatch");
  }
  if (space.cols() == 0) {
    return kernel_basis(m);
  }
  QMatrix augmented(m.rows(), m.cols() + space.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      augmented.at(i, j) = m.at(i, j);
    }
    for (std::size_t j = 0; j < space.cols(); ++j) {
      augmented.at(i, m.cols() + j) = -space.at(i, j);
    }
  }
  const QMatrix combined = kernel_basis(augmented);
  QMatrix projected(m.cols(), combined.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t k = 0; k < combined.cols(); ++k) {
      projected.at(i, k) = combined.at(i, k);
    }
  }
  return column_space_basis(projected);
}

/**
 * Completes the (independent) columns of `basis` to a basis of Q^rows by
 * appending standard unit vectors, returning an invertible rows x rows
 * matrix whose first basis.cols() columns are `basis`. Throws if the input
 * columns are dependent.
 */
inline QMatrix complete_to_basis(const QMatrix& basis) {
  const std::size_t dim = basis.rows();
  QMatrix candidates(dim, basis.cols() + dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      candidates.at(i, j) = basis.at(i, j);
    }
    candidates.at(i, basis.cols() + i) = Rational(1);
  }
  QMatrix work = candidates;
  const std::vector<std::size_t> pivots = rref_in_place(work);
  if (pivots.size() != dim) {
    throw InternalError("subspace: completion candidates do not span");
  }
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    if (pivots[k] != k) {
      throw InternalError("subspace: completion input is dependent");
    }
  }
  QMatrix full(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      full.at(i, k) = candidates.at(i, pivots[k]);
    }
  }
  return full;
}

/**
 * Coordinates X with basis X = vectors; requires the columns of `basis` to
 * be independent and the columns of `vectors` to lie in their span (throws
 * InternalError otherwise).
 */
inline QMatrix coordinates_in_basis(const QMatrix& basis,
                                    const QMatrix& vectors) {
  if (basis.rows() != vectors.rows()) {
    throw InternalError("subspace: coordinate shape mismatch");
  }
  QMatrix work = hstack(basis, vectors);
  const std::vector<std::size_t> pivots = rref_in_place(work);
  if (pivots.size() != basis.cols()) {
    throw InternalError("subspace: coordinates relative to a dependent or "
                        "non-spanning basis");
  }
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    if (pivots[k] != k) {
      throw InternalError("subspace: coordinates outside the basis span");
    }
  }
  QMatrix coords(basis.cols(), vectors.cols());
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
      coords.at(i, j) = work.at(i, basis.cols() + j);
    }
  }
  return coords;
}

}  // namespace jk

#endif  // JK_SUBSPACE_HPP
