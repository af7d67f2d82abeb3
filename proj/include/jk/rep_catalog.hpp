#ifndef JK_REP_CATALOG_HPP
#define JK_REP_CATALOG_HPP

/**
 * Concrete realizations of the representation families: ordered Lie-algebra
 * bases, module coordinates, the operator matrix R_p of xi -> rho(xi) p, the
 * representation pencil R_x + lambda R_a, canonical and random points, and
 * the dimension counts (stabilizers, orbit codimensions) used by the
 * structural cross-checks.
 *
 * Basis orders (all row-major / lexicographic in (i, j)):
 *   gl(n):  E_ij for all i, j
 *   sl(n):  off-diagonal E_ij, then H_i = E_ii - E_{i+1,i+1}
 *   so(n):  E_ij - E_ji for i < j
 *   sp(n):  Omega^{-1} (E_ij + E_ji) for i <= j, Omega = [[0, I], [-I, 0]]
 *   b(n):   E_ij for i <= j
 *   n(n):   E_ij for i < j
 * Module coordinates: n x m points row-major; symmetric matrices list the
 * diagonal first and then the strict upper triangle; skew-symmetric
 * matrices list the strict upper triangle.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/pencil.hpp"
#include "jk/prng.hpp"
#include "jk/rational.hpp"
#include "jk/rep_spec.hpp"

namespace jk {

namespace detail {

inline QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix e(n, n);
  e.at(i, j) = 1;
  return e;
}

inline QMatrix symplectic_form(std::size_t n) {
  QMatrix omega(n, n);
  const std::size_t k = n / 2;
  for (std::size_t i = 0; i < k; ++i) {
    omega.at(i, k + i) = 1;
    omega.at(k + i, i) = -1;
  }
  return omega;
}

}  // namespace detail

inline std::vector<QMatrix> lie_basis(const RepSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.n;
  const bool gl_basis =
      spec.family == RepFamily::kGlSum ||
      (is_congruence_family(spec.family) && spec.group == GroupKind::kGl);
  const bool sl_basis =
      spec.family == RepFamily::kSlSum ||
      (is_congruence_family(spec.family) && spec.group == GroupKind::kSl);

  std::vector<QMatrix> basis;
  basis.reserve(lie_dim(spec));
  if (gl_basis) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        basis.push_back(detail::unit_matrix(n, i, j));
      }
    }
  } else if (sl_basis) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          basis.push_back(detail::unit_matrix(n, i, j));
        }
      }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      QMatrix h(n, n);
      h.at(i, i) = 1;
      h.at(i + 1, i + 1) = -1;
      basis.push_back(std::move(h));
    }
  } else if (spec.family == RepFamily::kSoSum) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        QMatrix e(n, n);
        e.at(i, j) = 1;
        e.at(j, i) = -1;
        basis.push_back(std::move(e));
      }
    }
  } else if (spec.family == RepFamily::kSpSum) {
    const QMatrix omega_inv =
        Rational(-1) * detail::symplectic_form(n);  // Omega^2 = -I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        QMatrix sym(n, n);
        sym.at(i, j) += 1;
        sym.at(j, i) += 1;
        basis.push_back(omega_inv * sym);
      }
    }
  } else if (spec.family == RepFamily::kBSum) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        basis.push_back(detail::unit_matrix(n, i, j));
      }
    }
  } else {  // n_std
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        basis.push_back(detail::unit_matrix(n, i, j));
      }
    }
  }
  if (basis.size() != lie_dim(spec)) {
    throw InternalError("lie_basis: dimension mismatch");
  }
  return basis;
}

inline void validate_point(const RepSpec& spec, const QMatrix& point) {
  const auto [rows, cols] = point_shape(spec);
  if (point.rows() != rows || point.cols() != cols) {
    throw InputError(describe(spec) + ": point must be " +
                     std::to_string(rows) + " x " + std::to_string(cols));
  }
  if (spec.family == RepFamily::kCongSym && point != point.transpose()) {
    throw InputError(describe(spec) + ": point must be symmetric");
  }
  if (spec.family == RepFamily::kCongSkew &&
      point != Rational(-1) * point.transpose()) {
    throw InputError(describe(spec) + ": point must be skew-symmetric");
  }
}

/** rho(xi) applied to a point. */
inline QMatrix apply_action(const RepSpec& spec, const QMatrix& xi,
                            const QMatrix& point) {
  if (is_congruence_family(spec.family)) {
    return xi * point + point * xi.transpose();
  }
  return xi * point;
}

/** Coordinates of a module element in the fixed basis of V. */
inline std::vector<Rational> module_coordinates(const RepSpec& spec,
                                                const QMatrix& value) {
  std::vector<Rational> coords;
  coords.reserve(module_dim(spec));
  if (spec.family == RepFamily::kCongSym) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      coords.push_back(value.at(i, i));
    }
    for (std::size_t i = 0; i < spec.n; ++i) {
      for (std::size_t j = i + 1; j < spec.n; ++j) {
        coords.push_back(value.at(i, j));
      }
    }
  } else if (spec.family == RepFamily::kCongSkew) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      for (std::size_t j = i + 1; j < spec.n; ++j) {
        coords.push_back(value.at(i, j));
      }
    }
  } else {
    for (std::size_t i = 0; i < value.rows(); ++i) {
      for (std::size_t j = 0; j < value.cols(); ++j) {
        coords.push_back(value.at(i, j));
      }
    }
  }
  return coords;
}

/** The matrix of xi -> rho(xi) point, module_dim x lie_dim. */
inline QMatrix operator_matrix(const RepSpec& spec, const QMatrix& point) {
  validate_point(spec, point);
  const std::vector<QMatrix> basis = lie_basis(spec);
  QMatrix result(module_dim(spec), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::vector<Rational> coords =
        module_coordinates(spec, apply_action(spec, basis[k], point));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      result.at(i, k) = coords[i];
    }
  }
  return result;
}

/** The representation pencil R_x + lambda R_a. */
inline Pencil rep_pencil(const RepSpec& spec, const QMatrix& x,
                         const QMatrix& a) {
  return Pencil(operator_matrix(spec, x), operator_matrix(spec, a));
}

/** Deterministic pseudo-random point with entries bounded by `bound`.
 * Symmetric and skew points draw their (strict) upper triangle. */
inline QMatrix random_point(const RepSpec& spec, std::uint64_t seed,
                            long bound) {
  validate_spec(spec);
  SplitMix64 rng(seed);
  const auto [rows, cols] = point_shape(spec);
  QMatrix point(rows, cols);
  if (spec.family == RepFamily::kCongSym) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = i; j < cols; ++j) {
        const Rational v(rng.next_in_range(-bound, bound));
        point.at(i, j) = v;
        point.at(j, i) = v;
      }
    }
  } else if (spec.family == RepFamily::kCongSkew) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = i + 1; j < cols; ++j) {
        const Rational v(rng.next_in_range(-bound, bound));
        point.at(i, j) = v;
        point.at(j, i) = -v;
      }
    }
  } else {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        point.at(i, j) = Rational(rng.next_in_range(-bound, bound));
      }
    }
  }
  return point;
}

/**
 * The distinguished point pair (x, a) whose pencil realizes the closed-form
 * invariants. `attempt` only matters for the triangular sum family, whose
 * second point is drawn pseudo-randomly (seeded by the attempt) because no
 * single closed-form companion works for every shape.
 */
inline std::pair<QMatrix, QMatrix> canonical_pair(const RepSpec& spec,
                                                  std::size_t attempt = 0) {
  validate_spec(spec);
  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  const auto [rows, cols] = point_shape(spec);
  QMatrix x(rows, cols);
  QMatrix a(rows, cols);
  switch (spec.family) {
    case RepFamily::kGlSum:
    case RepFamily::kSlSum:
    case RepFamily::kSoSum:
    case RepFamily::kSpSum:
      if (m < n) {
        for (std::size_t i = 0; i < m; ++i) {
          x.at(i, i) = 1;            // identity on top
          a.at(n - m + i, i) = 1;    // identity at the bottom
        }
      } else if (m == n) {
        for (std::size_t i = 0; i < n; ++i) {
          x.at(i, i) = Rational(static_cast<long>(i + 1));
          a.at(i, i) = 1;
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          x.at(i, i) = 1;            // identity on the left
          a.at(i, m - n + i) = 1;    // identity on the right
        }
      }
      return {x, a};
    case RepFamily::kBSum:
      if (m <= n) {
        for (std::size_t i = 0; i < m; ++i) {
          x.at(n - m + i, i) = 1;  // identity at the bottom
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          x.at(i, i) = 1;  // identity on the left
        }
      }
      return {x, random_point(spec, attempt, 10)};
    case RepFamily::kNStd:
      x.at(n - 1, 0) = 1;
      a.at(n - 2, 0) = 1;
      return {x, a};
    case RepFamily::kCongSym:
      for (std::size_t i = 0; i < n; ++i) {
        x.at(i, i) = Rational(static_cast<long>(i + 1));
        a.at(i, i) = 1;
      }
      return {x, a};
    case RepFamily::kCongSkew:
      if (n % 2 == 0) {
        for (std::size_t i = 0; 2 * i < n; ++i) {
          const Rational weight(static_cast<long>(i + 1));
          x.at(2 * i, 2 * i + 1) = weight;
          x.at(2 * i + 1, 2 * i) = -weight;
          a.at(2 * i, 2 * i + 1) = 1;
          a.at(2 * i + 1, 2 * i) = -1;
        }
      } else {
        const std::size_t k = (n - 1) / 2;
        for (std::size_t i = 0; i < k; ++i) {
          x.at(i, k + i) = 1;
          x.at(k + i, i) = -1;
          a.at(i, k + i + 1) = 1;
          a.at(k + i + 1, i) = -1;
        }
      }
      return {x, a};
  }
  throw InternalError("canonical_pair: unhandled family");
}

// ===== dimension counts =====

inline std::size_t stabilizer_dim(const RepSpec& spec, const QMatrix& point) {
  return lie_dim(spec) - rank(operator_matrix(spec, point));
}

inline std::size_t orbit_codim(const RepSpec& spec, const QMatrix& point) {
  return module_dim(spec) - rank(operator_matrix(spec, point));
}

inline std::size_t common_stabilizer_dim(const RepSpec& spec, const QMatrix& x,
                                         const QMatrix& a) {
  return lie_dim(spec) -
         rank(vstack(operator_matrix(spec, x), operator_matrix(spec, a)));
}

inline std::size_t image_sum_codim(const RepSpec& spec, const QMatrix& x,
                                   const QMatrix& a) {
  return module_dim(spec) -
         rank(hstack(operator_matrix(spec, x), operator_matrix(spec, a)));
}

/**
 * Number of Jordan blocks of the pencil R_x + lambda R_a at the eigenvalue
 * lambda0: the stabilizer dimension of x - lambda0 a in excess of the
 * generic stabilizer dimension along the line x - mu a. Probes mu = lambda0
 * + 1, +2, +3, ... until the minimum observed dimension repeats (the
 * stabilizer dimension is minimal at generic points).
 */
inline std::size_t jordan_count_at(const RepSpec& spec, const QMatrix& x,
                                   const QMatrix& a, const Rational& lambda0) {
  const auto stabilizer_at = [&](const Rational& mu) {
    return stabilizer_dim(spec, x + (-mu) * a);
  };
  const std::size_t at_point = stabilizer_at(lambda0);
  std::size_t generic = std::numeric_limits<std::size_t>::max();
  int hits = 0;
  for (long k = 1;; ++k) {
    const std::size_t s = stabilizer_at(lambda0 + Rational(k));
    if (s < generic) {
      generic = s;
      hits = 1;
    } else if (s == generic) {
      ++hits;
    }
    if (k >= 3 && hits >= 2) {
      break;
    }
    if (k > 50) {
      throw InternalError("jordan_count_at: generic dimension unstable");
    }
  }
  if (at_point < generic) {
    throw InternalError("jordan_count_at: dimension below generic minimum");
  }
  return at_point - generic;
}

// ===== admissible point transforms =====

/** A symmetry point -> left * point * right that leaves the invariants of
 * the representation pencil unchanged. */
struct PointTransform {
  QMatrix left;
  QMatrix right;
};

inline QMatrix apply_point_transform(const PointTransform& t,
                                     const QMatrix& point) {
  return t.left * point * t.right;
}

inline PointTransform random_point_transform(const RepSpec& spec,
                                             SplitMix64& rng) {
  validate_spec(spec);
  const std::size_t n = spec.n;

  const auto random_invertible = [&rng](std::size_t k) {
    while (true) {
      QMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          m.at(i, j) = Rational(rng.next_in_range(-3, 3));
        }
      }
      if (determinant(m) != 0) {
        return m;
      }
    }
  };
  const auto random_upper_invertible = [&rng](std::size_t k) {
    QMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      long d = 0;
      while (d == 0) {
        d = rng.next_in_range(-3, 3);
      }
      m.at(i, i) = Rational(d);
      for (std::size_t j = i + 1; j < k; ++j) {
        m.at(i, j) = Rational(rng.next_in_range(-3, 3));
      }
    }
    return m;
  };
  const auto random_special = [&rng](std::size_t k) {
    // Product of transvections I + c E_ij (i != j): determinant one.
    QMatrix m = QMatrix::identity(k);
    for (std::size_t step = 0; step < 2 * k; ++step) {
      const auto i = static_cast<std::size_t>(
          rng.next_in_range(0, static_cast<long>(k) - 1));
      auto j = i;
      while (j == i) {
        j = static_cast<std::size_t>(
            rng.next_in_range(0, static_cast<long>(k) - 1));
      }
      QMatrix t = QMatrix::identity(k);
      t.at(i, j) = Rational(rng.next_in_range(-3, 3));
      m = m * t;
    }
    return m;
  };
  const auto cayley = [](const QMatrix& s) {
    const QMatrix id = QMatrix::identity(s.rows());
    return (id - s) * inverse(id + s);
  };

  PointTransform t;
  switch (spec.family) {
    case RepFamily::kGlSum:
    case RepFamily::kSlSum:
      t.left = random_invertible(n);
      t.right = random_invertible(spec.m);
      return t;
    case RepFamily::kSoSum: {
      // Cayley transform of a skew matrix: orthogonal, and I + S is always
      // invertible because skew spectra are purely imaginary.
      QMatrix s(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Rational v(rng.next_in_range(-2, 2));
          s.at(i, j) = v;
          s.at(j, i) = -v;
        }
      }
      t.left = cayley(s);
      t.right = random_invertible(spec.m);
      return t;
    }
    case RepFamily::kSpSum: {
      // Cayley transform of a Hamiltonian matrix S = Omega^{-1} M with M
      // symmetric: symplectic whenever I + S is invertible.
      const QMatrix omega_inv = Rational(-1) * detail::symplectic_form(n);
      while (true) {
        QMatrix sym(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            const Rational v(rng.next_in_range(-2, 2));
            sym.at(i, j) = v;
            sym.at(j, i) = v;
          }
        }
        const QMatrix s = omega_inv * sym;
        if (determinant(QMatrix::identity(n) + s) == 0) {
          continue;
        }
        t.left = cayley(s);
        t.right = random_invertible(spec.m);
        return t;
      }
    }
    case RepFamily::kBSum:
      t.left = random_upper_invertible(n);
      t.right = random_invertible(spec.m);
      return t;
    case RepFamily::kNStd:
      t.left = random_upper_invertible(n);
      t.right = QMatrix::identity(1);
      return t;
    case RepFamily::kCongSym:
    case RepFamily::kCongSkew: {
      const QMatrix p = spec.group == GroupKind::kSl ? random_special(n)
                                                     : random_invertible(n);
      t.left = p;
      t.right = p.transpose();
      return t;
    }
  }
  throw InternalError("random_point_transform: unhandled family");
}

}  // namespace jk

#endif  // JK_REP_CATALOG_HPP
