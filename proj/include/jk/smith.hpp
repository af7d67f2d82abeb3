#ifndef JK_SMITH_HPP
#define JK_SMITH_HPP

/**
 * Invariant factors of a pencil over Q[lambda] and the Jordan structure at
 * infinity.
 *
 * The production path avoids elimination over Q[lambda], whose intermediate
 * entries suffer severe degree and coefficient growth on dense inputs, and
 * works with constant rational matrices throughout:
 *
 *   1. Deflation of the singular part. For a shift sigma with
 *      rank(A + sigma B) equal to the pencil rank, the Wong sequence
 *      V_0 = 0, V_{k+1} = (A + sigma B)^{-1}(B V_k) stabilizes on the span
 *      of the right singular chains. Quotienting the domain by that span and
 *      the codomain by its image under A and B removes exactly the
 *      horizontal blocks; the same step on the transposed quotient removes
 *      the vertical blocks. What remains is a square regular core carrying
 *      exactly the elementary divisors of the pencil.
 *   2. Shift-and-invert. For mu with S = A' + mu B' invertible,
 *      S^{-1}(A' + lambda B') = I + (lambda - mu) W with W = S^{-1} B'.
 *      Similarity invariants of W translate back to the pencil: an
 *      eigenvalue nu != 0 of W is the finite eigenvalue lambda = mu - 1/nu
 *      with identical block sizes, and the nilpotent part of W is the
 *      structure at infinity.
 *   3. Cyclic decomposition of W. A vector of maximal order (annihilator
 *      equal to the minimal polynomial) is assembled by merging basis
 *      vectors through a coprime splitting of the lcm of their orders. Its
 *      Krylov subspace is an invariant direct summand, so the remaining
 *      factors are the invariant chain of the induced quotient action.
 *
 * smith_invariant_factors returns the monic chain d_1 | d_2 | ... | d_r
 * (r = pencil rank), infinity_structure the block sizes at infinity, and
 * pencil_eigen_data both at once. smith_invariant_factors_elimination is an
 * independent reference implementation by elementary row and column
 * operations over Q[lambda]; it is retained for cross-checks and is only
 * suitable for small pencils.
 */

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/pencil.hpp"
#include "jk/poly.hpp"
#include "jk/poly_gcd.hpp"
#include "jk/rational.hpp"
#include "jk/subspace.hpp"

namespace jk {

/** Eigenstructure of a pencil: rank, the nonconstant invariant factors over
 * Q[lambda] in divisibility order, and the block sizes at infinity. */
struct PencilEigenData {
  std::size_t rank = 0;
  std::vector<UniPoly> finite_factors;  // monic, nonconstant, each divides
                                        // the next
  IndexMultiset infinity_sizes;         // sorted ascending
};

namespace detail {

/** Smallest shift from 0, 1, -1, 2, -2, ... where A + sigma B reaches the
 * pencil rank. At most min(rows, cols) shifts can fail, so the search is
 * guaranteed to end. */
inline Rational full_rank_shift(const Pencil& p, std::size_t r) {
  const long limit = static_cast<long>(std::min(p.rows(), p.cols())) + 2;
  for (long magnitude = 0; magnitude <= limit; ++magnitude) {
    for (int sign : {1, -1}) {
      if (magnitude == 0 && sign < 0) {
        continue;
      }
      const Rational sigma(sign * magnitude);
      if (rank_at(p, sigma) == r) {
        return sigma;
      }
    }
  }
  throw InternalError("smith: no shift of full pencil rank found");
}

/**
 * Quotients away the right singular (horizontal) blocks of a pencil of rank
 * r. The returned pencil is strictly equivalent to the direct sum of the
 * remaining Kronecker blocks, so it has full column rank and carries the
 * vertical indices and all elementary divisors unchanged.
 */
inline Pencil deflate_right_singular(const Pencil& p, std::size_t r) {
  if (p.cols() == r) {
    return p;  // full column rank: no horizontal blocks
  }
  const Rational sigma = full_rank_shift(p, r);
  const QMatrix shifted = p.A + sigma * p.B;

  // Wong sequence: V_1 = ker(shifted), V_{k+1} = shifted^{-1}(B V_k). The
  // chain is increasing and stabilizes on the right singular span.
  QMatrix span = kernel_basis(shifted);
  for (std::size_t guard = 0;; ++guard) {
    if (guard > p.cols() + 2) {
      throw InternalError("smith: singular chain failed to stabilize");
    }
    QMatrix next = preimage_basis(shifted, p.B * span);
    if (next.cols() == span.cols()) {
      break;
    }
    span = std::move(next);
  }

  const QMatrix image = column_space_basis(hstack(p.A * span, p.B * span));
  const std::size_t dx = span.cols();
  const std::size_t dy = image.cols();
  const QMatrix domain_basis = complete_to_basis(span);
  const QMatrix codomain_basis = complete_to_basis(image);
  const QMatrix codomain_inv = inverse(codomain_basis);
  const QMatrix za = codomain_inv * (p.A * domain_basis);
  const QMatrix zb = codomain_inv * (p.B * domain_basis);
  for (std::size_t i = dy; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < dx; ++j) {
      if (za.at(i, j) != 0 || zb.at(i, j) != 0) {
        throw InternalError("smith: singular span is not invariant");
      }
    }
  }
  QMatrix qa(p.rows() - dy, p.cols() - dx);
  QMatrix qb(p.rows() - dy, p.cols() - dx);
  for (std::size_t i = 0; i < qa.rows(); ++i) {
    for (std::size_t j = 0; j < qa.cols(); ++j) {
      qa.at(i, j) = za.at(dy + i, dx + j);
      qb.at(i, j) = zb.at(dy + i, dx + j);
    }
  }
  return Pencil(std::move(qa), std::move(qb));
}

/** The regular core: both singular parts quotiented away. Square, with
 * det(A' + lambda B') not identically zero; its invariant factors are the
 * nonconstant invariant factors of the original pencil. */
inline Pencil regular_core(const Pencil& p, std::size_t r) {
  const Pencil right = deflate_right_singular(p, r);
  // The right quotient has full column rank; deflating its transpose (also
  // full column rank after the swap of roles) removes the vertical blocks.
  const Pencil left = deflate_right_singular(transpose(right), right.cols());
  const Pencil core = transpose(left);
  if (core.rows() != core.cols()) {
    throw InternalError("smith: regular core is not square");
  }
  return core;
}

/** Minimal polynomial of the vector v under w, via an echelon basis of the
 * Krylov vectors with coordinate tracking. Monic; degree >= 1 for v != 0. */
inline UniPoly krylov_minpoly(const QMatrix& w, const QMatrix& v) {
  const std::size_t s = w.rows();
  std::vector<std::vector<Rational>> vecs;    // echelon vectors, lead = 1
  std::vector<std::vector<Rational>> coords;  // power-basis coordinates
  std::vector<std::size_t> leads;             // first nonzero positions
  std::vector<std::size_t> order;             // indices sorted by lead

  QMatrix power = v;
  for (std::size_t k = 0; k <= s; ++k) {
    std::vector<Rational> vec(s);
    for (std::size_t i = 0; i < s; ++i) {
      vec[i] = power.at(i, 0);
    }
    std::vector<Rational> coord(k + 1, Rational(0));
    coord[k] = Rational(1);
    // Reduce by ascending lead position; leads are first nonzeros, so each
    // subtraction leaves the already-cleared prefix untouched.
    for (std::size_t t : order) {
      const Rational factor = vec[leads[t]];
      if (factor == 0) {
        continue;
      }
      for (std::size_t i = leads[t]; i < s; ++i) {
        vec[i] -= factor * vecs[t][i];
      }
      for (std::size_t c = 0; c < coords[t].size(); ++c) {
        coord[c] -= factor * coords[t][c];
      }
    }
    std::size_t lead = s;
    for (std::size_t i = 0; i < s; ++i) {
      if (vec[i] != 0) {
        lead = i;
        break;
      }
    }
    if (lead == s) {
      return UniPoly(std::move(coord));  // monic: coord[k] was never touched
    }
    const Rational inv_lead = 1 / vec[lead];
    for (std::size_t i = lead; i < s; ++i) {
      vec[i] *= inv_lead;
    }
    for (Rational& c : coord) {
      c *= inv_lead;
    }
    vecs.push_back(std::move(vec));
    coords.push_back(std::move(coord));
    leads.push_back(lead);
    order.insert(std::upper_bound(order.begin(), order.end(), vecs.size() - 1,
                                  [&](std::size_t a, std::size_t b) {
                                    return leads[a] < leads[b];
                                  }),
                 vecs.size() - 1);
    power = w * power;
  }
  throw InternalError("smith: Krylov chain exceeded the space dimension");
}

/** h(w) * v by Horner evaluation. */
inline QMatrix poly_apply(const UniPoly& h, const QMatrix& w,
                          const QMatrix& v) {
  QMatrix acc(w.rows(), 1);
  for (int t = h.degree(); t >= 0; --t) {
    acc = w * acc;
    const Rational c = h.coeff(static_cast<std::size_t>(t));
    if (c != 0) {
      for (std::size_t i = 0; i < acc.rows(); ++i) {
        acc.at(i, 0) += c * v.at(i, 0);
      }
    }
  }
  return acc;
}

/**
 * Splits lcm(f, g) = F * G with F | f, G | g and gcd(F, G) = 1, for monic
 * nonzero f, g: F collects (with full multiplicity in f) the squarefree
 * components where f carries at least the multiplicity of g, G the rest.
 */
inline std::pair<UniPoly, UniPoly> coprime_lcm_split(const UniPoly& f,
                                                     const UniPoly& g) {
  const UniPoly common = poly_gcd(f, g);
  const UniPoly lcm = (f / common) * g;
  UniPoly part = f / common;  // supported exactly where f exceeds g
  if (part.is_constant()) {
    return {UniPoly(1), lcm};  // f divides g
  }
  // Saturate: gcd(f, part^(2^k)) grows to the full multiplicity in f.
  for (std::size_t guard = 0;; ++guard) {
    if (guard > static_cast<std::size_t>(f.degree()) + 2) {
      throw InternalError("smith: coprime saturation failed to stabilize");
    }
    const UniPoly next = poly_gcd(f, part * part);
    if (next == part) {
      break;
    }
    part = next;
  }
  return {part, lcm / part};
}

/**
 * Invariant factors of w by cyclic decomposition, in descending
 * divisibility order (minimal polynomial first). Each round builds a vector
 * of maximal order, emits its annihilator, and recurses on the action
 * induced on the quotient by its Krylov span, which is a direct summand.
 */
inline std::vector<UniPoly> cyclic_invariant_chain(QMatrix w) {
  std::vector<UniPoly> chain;
  while (w.rows() > 0) {
    const std::size_t s = w.rows();
    QMatrix v(s, 1);
    v.at(0, 0) = Rational(1);
    UniPoly f = krylov_minpoly(w, v);
    for (std::size_t i = 1; i < s && f.degree() < static_cast<int>(s); ++i) {
      QMatrix u(s, 1);
      u.at(i, 0) = Rational(1);
      const UniPoly g = krylov_minpoly(w, u);
      if ((g / poly_gcd(f, g)).is_constant()) {
        continue;  // g divides f: no gain
      }
      const auto [part_f, part_g] = coprime_lcm_split(f, g);
      QMatrix merged = poly_apply(f / part_f, w, v);
      const QMatrix other = poly_apply(g / part_g, w, u);
      for (std::size_t row = 0; row < s; ++row) {
        merged.at(row, 0) += other.at(row, 0);
      }
      v = std::move(merged);
      f = part_f * part_g;
      if (krylov_minpoly(w, v) != f) {
        throw InternalError("smith: merged vector misses the joint order");
      }
    }
    chain.push_back(f);

    const std::size_t d = static_cast<std::size_t>(f.degree());
    QMatrix krylov(s, d);
    QMatrix power = v;
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < s; ++i) {
        krylov.at(i, j) = power.at(i, 0);
      }
      power = w * power;
    }
    const QMatrix basis = complete_to_basis(krylov);
    const QMatrix z = inverse(basis) * (w * basis);
    for (std::size_t i = d; i < s; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (z.at(i, j) != 0) {
          throw InternalError("smith: Krylov span is not invariant");
        }
      }
    }
    QMatrix quotient(s - d, s - d);
    for (std::size_t i = 0; i < s - d; ++i) {
      for (std::size_t j = 0; j < s - d; ++j) {
        quotient.at(i, j) = z.at(d + i, d + j);
      }
    }
    w = std::move(quotient);
  }
  return chain;
}

/**
 * Finite part of a similarity invariant of W, back in the pencil variable:
 * for f with f(0) != 0 of degree D, the roots nu map to lambda = mu - 1/nu,
 * realized as the monic normalization of (lambda - mu)^D f(-1/(lambda -
 * mu)). Multiplicities are preserved factor by factor.
 */
inline UniPoly finite_factor_from_invariant(const UniPoly& f,
                                            const Rational& mu) {
  const std::size_t deg = static_cast<std::size_t>(f.degree());
  std::vector<Rational> alternated(deg + 1);
  for (std::size_t j = 0; j <= deg; ++j) {
    const Rational c = f.coeff(j);
    alternated[j] = (j % 2 == 0) ? c : -c;
  }
  const UniPoly reversed_part = UniPoly(std::move(alternated)).reversed(deg);
  const UniPoly shift(std::vector<Rational>{-mu, Rational(1)});  // lambda - mu
  UniPoly result;
  for (int t = reversed_part.degree(); t >= 0; --t) {
    result = result * shift +
             UniPoly::constant(reversed_part.coeff(static_cast<std::size_t>(t)));
  }
  return result.monic();
}

}  // namespace detail

/** Rank, nonconstant invariant factors, and infinity structure in one
 * pass. */
inline PencilEigenData pencil_eigen_data(const Pencil& p) {
  PencilEigenData out;
  out.rank = pencil_rank(p);
  if (out.rank == 0) {
    return out;
  }
  const Pencil core = detail::regular_core(p, out.rank);
  const std::size_t s = core.rows();
  if (s == 0) {
    return out;
  }

  // Shift until the core evaluates to an invertible matrix; the core is
  // regular, so at most s shifts can fail.
  Rational mu;
  {
    bool found = false;
    const long limit = static_cast<long>(s) + 2;
    for (long magnitude = 0; magnitude <= limit && !found; ++magnitude) {
      for (int sign : {1, -1}) {
        if (magnitude == 0 && sign < 0) {
          continue;
        }
        const Rational candidate(sign * magnitude);
        if (determinant(core.A + candidate * core.B) != 0) {
          mu = candidate;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      throw InternalError("smith: regular core has no invertible shift");
    }
  }
  const QMatrix w = inverse(core.A + mu * core.B) * core.B;

  const std::vector<UniPoly> chain = detail::cyclic_invariant_chain(w);
  std::size_t degree_total = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    degree_total += static_cast<std::size_t>(chain[i].degree());
    if (i + 1 < chain.size() &&
        !UniPoly::divmod(chain[i], chain[i + 1]).second.is_zero()) {
      throw InternalError("smith: invariant chain is not a divisor chain");
    }
  }
  if (degree_total != s) {
    throw InternalError("smith: invariant degrees do not fill the core");
  }

  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const int valuation = it->valuation();
    if (valuation > 0) {
      out.infinity_sizes.push_back(valuation);
    }
    if (it->degree() > valuation) {
      std::vector<Rational> shifted(
          static_cast<std::size_t>(it->degree() - valuation) + 1);
      for (std::size_t j = 0; j < shifted.size(); ++j) {
        shifted[j] = it->coeff(j + static_cast<std::size_t>(valuation));
      }
      out.finite_factors.push_back(
          detail::finite_factor_from_invariant(UniPoly(std::move(shifted)),
                                               mu));
    }
  }
  std::sort(out.infinity_sizes.begin(), out.infinity_sizes.end());
  if (out.finite_factors.size() > out.rank) {
    throw InternalError("smith: more nonconstant factors than the rank");
  }
  return out;
}

/** Monic invariant factors d_1 | d_2 | ... | d_r over Q[lambda], r = pencil
 * rank. */
inline std::vector<UniPoly> smith_invariant_factors(const Pencil& p) {
  const PencilEigenData data = pencil_eigen_data(p);
  std::vector<UniPoly> factors(data.rank - data.finite_factors.size(),
                               UniPoly(1));
  factors.insert(factors.end(), data.finite_factors.begin(),
                 data.finite_factors.end());
  return factors;
}

/** Sizes of the Jordan blocks at infinity, sorted ascending. */
inline IndexMultiset infinity_structure(const Pencil& p) {
  return pencil_eigen_data(p).infinity_sizes;
}

// ===== reference implementation by elementary operations =====

namespace detail {

/** Rescale each row from `from_row` on to primitive integer coefficients. */
inline void strip_row_contents(Matrix<UniPoly>& m, std::size_t from_row) {
  for (std::size_t i = from_row; i < m.rows(); ++i) {
    Integer num_gcd(0);
    Integer den_lcm(1);
    bool any = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const Rational& c : m.at(i, j).coeffs()) {
        if (c == 0) {
          continue;
        }
        any = true;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
      }
    }
    if (!any) {
      continue;
    }
    const Rational unit = Rational(den_lcm) / Rational(num_gcd);
    if (unit == 1) {
      continue;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m.at(i, j) = unit * m.at(i, j);
    }
  }
}

inline void subtract_scaled_row(Matrix<UniPoly>& m, std::size_t target,
                                std::size_t source, const UniPoly& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    m.at(target, j) -= q * m.at(source, j);
  }
}

inline void subtract_scaled_col(Matrix<UniPoly>& m, std::size_t target,
                                std::size_t source, const UniPoly& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    m.at(i, target) -= q * m.at(i, source);
  }
}

inline void swap_rows(Matrix<UniPoly>& m, std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::swap(m.at(a, j), m.at(b, j));
  }
}

inline void swap_cols(Matrix<UniPoly>& m, std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::swap(m.at(i, a), m.at(i, b));
  }
}

}  // namespace detail

/**
 * Reference invariant factors by elementary row and column operations over
 * Q[lambda]: the nonzero pivot of least cost (degree, then coefficient bit
 * size) clears its row and column with Euclidean division, and divisibility
 * violations fold the offending row into the pivot row. Exact but subject
 * to intermediate expression growth; use only on small pencils.
 */
inline std::vector<UniPoly> smith_invariant_factors_elimination(
    const Pencil& p) {
  Matrix<UniPoly> m = pencil_poly_matrix(p);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<UniPoly> factors;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    detail::strip_row_contents(m, t);

    // Move the cheapest nonzero entry of the trailing submatrix to (t, t).
    bool found = false;
    std::size_t pi = t;
    std::size_t pj = t;
    std::pair<std::size_t, std::size_t> best_cost{0, 0};
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m.at(i, j).is_zero()) {
          continue;
        }
        const auto cost = BareissTraits<UniPoly>::pivot_cost(m.at(i, j));
        if (!found || cost < best_cost) {
          found = true;
          best_cost = cost;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) {
      break;  // trailing submatrix is zero; remaining factors are zero
    }
    detail::swap_rows(m, t, pi);
    detail::swap_cols(m, t, pj);

    int guard = 0;
    while (true) {
      if (++guard > 10000) {
        throw InternalError("smith: elimination failed to converge");
      }
      // Clear the pivot column; a nonzero remainder has smaller degree than
      // the pivot and becomes the new pivot.
      bool restarted = false;
      for (std::size_t i = t + 1; i < rows && !restarted; ++i) {
        if (m.at(i, t).is_zero()) {
          continue;
        }
        const auto qr = UniPoly::divmod(m.at(i, t), m.at(t, t));
        detail::subtract_scaled_row(m, i, t, qr.first);
        if (!m.at(i, t).is_zero()) {
          detail::swap_rows(m, t, i);
          restarted = true;
        }
      }
      if (restarted) {
        continue;
      }
      // Clear the pivot row the same way.
      for (std::size_t j = t + 1; j < cols && !restarted; ++j) {
        if (m.at(t, j).is_zero()) {
          continue;
        }
        const auto qr = UniPoly::divmod(m.at(t, j), m.at(t, t));
        detail::subtract_scaled_col(m, j, t, qr.first);
        if (!m.at(t, j).is_zero()) {
          detail::swap_cols(m, t, j);
          restarted = true;
        }
      }
      if (restarted) {
        continue;
      }
      // Divisibility fix-up: the pivot must divide every remaining entry.
      // Constant pivots divide everything.
      if (m.at(t, t).degree() == 0) {
        break;
      }
      bool fixed_up = false;
      for (std::size_t i = t + 1; i < rows && !fixed_up; ++i) {
        for (std::size_t j = t + 1; j < cols && !fixed_up; ++j) {
          if (m.at(i, j).is_zero()) {
            continue;
          }
          if (!UniPoly::divmod(m.at(i, j), m.at(t, t)).second.is_zero()) {
            // Folding row i into row t re-exposes the entry in the pivot
            // row; the next clearing pass strictly reduces the pivot degree.
            for (std::size_t j2 = t; j2 < cols; ++j2) {
              m.at(t, j2) += m.at(i, j2);
            }
            fixed_up = true;
          }
        }
      }
      if (!fixed_up) {
        break;
      }
    }
    factors.push_back(m.at(t, t).monic());
  }

  return factors;
}

}  // namespace jk

#endif  // JK_SMITH_HPP
