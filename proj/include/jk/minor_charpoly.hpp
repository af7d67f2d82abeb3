#ifndef JK_MINOR_CHARPOLY_HPP
#define JK_MINOR_CHARPOLY_HPP

/**
 * Independent characteristic-data oracle from r x r minors.
 *
 * For a pencil of rank r, the finite part is the monic gcd of all r x r
 * minors of A + lambda B, and the exponent at infinity is r minus the
 * largest minor degree — equivalently, the valuation at mu = 0 of the gcd of
 * the r x r minors of the reversed pencil B + mu A (a minor of the reversed
 * pencil is the degree-r reversal of the corresponding minor, so the minimal
 * valuation on one side is r minus the maximal degree on the other).
 *
 * The minor gcd is computed subset-wise: gcd over all column subsets S of
 * size r of the gcd of the maximal minors of the column submatrix M_S. The
 * latter equals the pivot product of a Euclidean row triangularization of
 * M_S, because unimodular row operations preserve the ideal of maximal
 * minors. Subsets are drawn from whichever side (rows or columns) yields
 * fewer of them. Early exit: the running gcd only ever shrinks, so degree 0
 * settles the finite part and valuation 0 settles the infinity exponent.
 *
 * The work is bounded by requiring binom(rows, r) * binom(cols, r) <= cap;
 * larger instances throw OracleTooLarge.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/pencil.hpp"
#include "jk/poly.hpp"
#include "jk/poly_gcd.hpp"
#include "jk/rational.hpp"

namespace jk {

inline constexpr std::uint64_t kDefaultMinorCap = 1000000;

struct CharPoly {
  UniPoly finite_part;  // monic gcd of the r x r minors
  int inf_exponent;     // r minus the maximal minor degree
};

class OracleTooLarge : public std::runtime_error {
 public:
  explicit OracleTooLarge(const std::string& what)
      : std::runtime_error(what) {}
};

namespace detail {

/** Gcd of the maximal (full-width) minors of a tall polynomial matrix,
 * up to a unit: the pivot product of a Euclidean row triangularization.
 * Returns zero when the matrix has deficient column rank. */
inline UniPoly maximal_minor_gcd(Matrix<UniPoly> m) {
  const std::size_t rows = m.rows();
  const std::size_t width = m.cols();
  UniPoly product(1);
  for (std::size_t t = 0; t < width; ++t) {
    // Keep coefficients small: rescale rows by rational units.
    for (std::size_t i = t; i < rows; ++i) {
      bool any = false;
      Integer num_gcd(0);
      Integer den_lcm(1);
      for (std::size_t j = t; j < width; ++j) {
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
      for (std::size_t j = t; j < width; ++j) {
        m.at(i, j) = unit * m.at(i, j);
      }
    }

    int guard = 0;
    while (true) {
      if (++guard > 10000) {
        throw InternalError("minor oracle: triangularization stalled");
      }
      // Cheapest nonzero pivot in the column.
      std::size_t pivot_row = rows;
      std::pair<std::size_t, std::size_t> best_cost{0, 0};
      for (std::size_t i = t; i < rows; ++i) {
        if (m.at(i, t).is_zero()) {
          continue;
        }
        const auto cost = BareissTraits<UniPoly>::pivot_cost(m.at(i, t));
        if (pivot_row == rows || cost < best_cost) {
          pivot_row = i;
          best_cost = cost;
        }
      }
      if (pivot_row == rows) {
        return UniPoly();  // deficient column rank: all maximal minors vanish
      }
      if (pivot_row != t) {
        for (std::size_t j = t; j < width; ++j) {
          std::swap(m.at(t, j), m.at(pivot_row, j));
        }
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t).is_zero()) {
          continue;
        }
        const auto qr = UniPoly::divmod(m.at(i, t), m.at(t, t));
        for (std::size_t j = t; j < width; ++j) {
          m.at(i, j) -= qr.first * m.at(t, j);
        }
        clean = clean && m.at(i, t).is_zero();
      }
      if (clean) {
        break;
      }
    }
    product = product * m.at(t, t);
  }
  return product;
}

/** Visit every size-r column submatrix of `m` (columns in increasing
 * order); the visitor returns false to stop early. */
template <typename Visitor>
void for_each_column_subset(const Matrix<UniPoly>& m, std::size_t r,
                            Visitor&& visit) {
  std::vector<std::size_t> sel(r);
  for (std::size_t i = 0; i < r; ++i) {
    sel[i] = i;
  }
  while (true) {
    Matrix<UniPoly> sub(m.rows(), r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        sub.at(i, j) = m.at(i, sel[j]);
      }
    }
    if (!visit(std::move(sub))) {
      return;
    }
    // Next combination in lexicographic order.
    std::size_t k = r;
    while (k > 0 && sel[k - 1] == m.cols() - r + (k - 1)) {
      --k;
    }
    if (k == 0) {
      return;
    }
    ++sel[k - 1];
    for (std::size_t i = k; i < r; ++i) {
      sel[i] = sel[i - 1] + 1;
    }
  }
}

/** Monic gcd of all r x r minors of the pencil's polynomial matrix.
 * `stop_at_valuation_zero` enables the early exit used for the reversed
 * side, where only the valuation of the result is consumed. */
inline UniPoly pencil_minor_gcd(const Pencil& p, std::size_t r,
                                bool stop_at_valuation_zero) {
  Matrix<UniPoly> m = pencil_poly_matrix(p);
  if (m.cols() > m.rows()) {
    // Subsets are drawn over columns; the narrow side has fewer of them
    // (binom is increasing in the dimension for fixed r), and minors are
    // transpose-invariant.
    m = m.transpose();
  }
  UniPoly g;
  for_each_column_subset(m, r, [&](Matrix<UniPoly> sub) {
    g = poly_gcd(g, maximal_minor_gcd(std::move(sub)));
    if (g.degree() == 0) {
      return false;
    }
    if (stop_at_valuation_zero && !g.is_zero() && g.valuation() == 0) {
      return false;
    }
    return true;
  });
  if (g.is_zero()) {
    throw InternalError("minor oracle: all minors vanished at stated rank");
  }
  return g.monic();
}

}  // namespace detail

inline CharPoly charpoly_via_minor_gcd(const Pencil& p,
                                       std::uint64_t cap = kDefaultMinorCap) {
  const std::size_t r = pencil_rank(p);
  if (r == 0) {
    return CharPoly{UniPoly(1), 0};
  }
  Integer row_subsets;
  Integer col_subsets;
  mpz_bin_uiui(row_subsets.get_mpz_t(), p.rows(), r);
  mpz_bin_uiui(col_subsets.get_mpz_t(), p.cols(), r);
  const Integer work = row_subsets * col_subsets;
  if (work > Integer(static_cast<unsigned long>(cap))) {
    throw OracleTooLarge("oracle too large: " + work.get_str() +
                         " minors exceed cap " + std::to_string(cap));
  }
  const UniPoly finite = detail::pencil_minor_gcd(p, r, false);
  const UniPoly rev = detail::pencil_minor_gcd(reversed(p), r, true);
  return CharPoly{finite, rev.valuation()};
}

}  // namespace jk

#endif  // JK_MINOR_CHARPOLY_HPP
