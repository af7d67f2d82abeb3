#ifndef JK_JK_INVARIANTS_HPP
#define JK_JK_INVARIANTS_HPP

/**
 * Full Jordan-Kronecker invariants of a pencil: horizontal and vertical
 * index multisets plus Jordan block sizes grouped into eigenvalue classes.
 *
 * A finite class is a monic polynomial from a gcd-free basis built out of
 * the squarefree-decomposition factors of the nonconstant invariant factors
 * (feeding the individual squarefree factors, not whole squarefree parts,
 * keeps eigenvalues with different block sizes separable). A class of
 * degree d stands for d eigenvalues sharing one block-size multiset; the
 * sizes are the exponents of the class polynomial in the invariant factors.
 * The class at infinity carries the valuations from the reversed pencil.
 *
 * The constructor-style entry point cross-checks the block totals against
 * the pencil shape and rank and throws InternalError on any violation.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "jk/pencil.hpp"
#include "jk/poly.hpp"
#include "jk/poly_gcd.hpp"
#include "jk/rational.hpp"
#include "jk/smith.hpp"

namespace jk {

struct EigenClass {
  UniPoly poly;              // monic, nonconstant; empty for infinity
  bool at_infinity = false;
  IndexMultiset sizes;       // sorted ascending, one entry per Jordan block

  /** Eigenvalues represented: the polynomial degree, or 1 at infinity. */
  std::size_t eigenvalue_count() const {
    return at_infinity ? 1 : static_cast<std::size_t>(poly.degree());
  }
};

inline bool operator==(const EigenClass& a, const EigenClass& b) {
  return a.at_infinity == b.at_infinity && a.poly == b.poly &&
         a.sizes == b.sizes;
}

struct JKInvariants {
  std::size_t rank = 0;
  IndexMultiset horizontal;        // sorted ascending
  IndexMultiset vertical;          // sorted ascending
  std::vector<EigenClass> jordan;  // finite classes in poly order, then
                                   // the class at infinity if present
};

inline bool operator==(const JKInvariants& a, const JKInvariants& b) {
  return a.rank == b.rank && a.horizontal == b.horizontal &&
         a.vertical == b.vertical && a.jordan == b.jordan;
}

namespace detail {

inline void check_block_totals(const JKInvariants& inv, std::size_t rows,
                               std::size_t cols) {
  std::size_t h_sum = 0;
  for (int h : inv.horizontal) {
    h_sum += static_cast<std::size_t>(h);
  }
  std::size_t v_sum = 0;
  for (int v : inv.vertical) {
    v_sum += static_cast<std::size_t>(v);
  }
  std::size_t jordan_total = 0;  // eigenvalue count times block sizes
  for (const EigenClass& cls : inv.jordan) {
    std::size_t class_sum = 0;
    for (int s : cls.sizes) {
      class_sum += static_cast<std::size_t>(s);
    }
    jordan_total += cls.eigenvalue_count() * class_sum;
  }
  const std::size_t h_count = inv.horizontal.size();
  const std::size_t v_count = inv.vertical.size();
  if (h_count != cols - inv.rank || v_count != rows - inv.rank) {
    throw InternalError("jk invariants: index counts disagree with rank");
  }
  if (h_sum + (v_sum - v_count) + jordan_total != cols) {
    throw InternalError("jk invariants: block widths do not tile columns");
  }
  if ((h_sum - h_count) + v_sum + jordan_total != rows) {
    throw InternalError("jk invariants: block heights do not tile rows");
  }
  if ((h_sum - h_count) + (v_sum - v_count) + jordan_total != inv.rank) {
    throw InternalError("jk invariants: block ranks do not add up");
  }
}

}  // namespace detail

inline JKInvariants jk_invariants(const Pencil& p) {
  JKInvariants inv;
  const PencilEigenData eigen = pencil_eigen_data(p);
  inv.rank = eigen.rank;
  inv.horizontal = detail::horizontal_indices_with_rank(p, inv.rank);
  const Pencil t = transpose(p);
  inv.vertical = detail::horizontal_indices_with_rank(t, inv.rank);

  // Gcd-free basis over the nonconstant invariant factors (the basis
  // routine splits each into its squarefree factors first, so eigenvalues
  // with different block sizes land in different classes).
  const std::vector<UniPoly>& nonconstant = eigen.finite_factors;
  if (!nonconstant.empty()) {
    for (const UniPoly& b : gcd_free_basis(nonconstant)) {
      if (b.degree() <= 0) {
        continue;
      }
      EigenClass cls;
      cls.poly = b;
      for (const UniPoly& d : nonconstant) {
        const int e = exponent_of(d, b);
        if (e > 0) {
          cls.sizes.push_back(e);
        }
      }
      std::sort(cls.sizes.begin(), cls.sizes.end());
      if (!cls.sizes.empty()) {
        inv.jordan.push_back(std::move(cls));
      }
    }
  }
  std::sort(inv.jordan.begin(), inv.jordan.end(),
            [](const EigenClass& a, const EigenClass& b) {
              return poly_lex_less(a.poly, b.poly);
            });

  if (!eigen.infinity_sizes.empty()) {
    EigenClass cls;
    cls.at_infinity = true;
    cls.sizes = eigen.infinity_sizes;
    inv.jordan.push_back(std::move(cls));
  }

  detail::check_block_totals(inv, p.rows(), p.cols());
  return inv;
}

/** The invariants of a direct sum of k identical copies: every block
 * multiplicity and the rank scale by k. */
inline JKInvariants replicate(const JKInvariants& inv, std::size_t k) {
  if (k == 0) {
    throw InputError("replicate: factor must be positive");
  }
  JKInvariants out;
  out.rank = inv.rank * k;
  auto repeat = [k](const IndexMultiset& src) {
    IndexMultiset dst;
    dst.reserve(src.size() * k);
    for (int value : src) {
      dst.insert(dst.end(), k, value);
    }
    std::sort(dst.begin(), dst.end());
    return dst;
  };
  out.horizontal = repeat(inv.horizontal);
  out.vertical = repeat(inv.vertical);
  for (const EigenClass& cls : inv.jordan) {
    EigenClass scaled = cls;
    scaled.sizes = repeat(cls.sizes);
    out.jordan.push_back(std::move(scaled));
  }
  return out;
}

}  // namespace jk

#endif  // JK_JK_INVARIANTS_HPP
