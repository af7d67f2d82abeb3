#ifndef JK_POLY_GCD_HPP
#define JK_POLY_GCD_HPP

/**
 * Gcd machinery over Q[x]: content/primitive splitting, monic gcd via
 * primitive-part Euclid, Yun squarefree decomposition, gcd-free (coprime)
 * bases, and exact exponent extraction.
 *
 * The gcd-free basis replaces irreducible factorization: a squarefree basis
 * element of degree d stands for d distinct complex roots sharing one block
 * pattern, which is all the downstream invariant extraction ever needs.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "jk/poly.hpp"
#include "jk/rational.hpp"

namespace jk {

/**
 * Splits f = c * p where p has coprime integer coefficients and positive
 * leading coefficient. Errors on the zero polynomial.
 */
inline std::pair<Rational, UniPoly> content_primitive(const UniPoly& f) {
  if (f.is_zero()) {
    throw InputError("content_primitive: zero polynomial");
  }
  Integer num_gcd(0);
  Integer den_lcm(1);
  for (const Rational& coeff : f.coeffs()) {
    if (coeff == 0) {
      continue;
    }
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            coeff.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (f.leading_coeff() < 0) {
    content = -content;
  }
  const Rational inv = 1 / content;
  return {content, inv * f};
}

/** Primitive part with positive leading coefficient. */
inline UniPoly primitive_part(const UniPoly& f) {
  return content_primitive(f).second;
}

/**
 * Monic gcd. gcd(0,0) = 0 and gcd(f,0) is the monic normalization of f.
 * Primitive-part Euclid: the remainder is reduced to its primitive part at
 * every step, which keeps coefficient growth polynomial.
 */
inline UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) {
    return UniPoly();
  }
  if (f.is_zero()) {
    return g.monic();
  }
  if (g.is_zero()) {
    return f.monic();
  }
  UniPoly a = primitive_part(f);
  UniPoly b = primitive_part(g);
  if (a.degree() < b.degree()) {
    std::swap(a, b);
  }
  while (!b.is_zero()) {
    UniPoly rem = UniPoly::divmod(a, b).second;
    a = std::move(b);
    b = rem.is_zero() ? UniPoly() : primitive_part(rem);
  }
  return a.monic();
}

/**
 * Yun squarefree decomposition: f = c * prod g_i^{e_i} with the g_i monic,
 * squarefree, pairwise coprime and nonconstant, and the e_i strictly
 * increasing; c = leading coefficient of f. Errors on the zero polynomial;
 * a nonzero constant decomposes into the empty product.
 */
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(
    const UniPoly& f) {
  if (f.is_zero()) {
    throw InputError("squarefree_decomposition: zero polynomial");
  }
  std::vector<std::pair<UniPoly, int>> factors;
  if (f.is_constant()) {
    return factors;
  }
  const UniPoly fm = f.monic();
  const UniPoly fd = fm.derivative();
  const UniPoly g = poly_gcd(fm, fd);
  if (g.is_constant()) {
    factors.emplace_back(fm, 1);
    return factors;
  }
  UniPoly w = fm / g;
  UniPoly y = fd / g;
  UniPoly z = y - w.derivative();
  int multiplicity = 1;
  while (!w.is_constant()) {
    const UniPoly part = poly_gcd(w, z);
    if (!part.is_constant()) {
      factors.emplace_back(part, multiplicity);
    }
    w = w / part;
    y = z / part;
    z = y - w.derivative();
    ++multiplicity;
  }
  return factors;
}

/**
 * Gcd-free basis: pairwise-coprime squarefree monic nonconstant polynomials
 * b_1..b_s such that every input is, up to a constant, a product of powers
 * of the b_j, and every b_j divides at least one input. Inputs must be
 * nonzero (error otherwise); constants contribute nothing.
 *
 * Each input is first split into its squarefree (Yun) factors, which are
 * grouped by multiplicity; refining the basis with those factors — rather
 * than with the plain squarefree part — is what makes the power-product
 * reconstruction property hold for non-squarefree inputs.
 */
inline std::vector<UniPoly> gcd_free_basis(const std::vector<UniPoly>& inputs) {
  std::vector<UniPoly> basis;
  const auto refine_with = [&basis](const UniPoly& factor) {
    // factor: squarefree, monic. Split it against every current basis
    // element; whatever survives all splits enters the basis whole.
    std::vector<UniPoly> next;
    next.reserve(basis.size() + 2);
    UniPoly rem = factor;
    for (const UniPoly& b : basis) {
      if (rem.is_constant()) {
        next.push_back(b);
        continue;
      }
      const UniPoly common = poly_gcd(rem, b);
      if (common.is_constant()) {
        next.push_back(b);
        continue;
      }
      const UniPoly b_only = b / common;
      if (!b_only.is_constant()) {
        next.push_back(b_only.monic());
      }
      next.push_back(common);
      rem = rem / common;
    }
    if (!rem.is_constant()) {
      next.push_back(rem.monic());
    }
    basis = std::move(next);
  };

  for (const UniPoly& input : inputs) {
    if (input.is_zero()) {
      throw InputError("gcd_free_basis: zero polynomial");
    }
    for (const auto& [factor, multiplicity] :
         squarefree_decomposition(input)) {
      (void)multiplicity;
      refine_with(factor);
    }
  }
  return basis;
}

/**
 * Largest e with b^e dividing f; 0 when b does not divide f. b must be
 * nonconstant and f nonzero.
 */
inline int exponent_of(const UniPoly& f, const UniPoly& b) {
  if (b.is_constant()) {
    throw InputError("exponent_of: constant divisor");
  }
  if (f.is_zero()) {
    throw InputError("exponent_of: zero polynomial");
  }
  int exponent = 0;
  UniPoly current = f;
  while (true) {
    auto [quot, rem] = UniPoly::divmod(current, b);
    if (!rem.is_zero()) {
      return exponent;
    }
    ++exponent;
    current = std::move(quot);
    if (current.is_zero()) {
      throw InternalError("exponent_of: divisor chain did not terminate");
    }
  }
}

}  // namespace jk

#endif  // JK_POLY_GCD_HPP
