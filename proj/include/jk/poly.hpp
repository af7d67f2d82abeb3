#ifndef JK_POLY_HPP
#define JK_POLY_HPP

/**
 * Dense univariate polynomials over the exact rationals.
 *
 * Coefficient storage is index-by-degree (constant term first, matching the
 * wire format). The representation invariant is that the leading coefficient
 * is nonzero; the zero polynomial is the empty coefficient sequence and has
 * degree -1. All arithmetic is exact.
 */

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "jk/rational.hpp"

namespace jk {

class UniPoly {
 public:
  /** Zero polynomial. */
  UniPoly() = default;

  /** Constant polynomial; lets UniPoly model the generic scalar interface
   * (T(0), T(1)) expected by Matrix. */
  explicit UniPoly(long value) {
    if (value != 0) {
      m_coeffs.emplace_back(value);
    }
  }

  /** From a coefficient sequence, constant term first; trims trailing
   * zeros. */
  explicit UniPoly(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(const Rational& value) {
    return UniPoly(std::vector<Rational>{value});
  }

  /** The monomial x. */
  static UniPoly variable() {
    return UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
  }

  /** Convenience builder from integer coefficients, constant term first. */
  static UniPoly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) {
      c.emplace_back(v);
    }
    return UniPoly(std::move(c));
  }

  /** Degree; -1 for the zero polynomial. */
  int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }

  bool is_zero() const { return m_coeffs.empty(); }
  bool is_constant() const { return m_coeffs.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return m_coeffs; }

  /** Coefficient of x^k (zero beyond the degree). */
  Rational coeff(std::size_t k) const {
    return k < m_coeffs.size() ? m_coeffs[k] : Rational(0);
  }

  const Rational& leading_coeff() const {
    if (is_zero()) {
      throw InternalError("poly: leading coefficient of zero polynomial");
    }
    return m_coeffs.back();
  }

  /** Index of the lowest nonzero coefficient; -1 for the zero polynomial. */
  int valuation() const {
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
      if (m_coeffs[k] != 0) {
        return static_cast<int>(k);
      }
    }
    return -1;
  }

  UniPoly operator-() const {
    std::vector<Rational> c(m_coeffs);
    for (Rational& v : c) {
      v = -v;
    }
    return UniPoly(std::move(c));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.m_coeffs.size(), b.m_coeffs.size()),
                            Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] = a.coeff(k) + b.coeff(k);
    }
    return UniPoly(std::move(c));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
  }

  UniPoly& operator+=(const UniPoly& other) {
    *this = *this + other;
    return *this;
  }

  UniPoly& operator-=(const UniPoly& other) {
    *this = *this - other;
    return *this;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) {
      return UniPoly();
    }
    std::vector<Rational> c(a.m_coeffs.size() + b.m_coeffs.size() - 1,
                            Rational(0));
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
      if (a.m_coeffs[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
        c[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
      }
    }
    return UniPoly(std::move(c));
  }

  friend UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> c(p.m_coeffs);
    for (Rational& v : c) {
      v *= s;
    }
    return UniPoly(std::move(c));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.m_coeffs == b.m_coeffs;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  Rational evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = m_coeffs.size(); k-- > 0;) {
      acc = acc * x + m_coeffs[k];
    }
    return acc;
  }

  UniPoly derivative() const {
    if (m_coeffs.size() <= 1) {
      return UniPoly();
    }
    std::vector<Rational> c(m_coeffs.size() - 1);
    for (std::size_t k = 1; k < m_coeffs.size(); ++k) {
      c[k - 1] = Rational(static_cast<long>(k)) * m_coeffs[k];
    }
    return UniPoly(std::move(c));
  }

  /** Quotient and remainder of the field division a = q*b + r,
   * deg r < deg b. */
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a,
                                            const UniPoly& b) {
    if (b.is_zero()) {
      throw InternalError("poly: division by zero polynomial");
    }
    if (a.degree() < b.degree()) {
      return {UniPoly(), a};
    }
    std::vector<Rational> rem(a.m_coeffs);
    std::vector<Rational> quot(
        static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lead = b.leading_coeff();
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Rational factor = rem[k + b.degree()] / lead;
      quot[k] = factor;
      if (factor == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
        rem[k + j] -= factor * b.m_coeffs[j];
      }
    }
    rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  /** Exact quotient; the division must leave no remainder. */
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) {
      throw InternalError("poly: inexact division");
    }
    return quot;
  }

  /** Scales to leading coefficient one (zero polynomial stays zero). */
  UniPoly monic() const {
    if (is_zero()) {
      return UniPoly();
    }
    Rational inv_lead = 1 / leading_coeff();
    return inv_lead * *this;
  }

  /**
   * Degree-k reversal x^k * p(1/x); requires deg p <= k. Maps the pencil
   * parameter swap used for the structure at infinity.
   */
  UniPoly reversed(std::size_t k) const {
    if (degree() > static_cast<int>(k)) {
      throw InternalError("poly: reversal order below degree");
    }
    std::vector<Rational> c(k + 1, Rational(0));
    for (std::size_t j = 0; j < m_coeffs.size(); ++j) {
      c[k - j] = m_coeffs[j];
    }
    return UniPoly(std::move(c));
  }

  /** Largest total coefficient bit size; deterministic pivot-cost
   * heuristic. */
  std::size_t max_coeff_bit_size() const {
    std::size_t best = 0;
    for (const Rational& v : m_coeffs) {
      best = std::max(best, rational_bit_size(v));
    }
    return best;
  }

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) {
      return os << "0";
    }
    bool first = true;
    for (std::size_t k = p.m_coeffs.size(); k-- > 0;) {
      if (p.m_coeffs[k] == 0) {
        continue;
      }
      if (!first) {
        os << " + ";
      }
      first = false;
      if (k == 0 || p.m_coeffs[k] != 1) {
        os << rational_to_string(p.m_coeffs[k]);
        if (k > 0) {
          os << "*";
        }
      }
      if (k == 1) {
        os << "x";
      } else if (k > 1) {
        os << "x^" << k;
      }
    }
    return os;
  }

 private:
  void trim() {
    while (!m_coeffs.empty() && m_coeffs.back() == 0) {
      m_coeffs.pop_back();
    }
  }

  std::vector<Rational> m_coeffs;
};

/**
 * Deterministic total order: by degree, then lexicographically on the
 * coefficient sequence, constant term first. Used to fix eigenvalue-class
 * order in reports.
 */
inline bool poly_lex_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) {
    return a.degree() < b.degree();
  }
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeff(k) != b.coeff(k)) {
      return a.coeff(k) < b.coeff(k);
    }
  }
  return false;
}

}  // namespace jk

#endif  // JK_POLY_HPP
