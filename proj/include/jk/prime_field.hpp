#ifndef JK_PRIME_FIELD_HPP
#define JK_PRIME_FIELD_HPP

/**
 * Word-size prime-field arithmetic GF(p).
 *
 * Advisory fast path only: modular ranks computed here are used to size or
 * skip exact computations (a modular rank never exceeds the exact rank), and
 * every reported result comes from exact rational arithmetic. The default
 * modulus is the largest prime below 2^63; primality is verified once at
 * field construction with a deterministic Miller-Rabin test, so a
 * misconfigured modulus fails fast instead of corrupting advice.
 */

#include <cstdint>
#include <stdexcept>

#include "jk/rational.hpp"

namespace jk {

/** Largest prime below 2^63. */
inline constexpr std::uint64_t kDefaultPrime = 9223372036854775783ULL;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) {
      result = mulmod_u64(result, base, p);
    }
    base = mulmod_u64(base, base, p);
    exp >>= 1U;
  }
  return result;
}

/** Deterministic Miller-Rabin for 64-bit integers: the witness set
 * {2,3,5,7,11,13,17,19,23,29,31,37} decides primality for all n < 2^64. */
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                              19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) {
      return n == small;
    }
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/**
 * A fixed prime field. Elements are plain uint64 values in [0, p); all
 * operations go through the owning field object.
 */
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime) : m_p(p) {
    if (!detail::is_prime_u64(p)) {
      throw InternalError("prime field: modulus is not prime");
    }
  }

  std::uint64_t modulus() const { return m_p; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return (s >= m_p || s < a) ? s - m_p : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : m_p - (b - a);
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : m_p - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return detail::mulmod_u64(a, b, m_p);
  }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const {
    return detail::powmod_u64(base, exp, m_p);
  }

  /** Multiplicative inverse; a must be nonzero mod p. */
  std::uint64_t inv(std::uint64_t a) const {
    if (a % m_p == 0) {
      throw InternalError("prime field: inverse of zero");
    }
    return pow(a % m_p, m_p - 2);
  }

  std::uint64_t div(std::uint64_t a, std::uint64_t b) const {
    return mul(a % m_p, inv(b));
  }

  /** Reduces an arbitrary-precision integer into [0, p). */
  std::uint64_t from_integer(const Integer& value) const {
    const Integer modulus_big(static_cast<unsigned long>(m_p));
    Integer reduced = value % modulus_big;
    if (reduced < 0) {
      reduced += modulus_big;
    }
    return static_cast<std::uint64_t>(mpz_get_ui(reduced.get_mpz_t()));
  }

  /**
   * Reduces a rational mod p. Returns false (an "unlucky prime" signal, the
   * caller falls back to exact arithmetic) when the denominator vanishes
   * mod p.
   */
  bool from_rational(const Rational& value, std::uint64_t& out) const {
    const std::uint64_t den = from_integer(value.get_den());
    if (den == 0) {
      return false;
    }
    const std::uint64_t num = from_integer(value.get_num());
    out = div(num, den);
    return true;
  }

 private:
  std::uint64_t m_p;
};

}  // namespace jk

#endif  // JK_PRIME_FIELD_HPP
