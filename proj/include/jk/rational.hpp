#ifndef JK_RATIONAL_HPP
#define JK_RATIONAL_HPP

/**
 * Exact arbitrary-precision rational scalars.
 *
 * Rational is GMP's mpq_class: numerator and denominator are arbitrary
 * precision integers kept in canonical reduced form (gcd(|num|, den) = 1,
 * den > 0, zero is 0/1). GMP maintains that invariant through every
 * arithmetic operation, which is exactly the representation contract the
 * rest of the library relies on.
 *
 * The helpers here add the one thing GMP does not police: parsing of
 * untrusted "p/q" strings (wire format for all JSON payloads) with strict
 * syntax and zero-denominator checks.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jk {

using Rational = mpq_class;
using Integer = mpz_class;

/** Raised for malformed user input (files, CLI arguments, JSON fields). */
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/** Raised when an internal consistency check fails: always a bug, never bad
 * input. */
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/**
 * Parses "p" or "p/q" (optional leading '-' on p; q positive decimal).
 * The result is canonicalized. Rejects empty strings, stray characters,
 * and zero denominators.
 */
inline Rational rational_from_string(const std::string& text) {
  if (text.empty()) {
    throw InputError("rational: empty string");
  }
  // Strict syntax check before handing to GMP: GMP's own parser is lenient
  // about whitespace and bases, which we do not want on a wire format.
  const auto slash = text.find('/');
  const auto check_decimal = [&](std::size_t begin, std::size_t end,
                                 bool allow_sign) {
    if (begin >= end) {
      throw InputError("rational: malformed value '" + text + "'");
    }
    std::size_t i = begin;
    if (allow_sign && (text[i] == '-' || text[i] == '+')) {
      ++i;
    }
    if (i >= end) {
      throw InputError("rational: malformed value '" + text + "'");
    }
    for (; i < end; ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw InputError("rational: malformed value '" + text + "'");
      }
    }
  };
  if (slash == std::string::npos) {
    check_decimal(0, text.size(), /*allow_sign=*/true);
  } else {
    check_decimal(0, slash, /*allow_sign=*/true);
    check_decimal(slash + 1, text.size(), /*allow_sign=*/false);
  }

  Rational value;
  if (value.set_str(text, 10) != 0) {
    throw InputError("rational: malformed value '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw InputError("rational: zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return value;
}

/** Serializes in canonical wire form: "p/q", or "p" when the denominator is
 * one. */
inline std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

/** Convenience constructor from an integer pair; canonicalizes. */
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) {
    throw InputError("rational: zero denominator");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

/** Bit size of a rational: numerator bits plus denominator bits. Used as a
 * deterministic pivot-cost heuristic in elimination routines. */
inline std::size_t rational_bit_size(const Rational& value) {
  return mpz_sizeinbase(value.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(value.get_den().get_mpz_t(), 2);
}

}  // namespace jk

#endif  // JK_RATIONAL_HPP
