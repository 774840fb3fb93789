#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace digitsum {

/// Arbitrary-precision signed integer (GMP-backed).
using Integer = mpz_class;

/// Arbitrary-precision nonnegative integer. Same representation as Integer;
/// operations taking a Natural validate nonnegativity at the API boundary.
using Natural = mpz_class;

/// Arbitrary-precision rational, kept in canonical lowest terms with a
/// positive denominator. Always construct through make_rational() or GMP
/// arithmetic (both canonicalize); never set num/den fields directly.
using Rational = mpq_class;

/// A positional number base. Valid bases are >= 2; the constructor rejects
/// anything smaller, so holding a Base is proof of validity.
class Base {
 public:
  explicit Base(int b) : value_(b) {
    if (b < 2) {
      throw std::invalid_argument("base must be >= 2, got " +
                                  std::to_string(b));
    }
  }

  int value() const noexcept { return value_; }

 private:
  int value_;
};

/// num/den reduced to lowest terms, denominator made positive.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// base^exp as an Integer.
inline Integer integer_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

namespace detail {

inline void require_nonnegative(const Integer& n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) +
                                " requires a nonnegative argument");
  }
}

}  // namespace detail

}  // namespace digitsum
