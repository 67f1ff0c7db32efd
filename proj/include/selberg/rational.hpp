#ifndef SELBERG_RATIONAL_HPP
#define SELBERG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "selberg/errors.hpp"

namespace selberg {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator after every operation, which is exactly the normalization
/// contract the rest of the library relies on for equality tests.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den as a canonical Rational (den may be negative; sign is normalized).
Rational rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (decimal integer strings). Throws
/// std::invalid_argument on anything else, including floating-point forms.
Rational rational_from_string(const std::string& text);

/// "p/q" with the denominator always spelled out ("1" serializes as "1/1").
std::string fraction_string(const Rational& q);

/// base^exp for integer exp; negative exp requires base != 0.
Rational pow_rational(const Rational& base, long exp);

/// Shifted factorial (x; tau)_count = x (x+tau) ... (x+(count-1) tau), with
/// (x; tau)_0 = 1. Negative count uses the reflected extension
/// 1 / ((x-tau)(x-2 tau)...(x+count tau)) and throws ParameterSingular when a
/// reflected factor vanishes.
Rational poch(const Rational& x, const Rational& tau, long count);

/// Exact binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
Rational binomial(long n, long k);

} // namespace selberg

#endif
