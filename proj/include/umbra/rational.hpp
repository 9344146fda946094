#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace umbra {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "p", "-p", "p/q" (q > 0 after sign handling). Result is canonical.
/// Throws ParseError with line 1 and the column of the offending character.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
double to_double(const Rational& value);
inline Complex to_complex(const Rational& value) { return {to_double(value), 0.0}; }

/// num/den in canonical form; den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);

/// value^exponent; a negative exponent requires value != 0.
Rational pow(const Rational& value, long exponent);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// n (n-1) ... (n-k+1)
Integer falling_factorial(unsigned n, unsigned k);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace umbra
