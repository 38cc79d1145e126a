#ifndef CHOWCERT_RATIONAL_HPP
#define CHOWCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chowcert {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p", or "p/q" (q != 0) into a canonical rational.
Rat parse_rational(const std::string& text);

// Renders a rational as "p" or "p/q" with q > 1.
std::string rational_to_string(const Rat& value);

Int parse_integer(const std::string& text);

// Canonical fraction from possibly non-coprime parts; the raw two-argument
// rational constructor must not be used with computed values.
Rat frac(const Int& numerator, const Int& denominator);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// base^exp for non-negative integer exponents.
Int ipow(const Int& base, unsigned long exp);
Rat qpow(const Rat& base, unsigned long exp);

// Exponent of `prime` in the factorization of a nonzero integer.
long ord_at(const Int& prime, const Int& value);

// Ascending distinct prime factors of |value|, value != 0.
std::vector<Int> prime_factors(const Int& value);

bool is_prime(const Int& value);

} // namespace chowcert

#endif
