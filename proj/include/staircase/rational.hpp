#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace staircase {

using BigInt = mpz_class;
// gmpxx keeps mpq_class canonical (positive denominator, reduced) as long as
// values are built through its arithmetic; parse_rational canonicalizes input.
using BigRational = mpq_class;

// Accepts "p", "p/q" and a leading sign. No whitespace, no decimals.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

// value^exponent for any integer exponent; throws DegeneracyError on 0^negative.
BigRational pow(const BigRational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

} // namespace staircase
