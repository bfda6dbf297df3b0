#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zetaforge {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
/// mpq_class keeps that canonical form through every arithmetic operation;
/// construction from a raw numerator/denominator pair must go through
/// make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// "-935/8", "108", "0". Integers carry no "/1" suffix.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

/// Inverse of to_string. Accepts an optional leading sign and an optional
/// "/den" part; throws std::invalid_argument on anything else.
BigRational parse_rational(std::string_view text);

BigInt ipow(const BigInt& base, unsigned long e);
BigRational ipow(const BigRational& base, unsigned long e);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

}  // namespace zetaforge
