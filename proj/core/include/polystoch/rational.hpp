#ifndef POLYSTOCH_RATIONAL_HPP
#define POLYSTOCH_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace polystoch {

/// Arbitrary-precision integer (GMP-backed).
using BigInt = boost::multiprecision::mpz_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator; zero is 0/1. GMP canonicalizes on every operation.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p" or "p/q" with decimal p, q and optional leading '-' on p.
/// The value is reduced to lowest terms. Throws ParseError on anything
/// else (empty token, q == 0, signs on q, stray characters).
Rational parse_rational(std::string_view token);

/// Canonical token: "p" when the denominator is 1, otherwise "p/q"
/// in lowest terms with q > 0.
std::string to_token(const Rational& value);

} // namespace polystoch

#endif
