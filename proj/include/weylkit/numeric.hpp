#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigInt& n);
std::string to_decimal(const Rational& q);
BigInt parse_decimal(const std::string& text);

BigInt factorial(std::int64_t n);
// Zero when k < 0 or k > n; n must be nonnegative.
BigInt binomial(const BigInt& n, const BigInt& k);
BigInt power(const BigInt& base, std::uint64_t exponent);

bool is_prime(std::uint64_t n);

bool is_integer(const Rational& q);
BigInt to_integer(const Rational& q);  // throws InvariantViolation if q is not integral

}  // namespace weylkit
