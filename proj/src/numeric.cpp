#include "weylkit/numeric.hpp"

#include <cctype>

#include "weylkit/errors.hpp"

namespace weylkit {

std::string to_decimal(const BigInt& n) { return n.str(); }

std::string to_decimal(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BigInt parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw ValidationError("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ValidationError("not a decimal integer: '" + text + "'");
    }
  }
  BigInt value(text.substr(start));
  return text[0] == '-' ? BigInt(-value) : value;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw ValidationError("factorial of a negative number");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (n < 0) throw ValidationError("binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  BigInt kk = (k > n - k) ? BigInt(n - k) : k;
  BigInt result = 1;
  for (BigInt i = 1; i <= kk; ++i) {
    result = result * (n - kk + i) / i;
  }
  return result;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

BigInt to_integer(const Rational& q) {
  if (!is_integer(q)) fail_invariant("expected an integer, got " + to_decimal(q));
  return numerator(q);
}

}  // namespace weylkit
