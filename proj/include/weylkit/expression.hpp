#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "weylkit/characteristic.hpp"
#include "weylkit/numeric.hpp"

namespace weylkit {

struct ExprEnv {
  BigInt l;
  std::optional<BigInt> j;
  Characteristic p = Characteristic::generic();
};

// Small arithmetic/boolean language for rank-parametrized formulas:
//   numbers, variables l, j, p, operators + - * / ^, comparisons, and/or/not,
//   functions binom(n, k), fact(n), eps(m), divides(a, b).
// At generic characteristic p behaves like an arbitrarily large prime: it
// divides nothing but zero, compares greater than every number and eps(m) = 0.
class Expression {
 public:
  static Expression parse(std::string_view text);

  Rational evaluate(const ExprEnv& env) const;
  BigInt evaluate_integer(const ExprEnv& env) const;
  bool holds(const ExprEnv& env) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace weylkit
