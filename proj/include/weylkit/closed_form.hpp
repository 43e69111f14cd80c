#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/cartan.hpp"
#include "weylkit/characteristic.hpp"
#include "weylkit/expression.hpp"

namespace weylkit {

// "0" or a sum of terms "k*w[index]" where index is an expression in l and j,
// e.g. "w[1] + 2*w[l]" or "w[l+1-j] + w[l]".
class WeightPattern {
 public:
  static WeightPattern parse(std::string_view text);

  // nullopt when an index falls outside 1..rank.
  std::optional<Weight> instantiate(int rank, const ExprEnv& env) const;
  const std::string& text() const { return text_; }

 private:
  struct Term {
    BigInt coefficient;
    Expression index;
  };
  std::vector<Term> terms_;
  std::string text_;
};

enum class FormulaStatus { Proven, Conjectural, Disputed };

std::string to_string(FormulaStatus status);
FormulaStatus parse_formula_status(std::string_view text);

struct FormulaBranch {
  Expression condition;
  Expression value;
};

struct ParameterRange {
  std::string name;  // only "j" is supported
  Expression from;
  Expression to;
};

struct FormulaEntry {
  std::string id;
  Family family;
  int min_rank = 1;
  std::vector<WeightPattern> patterns;
  std::optional<ParameterRange> parameter;
  std::vector<FormulaBranch> branches;
  FormulaStatus status = FormulaStatus::Proven;
  std::string citation;
  std::string note;

  // Environment binding l (and j) if lambda matches one of the patterns.
  std::optional<ExprEnv> match(const LieType& t, const Weight& lambda, Characteristic p) const;
};

struct ClosedDimension {
  std::optional<BigInt> value;  // nullopt means "unknown"
  FormulaStatus status = FormulaStatus::Proven;
  std::string formula_id;
  std::string condition;
  std::string expression;
  std::string citation;
  std::string note;

  bool known() const { return value.has_value(); }
};

class FormulaRegistry {
 public:
  static const FormulaRegistry& builtin();
  static FormulaRegistry from_json(std::string_view json_text);
  static FormulaRegistry load(const std::filesystem::path& path);

  const std::vector<FormulaEntry>& entries() const { return entries_; }
  const FormulaEntry* find(std::string_view id) const;

  // First matching entry whose first satisfied branch gives the value; for a
  // specific p and a non-restricted weight the Steinberg factors are combined.
  ClosedDimension evaluate(const LieType& t, const Weight& lambda, Characteristic p) const;

 private:
  ClosedDimension evaluate_restricted(const LieType& t, const Weight& lambda, Characteristic p) const;
  std::vector<FormulaEntry> entries_;
};

int epsilon_p(std::uint64_t p, const BigInt& m);

ClosedDimension dim_closed(const LieType& t, const Weight& lambda, Characteristic p,
                           const FormulaRegistry& registry = FormulaRegistry::builtin());

// Base-p digits of lambda: lambda = sum_k p^k digits[k], each digit p-restricted.
std::vector<Weight> steinberg_decompose(const Weight& lambda, std::uint64_t p);

}  // namespace weylkit
