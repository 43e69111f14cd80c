#include "weylkit/closed_form.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "weylkit/errors.hpp"

namespace weylkit {

namespace embedded {
extern const std::string_view formulas_json;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

WeightPattern WeightPattern::parse(std::string_view text) {
  WeightPattern pattern;
  pattern.text_ = trim(text);
  if (pattern.text_ == "0") return pattern;
  auto fail = [&](const std::string& what) -> void {
    throw ValidationError("weight pattern '" + pattern.text_ + "': " + what);
  };
  std::vector<std::string> pieces;
  int depth = 0;
  std::string current;
  for (char c : pattern.text_) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == '+' && depth == 0) {
      pieces.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  pieces.push_back(trim(current));
  for (const auto& piece : pieces) {
    BigInt coefficient = 1;
    std::string rest = piece;
    if (auto star = piece.find('*'); star != std::string::npos) {
      coefficient = parse_decimal(trim(piece.substr(0, star)));
      rest = trim(piece.substr(star + 1));
    }
    if (rest.size() < 4 || rest.rfind("w[", 0) != 0 || rest.back() != ']') fail("expected k*w[index] terms");
    if (coefficient < 1) fail("coefficients must be positive");
    pattern.terms_.push_back({coefficient, Expression::parse(rest.substr(2, rest.size() - 3))});
  }
  return pattern;
}

std::optional<Weight> WeightPattern::instantiate(int rank, const ExprEnv& env) const {
  Weight w = Weight::zero(rank);
  for (const auto& term : terms_) {
    BigInt index = term.index.evaluate_integer(env);
    if (index < 1 || index > rank) return std::nullopt;
    w[static_cast<std::size_t>(index - 1)] += term.coefficient;
  }
  return w;
}

std::string to_string(FormulaStatus status) {
  switch (status) {
    case FormulaStatus::Proven: return "proven";
    case FormulaStatus::Conjectural: return "conjectural";
    case FormulaStatus::Disputed: return "disputed";
  }
  return "?";
}

FormulaStatus parse_formula_status(std::string_view text) {
  if (text == "proven") return FormulaStatus::Proven;
  if (text == "conjectural") return FormulaStatus::Conjectural;
  if (text == "disputed") return FormulaStatus::Disputed;
  throw ValidationError("unknown formula status '" + std::string(text) + "'");
}

std::optional<ExprEnv> FormulaEntry::match(const LieType& t, const Weight& lambda, Characteristic p) const {
  if (t.family() != family || t.rank() < min_rank) return std::nullopt;
  ExprEnv env{BigInt(t.rank()), std::nullopt, p};
  auto try_patterns = [&](const ExprEnv& e) {
    for (const auto& pattern : patterns) {
      if (auto w = pattern.instantiate(t.rank(), e); w && *w == lambda) return true;
    }
    return false;
  };
  if (!parameter) {
    if (try_patterns(env)) return env;
    return std::nullopt;
  }
  const BigInt from = parameter->from.evaluate_integer(env);
  const BigInt to = parameter->to.evaluate_integer(env);
  for (BigInt j = from; j <= to; ++j) {
    env.j = j;
    if (try_patterns(env)) return env;
  }
  return std::nullopt;
}

FormulaRegistry FormulaRegistry::from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("formula registry is not valid JSON: ") + e.what());
  }
  FormulaRegistry registry;
  std::set<std::string> ids;
  try {
    if (doc.at("schema_version").get<int>() != 1) throw ValidationError("unsupported formula registry schema_version");
    for (const auto& item : doc.at("formulas")) {
      FormulaEntry entry;
      entry.id = item.at("id").get<std::string>();
      if (!ids.insert(entry.id).second) throw ValidationError("duplicate formula id '" + entry.id + "'");
      entry.family = parse_family(item.at("family").get<std::string>());
      entry.min_rank = item.value("min_rank", minimum_rank(entry.family));
      const auto& patterns = item.at("weight_pattern");
      if (patterns.is_string()) {
        entry.patterns.push_back(WeightPattern::parse(patterns.get<std::string>()));
      } else {
        for (const auto& p : patterns) entry.patterns.push_back(WeightPattern::parse(p.get<std::string>()));
      }
      if (item.contains("parameter")) {
        const auto& param = item.at("parameter");
        ParameterRange range{param.at("name").get<std::string>(), Expression::parse(param.at("from").get<std::string>()),
                             Expression::parse(param.at("to").get<std::string>())};
        if (range.name != "j") throw ValidationError("formula '" + entry.id + "': only the parameter j is supported");
        entry.parameter = std::move(range);
      }
      for (const auto& branch : item.at("branches")) {
        entry.branches.push_back({Expression::parse(branch.value("condition", std::string("true"))),
                                  Expression::parse(branch.at("expression").get<std::string>())});
      }
      if (entry.branches.empty()) throw ValidationError("formula '" + entry.id + "' has no branches");
      entry.status = parse_formula_status(item.at("status").get<std::string>());
      entry.citation = item.at("citation").get<std::string>();
      entry.note = item.value("note", std::string());
      registry.entries_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed formula registry: ") + e.what());
  }
  return registry;
}

FormulaRegistry FormulaRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read formula registry " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

const FormulaRegistry& FormulaRegistry::builtin() {
  static const FormulaRegistry registry = from_json(embedded::formulas_json);
  return registry;
}

const FormulaEntry* FormulaRegistry::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

ClosedDimension FormulaRegistry::evaluate_restricted(const LieType& t, const Weight& lambda, Characteristic p) const {
  for (const auto& entry : entries_) {
    auto env = entry.match(t, lambda, p);
    if (!env) continue;
    for (const auto& branch : entry.branches) {
      if (!branch.condition.holds(*env)) continue;
      ClosedDimension out;
      out.value = branch.value.evaluate_integer(*env);
      out.status = entry.status;
      out.formula_id = entry.id;
      out.condition = branch.condition.text();
      out.expression = branch.value.text();
      out.citation = entry.citation;
      out.note = entry.note;
      return out;
    }
  }
  return {};
}

ClosedDimension FormulaRegistry::evaluate(const LieType& t, const Weight& lambda, Characteristic p) const {
  if (lambda.rank() != t.rank()) throw ValidationError("weight rank does not match " + t.name());
  if (!lambda.is_dominant()) throw ValidationError("closed-form dimensions need a dominant weight");
  if (p.is_generic() || lambda.is_p_restricted(p.value())) return evaluate_restricted(t, lambda, p);

  ClosedDimension out;
  BigInt product = 1;
  std::string ids;
  for (const auto& digit : steinberg_decompose(lambda, p.value())) {
    ClosedDimension factor = evaluate_restricted(t, digit, p);
    if (!factor.known()) return {};
    product *= *factor.value;
    if (static_cast<int>(factor.status) > static_cast<int>(out.status)) out.status = factor.status;
    ids += (ids.empty() ? "" : " x ") + factor.formula_id;
  }
  out.value = product;
  out.formula_id = "steinberg(" + ids + ")";
  out.citation = "twisted tensor product of the base-p digits";
  return out;
}

int epsilon_p(std::uint64_t p, const BigInt& m) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (m < 1) throw ValidationError("epsilon_p needs m >= 1");
  return m % p == 0 ? 1 : 0;
}

ClosedDimension dim_closed(const LieType& t, const Weight& lambda, Characteristic p, const FormulaRegistry& registry) {
  return registry.evaluate(t, lambda, p);
}

std::vector<Weight> steinberg_decompose(const Weight& lambda, std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (!lambda.is_dominant()) throw ValidationError("Steinberg decomposition needs a dominant weight");
  std::vector<Weight> digits;
  Weight rest = lambda;
  do {
    Weight digit = Weight::zero(lambda.rank());
    for (std::size_t i = 0; i < rest.coeffs().size(); ++i) {
      digit[i] = rest[i] % p;
      rest[i] /= p;
    }
    digits.push_back(std::move(digit));
  } while (!rest.is_zero());
  return digits;
}

}  // namespace weylkit
