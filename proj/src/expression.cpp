#include "weylkit/expression.hpp"

#include <cctype>
#include <functional>
#include <vector>

#include "weylkit/characteristic.hpp"
#include "weylkit/errors.hpp"

namespace weylkit {

Characteristic Characteristic::prime(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  Characteristic c;
  c.p_ = p;
  return c;
}

Characteristic Characteristic::parse(std::string_view text) {
  if (text == "generic" || text == "0") return generic();
  std::uint64_t value = 0;
  if (text.empty() || text.size() > 18) throw ValidationError("bad characteristic '" + std::string(text) + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("bad characteristic '" + std::string(text) + "' (expected a prime or 'generic')");
    }
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return prime(value);
}

std::uint64_t Characteristic::value() const {
  if (!p_) throw ValidationError("generic characteristic has no numeric value");
  return *p_;
}

std::string Characteristic::to_string() const { return p_ ? std::to_string(*p_) : "generic"; }

struct Expression::Node {
  enum class Kind { Number, Boolean, Variable, Unary, Binary, Call };
  Kind kind;
  Rational number;
  bool boolean = false;
  std::string name;  // variable, operator or function
  std::vector<std::shared_ptr<const Node>> children;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

struct Value {
  enum class Type { Number, Boolean, Infinite } type;
  Rational number;
  bool boolean = false;
};

Value number(Rational q) { return {Value::Type::Number, std::move(q), false}; }
Value boolean(bool b) { return {Value::Type::Boolean, 0, b}; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  NodePtr parse() {
    NodePtr root = parse_or();
    if (token_ != Token::End) error("unexpected '" + lexeme_ + "'");
    return root;
  }

 private:
  enum class Token { End, Number, Identifier, Operator, LParen, RParen, Comma };

  [[noreturn]] void error(const std::string& what) const {
    throw ValidationError("formula '" + std::string(text_) + "': " + what);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) {
      token_ = Token::End;
      lexeme_.clear();
      return;
    }
    const char c = text_[pos_];
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      token_ = Token::Number;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      token_ = Token::Identifier;
    } else if (c == '(') {
      ++pos_;
      token_ = Token::LParen;
    } else if (c == ')') {
      ++pos_;
      token_ = Token::RParen;
    } else if (c == ',') {
      ++pos_;
      token_ = Token::Comma;
    } else {
      static const char* two[] = {"==", "!=", "<=", ">="};
      token_ = Token::Operator;
      for (const char* op : two) {
        if (text_.substr(pos_, 2) == op) {
          pos_ += 2;
          lexeme_ = op;
          return;
        }
      }
      if (std::string_view("+-*/^<>").find(c) == std::string_view::npos) error(std::string("unexpected character '") + c + "'");
      ++pos_;
    }
    lexeme_ = std::string(text_.substr(start, pos_ - start));
  }

  bool at_operator(std::string_view op) const { return token_ == Token::Operator && lexeme_ == op; }
  bool at_keyword(std::string_view word) const { return token_ == Token::Identifier && lexeme_ == word; }

  static NodePtr make(Kind kind, std::string name, std::vector<NodePtr> children) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = kind;
    n->name = std::move(name);
    n->children = std::move(children);
    return n;
  }

  NodePtr parse_or() {
    NodePtr left = parse_and();
    while (at_keyword("or")) {
      advance();
      left = make(Kind::Binary, "or", {left, parse_and()});
    }
    return left;
  }

  NodePtr parse_and() {
    NodePtr left = parse_not();
    while (at_keyword("and")) {
      advance();
      left = make(Kind::Binary, "and", {left, parse_not()});
    }
    return left;
  }

  NodePtr parse_not() {
    if (at_keyword("not")) {
      advance();
      return make(Kind::Unary, "not", {parse_not()});
    }
    return parse_comparison();
  }

  NodePtr parse_comparison() {
    NodePtr left = parse_sum();
    for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
      if (at_operator(op)) {
        advance();
        return make(Kind::Binary, op, {left, parse_sum()});
      }
    }
    return left;
  }

  NodePtr parse_sum() {
    NodePtr left = parse_product();
    while (at_operator("+") || at_operator("-")) {
      std::string op = lexeme_;
      advance();
      left = make(Kind::Binary, op, {left, parse_product()});
    }
    return left;
  }

  NodePtr parse_product() {
    NodePtr left = parse_unary();
    while (at_operator("*") || at_operator("/")) {
      std::string op = lexeme_;
      advance();
      left = make(Kind::Binary, op, {left, parse_unary()});
    }
    return left;
  }

  NodePtr parse_unary() {
    if (at_operator("-")) {
      advance();
      return make(Kind::Unary, "-", {parse_unary()});
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (at_operator("^")) {
      advance();
      return make(Kind::Binary, "^", {base, parse_unary()});
    }
    return base;
  }

  NodePtr parse_atom() {
    if (token_ == Token::Number) {
      auto n = std::make_shared<Expression::Node>();
      n->kind = Kind::Number;
      n->number = Rational(BigInt(lexeme_));
      advance();
      return n;
    }
    if (token_ == Token::LParen) {
      advance();
      NodePtr inner = parse_or();
      if (token_ != Token::RParen) error("expected ')'");
      advance();
      return inner;
    }
    if (token_ == Token::Identifier) {
      std::string name = lexeme_;
      advance();
      if (name == "true" || name == "false") {
        auto n = std::make_shared<Expression::Node>();
        n->kind = Kind::Boolean;
        n->boolean = name == "true";
        return n;
      }
      if (token_ == Token::LParen) {
        advance();
        std::vector<NodePtr> args;
        if (token_ != Token::RParen) {
          args.push_back(parse_or());
          while (token_ == Token::Comma) {
            advance();
            args.push_back(parse_or());
          }
        }
        if (token_ != Token::RParen) error("expected ')' after arguments of " + name);
        advance();
        static const std::pair<const char*, std::size_t> arities[] = {
            {"binom", 2}, {"fact", 1}, {"eps", 1}, {"divides", 2}};
        bool known = false;
        for (auto [fn, arity] : arities) {
          if (name == fn) {
            known = true;
            if (args.size() != arity) error(name + " takes " + std::to_string(arity) + " argument(s)");
          }
        }
        if (!known) error("unknown function '" + name + "'");
        return make(Kind::Call, name, std::move(args));
      }
      if (name != "l" && name != "j" && name != "p") error("unknown variable '" + name + "'");
      return make(Kind::Variable, name, {});
    }
    error(token_ == Token::End ? "unexpected end of formula" : "unexpected '" + lexeme_ + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token token_ = Token::End;
  std::string lexeme_;
};

class Evaluator {
 public:
  Evaluator(const ExprEnv& env, const std::string& text) : env_(env), text_(text) {}

  Value eval(const Expression::Node& n) const {
    switch (n.kind) {
      case Kind::Number: return number(n.number);
      case Kind::Boolean: return boolean(n.boolean);
      case Kind::Variable: return variable(n.name);
      case Kind::Unary: return unary(n);
      case Kind::Binary: return binary(n);
      case Kind::Call: return call(n);
    }
    error("malformed node");
  }

  Rational as_number(const Value& v) const {
    if (v.type == Value::Type::Infinite) error("p has no numeric value at generic characteristic");
    if (v.type != Value::Type::Number) error("expected a number, found a truth value");
    return v.number;
  }

  bool as_bool(const Value& v) const {
    if (v.type != Value::Type::Boolean) error("expected a truth value");
    return v.boolean;
  }

  [[noreturn]] void error(const std::string& what) const {
    throw ValidationError("formula '" + text_ + "': " + what);
  }

 private:
  BigInt as_integer(const Value& v) const {
    Rational q = as_number(v);
    if (!is_integer(q)) error("expected an integer, got " + to_decimal(q));
    return numerator(q);
  }

  Value variable(const std::string& name) const {
    if (name == "l") return number(Rational(env_.l));
    if (name == "j") {
      if (!env_.j) error("j is not bound here");
      return number(Rational(*env_.j));
    }
    if (env_.p.is_generic()) return {Value::Type::Infinite, 0, false};
    return number(Rational(BigInt(env_.p.value())));
  }

  Value unary(const Expression::Node& n) const {
    Value v = eval(*n.children[0]);
    if (n.name == "not") return boolean(!as_bool(v));
    return number(-as_number(v));
  }

  Value compare(const std::string& op, const Value& a, const Value& b) const {
    const bool ia = a.type == Value::Type::Infinite;
    const bool ib = b.type == Value::Type::Infinite;
    if (ia && ib) error("cannot compare p with itself at generic characteristic");
    if (ia || ib) {
      as_number(ia ? b : a);
      // ordering with an infinite left-hand side
      int sign = ia ? 1 : -1;
      if (op == "==") return boolean(false);
      if (op == "!=") return boolean(true);
      if (op == ">" || op == ">=") return boolean(sign > 0);
      return boolean(sign < 0);
    }
    if (a.type == Value::Type::Boolean || b.type == Value::Type::Boolean) {
      if (op != "==" && op != "!=") error("ordering comparison of truth values");
      bool eq = as_bool(a) == as_bool(b);
      return boolean(op == "==" ? eq : !eq);
    }
    const Rational& x = a.number;
    const Rational& y = b.number;
    if (op == "==") return boolean(x == y);
    if (op == "!=") return boolean(x != y);
    if (op == "<") return boolean(x < y);
    if (op == "<=") return boolean(x <= y);
    if (op == ">") return boolean(x > y);
    return boolean(x >= y);
  }

  Value binary(const Expression::Node& n) const {
    const std::string& op = n.name;
    if (op == "and") return boolean(as_bool(eval(*n.children[0])) && as_bool(eval(*n.children[1])));
    if (op == "or") return boolean(as_bool(eval(*n.children[0])) || as_bool(eval(*n.children[1])));
    Value a = eval(*n.children[0]);
    Value b = eval(*n.children[1]);
    if (op == "==" || op == "!=" || op == "<" || op == "<=" || op == ">" || op == ">=") return compare(op, a, b);
    Rational x = as_number(a);
    Rational y = as_number(b);
    if (op == "+") return number(x + y);
    if (op == "-") return number(x - y);
    if (op == "*") return number(x * y);
    if (op == "/") {
      if (y == 0) error("division by zero");
      return number(x / y);
    }
    BigInt e = as_integer(b);
    if (e < 0 || e > 4096) error("exponent out of range");
    Rational result = 1;
    for (BigInt i = 0; i < e; ++i) result *= x;
    return number(result);
  }

  Value call(const Expression::Node& n) const {
    const std::string& fn = n.name;
    if (fn == "binom") {
      BigInt top = as_integer(eval(*n.children[0]));
      BigInt bottom = as_integer(eval(*n.children[1]));
      if (top < 0) error("binom with negative upper argument");
      return number(Rational(binomial(top, bottom)));
    }
    if (fn == "fact") {
      BigInt k = as_integer(eval(*n.children[0]));
      if (k < 0 || k > 10000) error("fact argument out of range");
      return number(Rational(factorial(static_cast<std::int64_t>(k))));
    }
    if (fn == "eps") {
      BigInt m = as_integer(eval(*n.children[0]));
      if (m < 1) error("eps needs a positive argument");
      if (env_.p.is_generic()) return number(0);
      return number(m % env_.p.value() == 0 ? 1 : 0);
    }
    Value d = eval(*n.children[0]);
    BigInt m = as_integer(eval(*n.children[1]));
    if (d.type == Value::Type::Infinite) return boolean(m == 0);
    BigInt divisor = as_integer(d);
    if (divisor == 0) return boolean(m == 0);
    return boolean(m % divisor == 0);
  }

  const ExprEnv& env_;
  const std::string& text_;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(text).parse();
  return e;
}

Rational Expression::evaluate(const ExprEnv& env) const {
  Evaluator ev(env, text_);
  return ev.as_number(ev.eval(*root_));
}

BigInt Expression::evaluate_integer(const ExprEnv& env) const {
  Rational q = evaluate(env);
  if (!is_integer(q)) throw ValidationError("formula '" + text_ + "' evaluated to non-integer " + to_decimal(q));
  return numerator(q);
}

bool Expression::holds(const ExprEnv& env) const {
  Evaluator ev(env, text_);
  return ev.as_bool(ev.eval(*root_));
}

}  // namespace weylkit
