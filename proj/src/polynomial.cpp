#include "rgt/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace rgt {

namespace {

bool has_long_variable(const Polynomial& p) {
  if (p.kind() == Polynomial::Kind::Variable) return p.name().size() > 1;
  for (const auto& child : p.children())
    if (has_long_variable(child)) return true;
  return false;
}

std::string render_poly(const Polynomial& p, bool spaced, bool top) {
  switch (p.kind()) {
    case Polynomial::Kind::Variable:
      return p.name();
    case Polynomial::Kind::Sum: {
      std::string out;
      const char* sep = (spaced && top) ? " + " : "+";
      for (std::size_t i = 0; i < p.children().size(); ++i) {
        if (i) out += sep;
        out += render_poly(p.children()[i], spaced, false);
      }
      return out;
    }
    case Polynomial::Kind::Product: {
      // Juxtaposition only reparses unambiguously for single-letter names.
      const char* sep = has_long_variable(p) ? "*" : "";
      std::string out;
      for (std::size_t i = 0; i < p.children().size(); ++i) {
        const auto& child = p.children()[i];
        if (i) out += sep;
        if (child.kind() == Polynomial::Kind::Sum)
          out += "(" + render_poly(child, spaced, false) + ")";
        else
          out += render_poly(child, spaced, false);
      }
      return out;
    }
  }
  return {};
}

void collect_variables(const Polynomial& p, std::vector<std::string>& out) {
  if (p.kind() == Polynomial::Kind::Variable) {
    out.push_back(p.name());
    return;
  }
  for (const auto& child : p.children()) collect_variables(child, out);
}

void check_read_once(const Polynomial& p) {
  std::vector<std::string> vars;
  collect_variables(p, vars);
  std::sort(vars.begin(), vars.end());
  const auto dup = std::adjacent_find(vars.begin(), vars.end());
  if (dup != vars.end())
    throw ValidationError("duplicate variable '" + *dup + "' in polynomial");
}

}  // namespace

Polynomial Polynomial::variable(std::string name) {
  if (name.empty()) throw ValidationError("subject name must be non-empty");
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) ||
        std::string("+*(){},").find(c) != std::string::npos)
      throw ValidationError("invalid character in subject name: " + name);
  Polynomial p;
  p.kind_ = Kind::Variable;
  p.name_ = std::move(name);
  return p;
}

Polynomial Polynomial::node(Kind kind, std::vector<Polynomial> children) {
  std::vector<Polynomial> flat;
  for (auto& child : children) {
    if (child.kind() == kind)
      for (const auto& grand : child.children()) flat.push_back(grand);
    else
      flat.push_back(std::move(child));
  }
  if (flat.empty())
    throw ValidationError("sum/product needs at least one operand");
  if (flat.size() == 1) return flat.front();

  // Products list single variables before composite factors, as the
  // notation writes them: b(a+d), not (a+d)b.
  const auto rank = [kind](const Polynomial& p) {
    return kind == Polynomial::Kind::Product &&
           p.kind() != Polynomial::Kind::Variable;
  };
  std::stable_sort(flat.begin(), flat.end(),
                   [&](const Polynomial& a, const Polynomial& b) {
                     if (rank(a) != rank(b)) return rank(a) < rank(b);
                     return render_poly(a, false, false) <
                            render_poly(b, false, false);
                   });
  Polynomial p;
  p.kind_ = kind;
  p.children_ = std::move(flat);
  check_read_once(p);
  return p;
}

Polynomial Polynomial::sum(std::vector<Polynomial> children) {
  return node(Kind::Sum, std::move(children));
}

Polynomial Polynomial::product(std::vector<Polynomial> children) {
  return node(Kind::Product, std::move(children));
}

std::vector<std::string> Polynomial::variables() const {
  std::vector<std::string> out;
  collect_variables(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Variable) return name_ == other.name_;
  return children_ == other.children_;
}

std::string to_string(const Polynomial& p, bool spaced) {
  return render_poly(p, spaced, true);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum class Type { Ident, Plus, Star, LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t position;
};

class Lexer {
 public:
  Lexer(std::string_view input, const std::vector<std::string>* vocabulary)
      : input_(input), vocabulary_(vocabulary) {}

  Token next() {
    while (pos_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[pos_])))
      ++pos_;
    if (pos_ >= input_.size()) return {Token::Type::End, "", pos_};

    const std::size_t at = pos_;
    const char c = input_[pos_];
    switch (c) {
      case '+':
        ++pos_;
        return {Token::Type::Plus, "+", at};
      case '*':
        ++pos_;
        return {Token::Type::Star, "*", at};
      case '(':
        ++pos_;
        return {Token::Type::LParen, "(", at};
      case ')':
        ++pos_;
        return {Token::Type::RParen, ")", at};
      default:
        break;
    }
    if (vocabulary_) {
      // Longest declared name matching at this position.
      std::size_t best = 0;
      for (const auto& name : *vocabulary_)
        if (name.size() > best && input_.substr(pos_, name.size()) == name)
          best = name.size();
      if (best == 0)
        throw ParseError("no declared subject name matches here", at);
      pos_ += best;
      return {Token::Type::Ident, std::string(input_.substr(at, best)), at};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      ++pos_;
      return {Token::Type::Ident, std::string(1, c), at};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

 private:
  std::string_view input_;
  const std::vector<std::string>* vocabulary_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view input, const std::vector<std::string>* vocabulary)
      : lexer_(input, vocabulary) {
    advance();
  }

  Polynomial parse() {
    if (current_.type == Token::Type::End)
      throw ParseError("empty polynomial", 0);
    Polynomial result = expression();
    if (current_.type != Token::Type::End)
      throw ParseError("unexpected '" + current_.text + "'",
                       current_.position);
    return result;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  Polynomial expression() {
    std::vector<Polynomial> terms;
    terms.push_back(term());
    while (current_.type == Token::Type::Plus) {
      advance();
      terms.push_back(term());
    }
    return terms.size() == 1 ? terms.front()
                             : Polynomial::sum(std::move(terms));
  }

  Polynomial term() {
    std::vector<Polynomial> factors;
    factors.push_back(factor());
    for (;;) {
      if (current_.type == Token::Type::Star) {
        advance();
        factors.push_back(factor());
      } else if (current_.type == Token::Type::Ident ||
                 current_.type == Token::Type::LParen) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors.front()
                               : Polynomial::product(std::move(factors));
  }

  Polynomial factor() {
    if (current_.type == Token::Type::Ident) {
      Polynomial v = Polynomial::variable(current_.text);
      advance();
      return v;
    }
    if (current_.type == Token::Type::LParen) {
      advance();
      Polynomial inner = expression();
      if (current_.type != Token::Type::RParen)
        throw ParseError("expected ')'", current_.position);
      advance();
      return inner;
    }
    throw ParseError("expected a variable or '('", current_.position);
  }

  Lexer lexer_;
  Token current_{Token::Type::End, "", 0};
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  return Parser(text, nullptr).parse();
}

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& vocabulary) {
  return Parser(text, &vocabulary).parse();
}

// ---------------------------------------------------------------------------
// Stratification

Pst stratify(const Polynomial& p) {
  Pst node{p, {}};
  if (p.kind() == Polynomial::Kind::Variable) return node;
  for (const auto& child : p.children()) node.children.push_back(stratify(child));
  return node;
}

// ---------------------------------------------------------------------------
// Symbolic expressions

namespace {

bool expr_has_long_variable(const Expr& e) {
  if (e.kind() == Expr::Kind::Var) return e.name().size() > 1;
  for (const auto& op : e.operands())
    if (expr_has_long_variable(op)) return true;
  return false;
}

std::string render_expr(const Expr& e, bool spaced, bool top) {
  switch (e.kind()) {
    case Expr::Kind::Zero:
      return "0";
    case Expr::Kind::One:
      return "1";
    case Expr::Kind::Var:
      return e.name();
    case Expr::Kind::Not: {
      const Expr& inner = e.operands().front();
      if (inner.kind() == Expr::Kind::Var)
        return "~" + inner.name();
      return "~(" + render_expr(inner, spaced, false) + ")";
    }
    case Expr::Kind::Sum: {
      std::string out;
      const char* sep = (spaced && top) ? " + " : "+";
      for (std::size_t i = 0; i < e.operands().size(); ++i) {
        if (i) out += sep;
        out += render_expr(e.operands()[i], spaced, false);
      }
      return out;
    }
    case Expr::Kind::Product: {
      const char* sep = expr_has_long_variable(e) ? "*" : "";
      std::string out;
      for (std::size_t i = 0; i < e.operands().size(); ++i) {
        const auto& op = e.operands()[i];
        if (i) out += sep;
        if (op.kind() == Expr::Kind::Sum)
          out += "(" + render_expr(op, spaced, false) + ")";
        else
          out += render_expr(op, spaced, false);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

Expr Expr::zero() { return Expr{}; }

Expr Expr::one() {
  Expr e;
  e.kind_ = Kind::One;
  return e;
}

Expr Expr::var(std::string name) {
  Expr e;
  e.kind_ = Kind::Var;
  e.name_ = std::move(name);
  return e;
}

Expr Expr::negation(Expr operand) {
  switch (operand.kind_) {
    case Kind::Zero:
      return one();
    case Kind::One:
      return zero();
    case Kind::Not:
      return operand.operands_.front();
    default:
      break;
  }
  Expr e;
  e.kind_ = Kind::Not;
  e.operands_.push_back(std::move(operand));
  return e;
}

Expr Expr::node(Kind kind, std::vector<Expr> operands) {
  Expr e;
  e.kind_ = kind;
  e.operands_ = std::move(operands);
  return e;
}

/// Shared flatten/sort/identity machinery for sums and products.
/// `absorbing` wipes the whole expression, `neutral` drops out.
Expr Expr::combine(Kind kind, std::vector<Expr> operands,
                   const Expr& absorbing, const Expr& neutral) {
  std::vector<Expr> flat;
  for (auto& op : operands) {
    if (op.kind() == kind)
      for (const auto& inner : op.operands()) flat.push_back(inner);
    else
      flat.push_back(std::move(op));
  }

  std::vector<Expr> kept;
  for (auto& op : flat) {
    if (op == absorbing) return absorbing;
    if (op == neutral) continue;
    kept.push_back(std::move(op));
  }

  const auto rank = [kind](const Expr& e) {
    return kind == Kind::Product && e.kind() != Kind::Var;
  };
  std::stable_sort(kept.begin(), kept.end(), [&](const Expr& a, const Expr& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return render_expr(a, false, false) < render_expr(b, false, false);
  });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  // x together with ~x collapses to the absorbing element.
  for (const auto& op : kept)
    if (op.kind() == Kind::Not)
      for (const auto& other : kept)
        if (other == op.operands().front()) return absorbing;

  if (kept.empty()) return neutral;
  if (kept.size() == 1) return kept.front();
  return node(kind, std::move(kept));
}

Expr Expr::sum(std::vector<Expr> operands) {
  return combine(Kind::Sum, std::move(operands), one(), zero());
}

Expr Expr::product(std::vector<Expr> operands) {
  return combine(Kind::Product, std::move(operands), zero(), one());
}

Expr Expr::exponential(const Expr& base, const Expr& w) {
  if (base == w) return one();  // x + ~x = 1
  return sum({base, negation(w)});
}

Expr Expr::from_polynomial(const Polynomial& p) {
  switch (p.kind()) {
    case Polynomial::Kind::Variable:
      return var(p.name());
    case Polynomial::Kind::Sum:
    case Polynomial::Kind::Product: {
      std::vector<Expr> ops;
      for (const auto& child : p.children())
        ops.push_back(from_polynomial(child));
      return p.kind() == Polynomial::Kind::Sum ? sum(std::move(ops))
                                               : product(std::move(ops));
    }
  }
  return zero();
}

bool Expr::operator==(const Expr& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Var) return name_ == other.name_;
  return operands_ == other.operands_;
}

bool Expr::evaluate(const std::map<std::string, bool>& assignment) const {
  switch (kind_) {
    case Kind::Zero:
      return false;
    case Kind::One:
      return true;
    case Kind::Var: {
      const auto it = assignment.find(name_);
      if (it == assignment.end())
        throw Error("missing value for variable '" + name_ + "'");
      return it->second;
    }
    case Kind::Not:
      return !operands_.front().evaluate(assignment);
    case Kind::Sum:
      for (const auto& op : operands_)
        if (op.evaluate(assignment)) return true;
      return false;
    case Kind::Product:
      for (const auto& op : operands_)
        if (!op.evaluate(assignment)) return false;
      return true;
  }
  return false;
}

std::string to_string(const Expr& e, bool spaced) {
  return render_expr(e, spaced, true);
}

// ---------------------------------------------------------------------------
// Folding

BooleanFunction polynomial_function(const Polynomial& p) {
  switch (p.kind()) {
    case Polynomial::Kind::Variable:
      return BooleanFunction::variable(p.name());
    case Polynomial::Kind::Sum:
    case Polynomial::Kind::Product: {
      BooleanFunction acc = polynomial_function(p.children().front());
      for (std::size_t i = 1; i < p.children().size(); ++i) {
        const BooleanFunction next = polynomial_function(p.children()[i]);
        acc = p.kind() == Polynomial::Kind::Sum ? (acc | next) : (acc & next);
      }
      return acc;
    }
  }
  return BooleanFunction::constant(false);
}

namespace {

struct FoldParts {
  BooleanFunction function;
  Expr symbolic;
};

FoldParts fold_node(const Pst& node) {
  if (node.is_leaf())
    return {BooleanFunction::variable(node.poly.name()),
            Expr::var(node.poly.name())};

  std::vector<FoldParts> parts;
  for (const auto& child : node.children) parts.push_back(fold_node(child));

  const bool is_sum = node.poly.kind() == Polynomial::Kind::Sum;
  BooleanFunction w_fn = parts.front().function;
  std::vector<Expr> w_ops;
  w_ops.push_back(parts.front().symbolic);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    w_fn = is_sum ? (w_fn | parts[i].function) : (w_fn & parts[i].function);
    w_ops.push_back(parts[i].symbolic);
  }
  const Expr w_expr =
      is_sum ? Expr::sum(std::move(w_ops)) : Expr::product(std::move(w_ops));

  return {polynomial_function(node.poly) | ~w_fn,
          Expr::exponential(Expr::from_polynomial(node.poly), w_expr)};
}

}  // namespace

FoldResult fold(const Pst& t) {
  FoldParts parts = fold_node(t);
  return {parts.function.support_restricted(), parts.symbolic};
}

FoldResult fold(const Polynomial& p) { return fold(stratify(p)); }

}  // namespace rgt
