#pragma once

// Recursive-descent parser for elements of K = Q(i)(t) and matrices over K.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | INTEGER 'i' | 'i' | 't' | '(' expr ')'
//
// '^' binds tighter than unary minus, so -t^2 = -(t^2). Exponents are
// nonnegative integer literals. Binary operators associate to the left.
//
//   matrix  := '[' row (';' row)* ']'      row := expr (',' expr)*

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vessiot/matrix.hpp"
#include "vessiot/ratfunc.hpp"

namespace vessiot {

struct Expr {
  enum class Kind { Literal, Variable, Negate, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Literal;
  GQ literal;             // Literal
  unsigned exponent = 0;  // Pow
  std::size_t position = 0;
  std::vector<Expr> operands;
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  Expr parse_expression() {
    Expr lhs = parse_term();
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) return lhs;
      const std::size_t pos = pos_;
      const auto kind = get() == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = binary(kind, pos, std::move(lhs), parse_term());
    }
  }

  void expect_end() {
    skip_space();
    if (!at_end()) throw SyntaxError(pos_, std::string("unexpected '") + peek() + "'");
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  // Consumes c if it is the next non-space character.
  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '*' && peek() != '/')) return lhs;
      const std::size_t pos = pos_;
      const auto kind = get() == '*' ? Expr::Kind::Mul : Expr::Kind::Div;
      lhs = binary(kind, pos, std::move(lhs), parse_unary());
    }
  }

  Expr parse_unary() {
    skip_space();
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      const std::size_t pos = pos_;
      const bool negate = get() == '-';
      Expr operand = parse_unary();
      if (!negate) return operand;
      Expr e{Expr::Kind::Negate, {}, 0, pos, {}};
      e.operands.push_back(std::move(operand));
      return e;
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    skip_space();
    if (at_end() || peek() != '^') return base;
    const std::size_t pos = pos_++;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError(pos_, "exponent must be a nonnegative integer literal");
    const std::string digits = read_digits();
    if (digits.size() > 4) throw SyntaxError(pos, "exponent too large");
    Expr e{Expr::Kind::Pow, {}, static_cast<unsigned>(std::stoul(digits)), pos, {}};
    e.operands.push_back(std::move(base));
    skip_space();
    if (!at_end() && peek() == '^') throw SyntaxError(pos_, "chained exponents need parentheses");
    return e;
  }

  Expr parse_primary() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
    const std::size_t pos = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class value(read_digits());
      if (!at_end() && peek() == 'i' && !ident_continues(pos_ + 1)) {
        ++pos_;
        return {Expr::Kind::Literal, GQ(mpq_class(0), mpq_class(value)), 0, pos, {}};
      }
      if (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
        throw SyntaxError(pos_, "implicit multiplication is not supported; use '*'");
      return {Expr::Kind::Literal, GQ(mpq_class(value)), 0, pos, {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += get();
      if (name == "i") return {Expr::Kind::Literal, GQ::i(), 0, pos, {}};
      if (name == "t") return {Expr::Kind::Variable, {}, 0, pos, {}};
      throw SyntaxError(pos, "unknown identifier '" + name + "'");
    }
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expression();
      expect(')');
      return inner;
    }
    throw SyntaxError(pos, std::string("unexpected '") + c + "'");
  }

  static Expr binary(Expr::Kind kind, std::size_t pos, Expr lhs, Expr rhs) {
    Expr e{kind, {}, 0, pos, {}};
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  std::string read_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    return digits;
  }

  bool ident_continues(std::size_t at) const {
    return at < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[at])) || src_[at] == '_');
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char get() { return src_[pos_++]; }

  std::string_view src_;
  std::size_t pos_ = 0;
};

inline Expr parse_expr(std::string_view src) {
  ExprParser p(src);
  Expr e = p.parse_expression();
  p.expect_end();
  return e;
}

inline RatFunc evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal: return RatFunc(e.literal);
    case Expr::Kind::Variable: return RatFunc::t();
    case Expr::Kind::Negate: return -evaluate(e.operands[0]);
    case Expr::Kind::Add: return evaluate(e.operands[0]) + evaluate(e.operands[1]);
    case Expr::Kind::Sub: return evaluate(e.operands[0]) - evaluate(e.operands[1]);
    case Expr::Kind::Mul: return evaluate(e.operands[0]) * evaluate(e.operands[1]);
    case Expr::Kind::Div: {
      RatFunc den = evaluate(e.operands[1]);
      if (den.is_zero())
        throw Error(ErrorCode::DivisionByZeroFunction,
                    "denominator at position " + std::to_string(e.position) + " simplifies to 0");
      return evaluate(e.operands[0]) / den;
    }
    case Expr::Kind::Pow: return pow(evaluate(e.operands[0]), e.exponent);
  }
  return {};
}

inline RatFunc parse_ratfunc(std::string_view src) { return evaluate(parse_expr(src)); }

// A constant of Q(i) written in the same grammar.
inline GQ parse_constant(std::string_view src) {
  RatFunc r = parse_ratfunc(src);
  if (!r.is_constant()) throw Error(ErrorCode::InvalidArgument, "expected a constant, got " + to_string(r));
  return r.constant_value();
}

// Comma-separated expressions, e.g. "2/3, 2/3, 1/3".
inline std::vector<RatFunc> parse_list(std::string_view src) {
  ExprParser p(src);
  std::vector<RatFunc> out;
  do {
    out.push_back(evaluate(p.parse_expression()));
  } while (p.accept(','));
  p.expect_end();
  return out;
}

inline MatK parse_matrix(std::string_view src) {
  ExprParser p(src);
  p.expect('[');
  std::vector<std::vector<RatFunc>> rows(1);
  for (;;) {
    rows.back().push_back(evaluate(p.parse_expression()));
    if (p.accept(',')) continue;
    if (p.accept(';')) {
      rows.emplace_back();
      continue;
    }
    p.expect(']');
    break;
  }
  p.expect_end();
  const std::size_t cols = rows.front().size();
  std::vector<RatFunc> data;
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorCode::RaggedRows, "rows have different lengths");
    data.insert(data.end(), row.begin(), row.end());
  }
  return MatK(rows.size(), cols, std::move(data));
}

}  // namespace vessiot
