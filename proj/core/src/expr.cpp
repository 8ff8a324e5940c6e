/*
 * Copyright 2026 The tforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tforge/expr.hpp"

#include <cctype>

#include "tforge/error.hpp"

namespace tforge {

using Kind = Expr::Kind;

Expr Expr::literal(const Rational& value) {
  return Expr(std::make_shared<const Node>(Node{Kind::kLiteral, value, {}, nullptr, nullptr}));
}

Expr Expr::variable(const std::string& name) {
  return Expr(std::make_shared<const Node>(Node{Kind::kVariable, Rational(0), name, nullptr, nullptr}));
}

Expr Expr::parameter(const std::string& name) {
  return Expr(std::make_shared<const Node>(Node{Kind::kParameter, Rational(0), name, nullptr, nullptr}));
}

Expr Expr::neg(const Expr& operand) {
  return Expr(std::make_shared<const Node>(Node{Kind::kNeg, Rational(0), {}, operand.node_, nullptr}));
}

Expr Expr::binary(Kind kind, const Expr& lhs, const Expr& rhs) {
  return Expr(std::make_shared<const Node>(Node{kind, Rational(0), {}, lhs.node_, rhs.node_}));
}

Expr Expr::apply(Kind fn, const Expr& operand) {
  if (fn != Kind::kExp && fn != Kind::kLog) throw Error(ErrorCode::kUnknownIdentifier, "not a function kind");
  return Expr(std::make_shared<const Node>(Node{fn, Rational(0), {}, operand.node_, nullptr}));
}

bool Expr::is_binary() const {
  switch (kind()) {
    case Kind::kAdd:
    case Kind::kSub:
    case Kind::kMul:
    case Kind::kDiv:
    case Kind::kPow:
      return true;
    default:
      return false;
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::kLiteral:
      return a.value() == b.value();
    case Kind::kVariable:
      return true;  // "s" and "x" name the same variable
    case Kind::kParameter:
      return a.name() == b.name();
    case Kind::kNeg:
    case Kind::kExp:
    case Kind::kLog:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::set<std::string>>& known)
      : text_(text), known_(known) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::kSyntax) const {
    throw ParseError(code, pos_, "syntax error: " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but reached end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool digit_at(std::size_t p) const {
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + parse_term();
      } else if (accept('-')) {
        lhs = lhs - parse_term();
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * parse_unary();
      } else if (accept('/')) {
        lhs = lhs / parse_unary();
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::neg(parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_base();
    if (accept('^')) return Expr::binary(Kind::kPow, base, parse_unary());
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr parse_number() {
    const std::string num = read_digits();
    // "p/q" with an integer right after the slash is a single literal.
    const std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t look = pos_ + 1;
      while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
      if (digit_at(look)) {
        pos_ = look;
        const std::size_t den_at = pos_;
        const std::string den = read_digits();
        if (mpz_class(den) == 0) {
          pos_ = den_at;
          fail("zero denominator in literal", ErrorCode::kDivisionByZero);
        }
        return Expr::literal(Rational::from_integers(mpz_class(num), mpz_class(den)));
      }
    }
    pos_ = save;
    return Expr::literal(Rational(mpq_class(mpz_class(num))));
  }

  Expr parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string ident(text_.substr(start, pos_ - start));
      if (peek('(')) {
        Kind fn;
        if (ident == "exp") {
          fn = Kind::kExp;
        } else if (ident == "log") {
          fn = Kind::kLog;
        } else {
          pos_ = start;
          fail("unknown function '" + ident + "'", ErrorCode::kUnknownIdentifier);
        }
        expect('(');
        Expr inner = parse_expr();
        expect(')');
        return Expr::apply(fn, inner);
      }
      if (ident == "s" || ident == "x") return Expr::variable(ident);
      if (ident == "exp" || ident == "log") {
        fail("function '" + ident + "' needs an argument");
      }
      if (known_ && !known_->contains(ident)) {
        pos_ = start;
        fail("unknown identifier '" + ident + "'", ErrorCode::kUnknownIdentifier);
      }
      return Expr::parameter(ident);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::optional<std::set<std::string>>& known_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const std::optional<std::set<std::string>>& known_params) {
  return Parser(text, known_params).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Kind::kAdd:
    case Kind::kSub:
      return 1;
    case Kind::kMul:
    case Kind::kDiv:
      return 2;
    case Kind::kNeg:
      return 3;
    case Kind::kPow:
      return 4;
    case Kind::kLiteral:
      return e.value().sign() < 0 ? 3 : 5;
    default:
      return 5;
  }
}

std::string print(const Expr& e);

std::string print_at(const Expr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string print(const Expr& e) {
  switch (e.kind()) {
    case Kind::kLiteral:
      return e.value().str();
    case Kind::kVariable:
    case Kind::kParameter:
      return e.name();
    case Kind::kNeg:
      return "-" + print_at(e.operand(), 3);
    case Kind::kAdd:
      return print_at(e.lhs(), 1) + "+" + print_at(e.rhs(), 2);
    case Kind::kSub:
      return print_at(e.lhs(), 1) + "-" + print_at(e.rhs(), 2);
    case Kind::kMul:
      return print_at(e.lhs(), 2) + "*" + print_at(e.rhs(), 3);
    case Kind::kDiv: {
      std::string rhs = print_at(e.rhs(), 3);
      // Keep "a/2/3" from re-lexing as a / (2/3).
      if (!rhs.empty() && std::isdigit(static_cast<unsigned char>(rhs.front()))) rhs = "(" + rhs + ")";
      return print_at(e.lhs(), 2) + "/" + rhs;
    }
    case Kind::kPow:
      return print_at(e.lhs(), 5) + "^" + print_at(e.rhs(), 3);
    case Kind::kExp:
      return "exp(" + print(e.operand()) + ")";
    case Kind::kLog:
      return "log(" + print(e.operand()) + ")";
  }
  return {};
}

}  // namespace

std::string to_string(const Expr& e) { return print(e); }

// ---------------------------------------------------------------------------
// Tree utilities

namespace {

template <class Fn>
Expr rebuild(const Expr& e, Fn&& leaf) {
  switch (e.kind()) {
    case Kind::kLiteral:
    case Kind::kVariable:
    case Kind::kParameter:
      return leaf(e);
    case Kind::kNeg:
      return Expr::neg(rebuild(e.operand(), leaf));
    case Kind::kExp:
    case Kind::kLog:
      return Expr::apply(e.kind(), rebuild(e.operand(), leaf));
    default:
      return Expr::binary(e.kind(), rebuild(e.lhs(), leaf), rebuild(e.rhs(), leaf));
  }
}

void collect_parameters(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Kind::kParameter:
      out.insert(e.name());
      return;
    case Kind::kLiteral:
    case Kind::kVariable:
      return;
    case Kind::kNeg:
    case Kind::kExp:
    case Kind::kLog:
      collect_parameters(e.operand(), out);
      return;
    default:
      collect_parameters(e.lhs(), out);
      collect_parameters(e.rhs(), out);
  }
}

}  // namespace

std::set<std::string> parameters(const Expr& e) {
  std::set<std::string> out;
  collect_parameters(e, out);
  return out;
}

Expr bind(const Expr& e, const Bindings& bindings) {
  return rebuild(e, [&](const Expr& leaf) {
    if (leaf.kind() == Kind::kParameter) {
      if (auto it = bindings.find(leaf.name()); it != bindings.end()) return Expr::literal(it->second);
    }
    return leaf;
  });
}

Expr substitute(const Expr& e, const Expr& replacement) {
  return rebuild(e, [&](const Expr& leaf) { return leaf.kind() == Kind::kVariable ? replacement : leaf; });
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Rational lookup(const Expr& e, const Bindings& bindings) {
  auto it = bindings.find(e.name());
  if (it == bindings.end()) throw Error(ErrorCode::kUnboundParameter, "unbound parameter '" + e.name() + "'");
  return it->second;
}

[[noreturn]] void rethrow_at(const Error& err, const Expr& where) {
  throw Error(err.code(), std::string(err.what()) + " in subexpression '" + to_string(where) + "'");
}

std::optional<std::int64_t> small_integer(const Rational& q) {
  if (!q.is_integer() || !q.numerator().fits_slong_p()) return std::nullopt;
  return q.numerator().get_si();
}

}  // namespace

Rational eval_constant(const Expr& e, const Bindings& bindings) {
  switch (e.kind()) {
    case Kind::kLiteral:
      return e.value();
    case Kind::kParameter:
      return lookup(e, bindings);
    case Kind::kVariable:
      throw Error(ErrorCode::kNonConstantExponent, "expression depends on the variable: '" + to_string(e) + "'");
    case Kind::kNeg:
      return -eval_constant(e.operand(), bindings);
    case Kind::kAdd:
      return eval_constant(e.lhs(), bindings) + eval_constant(e.rhs(), bindings);
    case Kind::kSub:
      return eval_constant(e.lhs(), bindings) - eval_constant(e.rhs(), bindings);
    case Kind::kMul:
      return eval_constant(e.lhs(), bindings) * eval_constant(e.rhs(), bindings);
    case Kind::kDiv: {
      const Rational num = eval_constant(e.lhs(), bindings);
      const Rational den = eval_constant(e.rhs(), bindings);
      if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero in '" + to_string(e) + "'");
      return num / den;
    }
    case Kind::kPow: {
      const Rational base = eval_constant(e.lhs(), bindings);
      const Rational q = eval_constant(e.rhs(), bindings);
      if (auto k = small_integer(q)) {
        if (base.is_zero() && *k < 0)
          throw Error(ErrorCode::kDivisionByZero, "zero to a negative power in '" + to_string(e) + "'");
        return pow(base, *k);
      }
      if (base.is_one()) return base;
      throw Error(ErrorCode::kPowDomain, "irrational constant power in '" + to_string(e) + "'");
    }
    case Kind::kExp: {
      const Rational a = eval_constant(e.operand(), bindings);
      if (a.is_zero()) return Rational(1);
      throw Error(ErrorCode::kExpDomain, "exp of a nonzero constant is not rational: '" + to_string(e) + "'");
    }
    case Kind::kLog: {
      const Rational a = eval_constant(e.operand(), bindings);
      if (a.is_one()) return Rational(0);
      throw Error(ErrorCode::kLogDomain, "log of a constant other than 1 is not rational: '" + to_string(e) + "'");
    }
  }
  return Rational(0);
}

RationalSeries expr_to_series(const Expr& e, const Bindings& bindings, std::size_t order) {
  switch (e.kind()) {
    case Kind::kLiteral:
      return RationalSeries::constant(e.value(), order);
    case Kind::kParameter:
      return RationalSeries::constant(lookup(e, bindings), order);
    case Kind::kVariable:
      return RationalSeries::identity(order);
    case Kind::kNeg:
      return -expr_to_series(e.operand(), bindings, order);
    case Kind::kAdd:
      return expr_to_series(e.lhs(), bindings, order) + expr_to_series(e.rhs(), bindings, order);
    case Kind::kSub:
      return expr_to_series(e.lhs(), bindings, order) - expr_to_series(e.rhs(), bindings, order);
    case Kind::kMul:
      return expr_to_series(e.lhs(), bindings, order) * expr_to_series(e.rhs(), bindings, order);
    case Kind::kDiv: {
      const RationalSeries num = expr_to_series(e.lhs(), bindings, order);
      const RationalSeries den = expr_to_series(e.rhs(), bindings, order);
      try {
        return divide(num, den);
      } catch (const Error& err) {
        rethrow_at(err, e);
      }
    }
    case Kind::kPow: {
      const RationalSeries base = expr_to_series(e.lhs(), bindings, order);
      Rational q;
      try {
        q = eval_constant(e.rhs(), bindings);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::kNonConstantExponent)
          throw Error(ErrorCode::kNonConstantExponent, "exponent must be a rational constant in '" + to_string(e) + "'");
        throw;
      }
      try {
        if (auto k = small_integer(q)) return pow_int(base, *k);
        return pow(base, q);
      } catch (const Error& err) {
        rethrow_at(err, e);
      }
    }
    case Kind::kExp: {
      const RationalSeries a = expr_to_series(e.operand(), bindings, order);
      try {
        return exp(a);
      } catch (const Error& err) {
        rethrow_at(err, e);
      }
    }
    case Kind::kLog: {
      const RationalSeries a = expr_to_series(e.operand(), bindings, order);
      try {
        return log(a);
      } catch (const Error& err) {
        rethrow_at(err, e);
      }
    }
  }
  throw Error(ErrorCode::kSyntax, "unhandled expression kind");
}

}  // namespace tforge
