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

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "tforge/rational.hpp"
#include "tforge/series.hpp"

namespace tforge {

using Bindings = std::map<std::string, Rational>;

/// Immutable expression tree for generating-function definitions.
/// Nodes are shared, so copies are cheap.
class Expr {
 public:
  enum class Kind { kLiteral, kVariable, kParameter, kNeg, kAdd, kSub, kMul, kDiv, kPow, kExp, kLog };

  static Expr literal(const Rational& value);
  static Expr variable(const std::string& name = "s");
  static Expr parameter(const std::string& name);
  static Expr neg(const Expr& operand);
  static Expr binary(Kind kind, const Expr& lhs, const Expr& rhs);
  static Expr apply(Kind fn, const Expr& operand);

  Kind kind() const { return node_->kind; }
  const Rational& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  Expr lhs() const { return Expr(node_->lhs); }
  Expr rhs() const { return Expr(node_->rhs); }
  Expr operand() const { return Expr(node_->lhs); }
  bool is_binary() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind;
    Rational value;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kAdd, a, b); }
inline Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kSub, a, b); }
inline Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kMul, a, b); }
inline Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Expr::Kind::kDiv, a, b); }

/// Parses the generating-function grammar:
///
///   expr   := term (("+"|"-") term)*
///   term   := unary (("*"|"/") unary)*
///   unary  := "-" unary | power
///   power  := base ("^" unary)?          right-associative
///   base   := number | ident | "(" expr ")" | ("exp"|"log") "(" expr ")"
///   number := integer ("/" integer)?
///
/// "s" and "x" are the variable; other identifiers are parameters. When
/// known_params is given, any other identifier is rejected at parse time.
/// Throws ParseError carrying the byte offset.
Expr parse_expr(std::string_view text, const std::optional<std::set<std::string>>& known_params = std::nullopt);

/// Minimal-parenthesis rendering; parse_expr(to_string(e)) == e for trees
/// whose literals are nonnegative (the only literals the parser produces).
std::string to_string(const Expr& e);

std::set<std::string> parameters(const Expr& e);
/// Replaces bound parameters by literals.
Expr bind(const Expr& e, const Bindings& bindings);
/// Replaces the variable by another expression.
Expr substitute(const Expr& e, const Expr& replacement);

/// Value of an expression that does not depend on the variable.
Rational eval_constant(const Expr& e, const Bindings& bindings);

/// Truncated power series of the expression around 0. Failures of the
/// underlying series operations are rethrown naming the subexpression.
RationalSeries expr_to_series(const Expr& e, const Bindings& bindings, std::size_t order);

}  // namespace tforge
