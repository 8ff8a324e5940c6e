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
#include <string>
#include <string_view>
#include <vector>

#include "tforge/expr.hpp"
#include "tforge/series.hpp"

namespace tforge {

enum class TriangleKind { kSheffer, kRiordan };

const char* to_string(TriangleKind kind) noexcept;

/// A Sheffer triangle (g, f) reads its columns from the e.g.f. g f^m / m!;
/// a Riordan triangle (G, F) from the o.g.f. G F^m. The expressions are the
/// same analytic objects either way; only the coefficient extraction differs.
struct TriangleSpec {
  TriangleKind kind = TriangleKind::kSheffer;
  Expr g = Expr::literal(Rational(1));
  Expr f = Expr::variable();
  Bindings params;
  std::string name;
};

/// g and f (or G and F) expanded to a common order.
struct SpecSeries {
  RationalSeries g;
  RationalSeries f;
};

/// Expands and validates: g(0) = 1, f(0) = 0, f'(0) != 0.
/// Throws Error(kInvalidSpec) on a violated constraint.
SpecSeries evaluate_spec(const TriangleSpec& spec, std::size_t order);

/// "sheffer: g=<expr>, f=<expr>[, params: d=2, a=1]"; "riordan:" likewise
/// (G=/F= accepted too, ';' may replace ',').
TriangleSpec parse_inline_spec(std::string_view text);

/// Canonical one-line form accepted by parse_inline_spec.
std::string to_inline_string(const TriangleSpec& spec);

/// Sheffer group law (g1, f1)(g2, f2) = (g1 * (g2 o f1), f2 o f1); the built
/// triangle of the product is the matrix product of the built triangles.
/// Throws Error(kKindMismatch) unless both are Sheffer.
TriangleSpec sheffer_product(const TriangleSpec& a, const TriangleSpec& b);

struct CatalogEntry {
  std::string name;          // lookup key; families use "S2[d,a]"
  TriangleKind kind;
  std::string g;
  std::string f;
  std::string oeis;          // alias accepted by catalog_lookup when nonempty
  std::vector<std::string> family_params;  // empty for fixed entries
  std::string description;
};

/// Static catalog in display order.
const std::vector<CatalogEntry>& catalog();

/// Resolves "stirling2", an A-number alias, or a family instance such as
/// "S2[3,1]" / "S1phat[2,1]". Family instances enforce d >= 1, a >= 0,
/// gcd(d, a) = 1 and a = 0 when d = 1 (Error(kCatalogConstraint)).
/// Unknown names throw Error(kUnknownCatalogEntry) listing what exists.
TriangleSpec catalog_lookup(std::string_view name);

/// Every fixed entry plus the family instances used for verification.
std::vector<std::string> verification_names();

}  // namespace tforge
