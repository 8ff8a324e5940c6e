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
#include <optional>
#include <string>
#include <vector>

#include "tforge/poly.hpp"
#include "tforge/ratfunc.hpp"
#include "tforge/series.hpp"
#include "tforge/spec.hpp"
#include "tforge/triangle.hpp"

namespace tforge {

/// Truncation order of the y-series unless overridden.
inline constexpr std::size_t kDefaultOrder = 12;
inline constexpr std::size_t kDefaultDMax = 6;
inline constexpr std::size_t kDefaultMMax = 12;

enum class GFSource { kShefferEgf, kRiordanLgf, kRiordanEegf };
enum class RiordanMode { kLgfPascal, kEegfFactorial };
enum class Normalization { kNone, kNarayana, kIndex };

const char* to_string(GFSource s) noexcept;
const char* to_string(RiordanMode m) noexcept;
const char* to_string(Normalization n) noexcept;

/// Shape of a reduced denominator: (1 - c t)^k, or irregular.
struct DenominatorShape {
  bool regular = false;
  Rational c;
  std::size_t k = 0;
  /// The denominator scaled to constant term 1 (monic if it vanishes at 0).
  Poly denominator;
};

DenominatorShape denominator_shape(const RatFunc& gf);

/// Closed form of one diagonal generating function.
struct DiagonalGF {
  std::size_t d = 0;
  RatFunc gf;
  /// Numerator and denominator scaled so that the denominator has constant
  /// term 1, i.e. gf = numerator / (1 - c t)^k when the shape is regular.
  Poly numerator;
  DenominatorShape shape;
  Weighting weighting = Weighting::kPlain;
  GFSource source = GFSource::kShefferEgf;

  /// Taylor coefficients t^0..t^{count-1} of gf.
  std::vector<Rational> expansion(std::size_t count) const;
  /// Diagonal terms encoded by gf: the expansion itself, or m! times it for
  /// the e.g.f.-in-t convention.
  std::vector<Rational> sequence(std::size_t count) const;
};

/// How entry d was read off H(x(t;y)) - H(0): coefficient of y^{d+1}/(d+1)!
/// or of y^{d+1}/(d+1).
enum class Wrapper { kFactorial, kLogarithmic };

struct GFStack {
  TriangleSpec spec;
  Wrapper wrapper = Wrapper::kFactorial;
  GFSource source = GFSource::kShefferEgf;
  Weighting weighting = Weighting::kPlain;
  std::size_t order = kDefaultOrder;
  RatFuncSeries y{0};          // y(t;x) = x - t f(x)
  RatFuncSeries reversion{0};  // x(t;y)
  RatFuncSeries composed{0};   // H(x(t;y)) - H(0), H = integral of g
  std::vector<DiagonalGF> entries;
};

/// y(t;x) = x - t f(x) over Q(t), to the given order.
RatFuncSeries lagrange_input(const TriangleSpec& spec, std::size_t order);

/// Diagonal o.g.f.s GDS(d, t) = (d+1)! [y^{d+1}] (H(x(t;y)) - H(0)) of a
/// Sheffer triangle, d = 0..d_max. Needs d_max < order.
GFStack sheffer_diag_gfs(const TriangleSpec& spec, std::size_t d_max, std::size_t order = kDefaultOrder);

/// Riordan counterpart: lgf-pascal reads (d+1) [y^{d+1}] (o.g.f. of
/// binom(d+m, m) R(d+m, m)); eegf-factorial reads (d+1)! [y^{d+1}]
/// (e.g.f. of (d+m)! R(d+m, m)).
GFStack riordan_diag_gfs(const TriangleSpec& spec, std::size_t d_max, RiordanMode mode,
                         std::size_t order = kDefaultOrder);

/// Dispatches on TriangleSpec::kind; the mode only matters for Riordan input.
GFStack diag_gfs(const TriangleSpec& spec, std::size_t d_max, RiordanMode mode = RiordanMode::kLgfPascal,
                 std::size_t order = kDefaultOrder);

struct NumeratorRow {
  std::size_t d = 0;
  Poly coeffs;
  bool ok = true;
  std::string error;
};

/// Row d = numerator coefficients of entry d. kNarayana divides row d >= 1 by
/// (d+1) t, kIndex divides every row by d+1. Irregular denominators or
/// non-divisible numerators mark the row as failed instead of throwing.
std::vector<NumeratorRow> numerator_triangle(const GFStack& stack, Normalization norm = Normalization::kNone);

struct VerifyCell {
  std::size_t d = 0;
  std::size_t m = 0;
  Rational direct;  // from the built triangle
  Rational closed;  // from the closed form
  bool pass = false;
};

/// A gap between a computed closed form and a tabulated reference value.
struct ReferenceCheck {
  std::string table;
  std::size_t d = 0;
  std::string reference;  // as tabulated
  std::string computed;
  bool match = false;
};

struct VerifyReport {
  TriangleSpec spec;
  GFSource source = GFSource::kShefferEgf;
  Weighting weighting = Weighting::kPlain;
  std::size_t d_max = 0;
  std::size_t m_max = 0;
  std::vector<DiagonalGF> entries;
  std::vector<VerifyCell> cells;
  /// compose(y, x) is the identity series.
  bool round_trip = false;
  /// Direct H-form Lagrange inversion agrees with compose(H, revert(y)).
  bool lagrange_paths_agree = false;
  std::vector<ReferenceCheck> reference;

  /// Oracle consistency only; reference mismatches are informational.
  bool passed() const;
  std::size_t failures() const;
};

/// Expands each closed form to m_max terms and compares them exactly with the
/// diagonals of the directly built triangle (plain / pascal-product /
/// factorial-product by source), plus reversion and two-path checks and any
/// tabulated reference values for the entry.
VerifyReport verify_stack(const TriangleSpec& spec, std::size_t d_max, std::size_t m_max,
                          RiordanMode mode = RiordanMode::kLgfPascal, std::size_t order = kDefaultOrder);

/// Renders numerator over (1 - c t)^k, e.g. "(t + 2*t^2)/(1 - t)^5";
/// irregular shapes fall back to num/den.
std::string display(const DiagonalGF& gf);

}  // namespace tforge
