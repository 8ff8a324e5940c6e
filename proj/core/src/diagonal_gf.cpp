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

#include "tforge/diagonal_gf.hpp"

#include <algorithm>

#include "tforge/error.hpp"
#include "tforge/reference_tables.hpp"

namespace tforge {

const char* to_string(GFSource s) noexcept {
  switch (s) {
    case GFSource::kShefferEgf: return "sheffer-egf";
    case GFSource::kRiordanLgf: return "riordan-lgf";
    case GFSource::kRiordanEegf: return "riordan-eegf";
  }
  return "sheffer-egf";
}

const char* to_string(RiordanMode m) noexcept {
  return m == RiordanMode::kLgfPascal ? "lgf-pascal" : "eegf-factorial";
}

const char* to_string(Normalization n) noexcept {
  switch (n) {
    case Normalization::kNone: return "none";
    case Normalization::kNarayana: return "narayana";
    case Normalization::kIndex: return "index";
  }
  return "none";
}

DenominatorShape denominator_shape(const RatFunc& gf) {
  DenominatorShape shape;
  const Poly& den = gf.den();  // monic
  const Rational d0 = den.coeff(0);
  shape.denominator = d0.is_zero() ? den : den * d0.inverse();
  const int k = den.degree();
  if (k == 0) {
    shape.regular = true;
    shape.c = Rational(0);
    shape.k = 0;
    return shape;
  }
  // monic (t - r)^k has t^{k-1} coefficient -k r
  const Rational r = -den.coeff(static_cast<std::size_t>(k - 1)) / Rational(k);
  if (r.is_zero()) return shape;
  if (pow(Poly{-r, Rational(1)}, static_cast<std::size_t>(k)) != den) return shape;
  shape.regular = true;
  shape.c = r.inverse();
  shape.k = static_cast<std::size_t>(k);
  return shape;
}

std::vector<Rational> DiagonalGF::expansion(std::size_t count) const {
  if (count == 0) return {};
  return ratfunc_taylor(gf, count - 1);
}

std::vector<Rational> DiagonalGF::sequence(std::size_t count) const {
  std::vector<Rational> out = expansion(count);
  if (source == GFSource::kRiordanEegf)
    for (std::size_t m = 0; m < out.size(); ++m) out[m] *= factorial(static_cast<unsigned>(m));
  return out;
}

RatFuncSeries lagrange_input(const TriangleSpec& spec, std::size_t order) {
  const SpecSeries ser = evaluate_spec(spec, order);
  RatFuncSeries y(order);
  for (std::size_t k = 1; k <= order; ++k) {
    const Rational lin = k == 1 ? Rational(1) : Rational(0);
    y[k] = RatFunc(Poly{lin, -ser.f[k]});
  }
  return y;
}

namespace {

DiagonalGF make_entry(std::size_t d, RatFunc gf, Weighting w, GFSource src) {
  DiagonalGF e;
  e.d = d;
  e.shape = denominator_shape(gf);
  const Rational d0 = gf.den().coeff(0);
  e.numerator = d0.is_zero() ? gf.num() : gf.num() * d0.inverse();
  e.gf = std::move(gf);
  e.weighting = w;
  e.source = src;
  return e;
}

GFStack build_stack(const TriangleSpec& spec, std::size_t d_max, std::size_t order, Wrapper wrapper,
                    GFSource source, Weighting weighting) {
  if (order == 0 || d_max + 1 > order)
    throw Error(ErrorCode::kOutOfRange, "d_max " + std::to_string(d_max) + " needs truncation order >= " +
                                            std::to_string(d_max + 1) + " (have " + std::to_string(order) +
                                            "; raise TFORGE_ORDER)");
  GFStack stack;
  stack.spec = spec;
  stack.wrapper = wrapper;
  stack.source = source;
  stack.weighting = weighting;
  stack.order = order;
  stack.y = lagrange_input(spec, order);
  stack.reversion = revert(stack.y);
  // H = integral of g, so H(0) = 0 and the composition has no constant term.
  const RationalSeries g = evaluate_spec(spec, order).g.truncate(order - 1);
  const RationalSeries h = integrate(g);
  stack.composed = compose(h, stack.reversion);
  stack.composed[0] = RatFunc();

  for (std::size_t d = 0; d <= d_max; ++d) {
    const Rational weight = wrapper == Wrapper::kFactorial ? factorial(static_cast<unsigned>(d + 1))
                                                           : Rational(static_cast<std::int64_t>(d + 1));
    stack.entries.push_back(make_entry(d, stack.composed[d + 1] * weight, weighting, source));
  }
  return stack;
}

}  // namespace

GFStack sheffer_diag_gfs(const TriangleSpec& spec, std::size_t d_max, std::size_t order) {
  if (spec.kind != TriangleKind::kSheffer) throw Error(ErrorCode::kKindMismatch, "sheffer_diag_gfs needs a Sheffer spec");
  return build_stack(spec, d_max, order, Wrapper::kFactorial, GFSource::kShefferEgf, Weighting::kPlain);
}

GFStack riordan_diag_gfs(const TriangleSpec& spec, std::size_t d_max, RiordanMode mode, std::size_t order) {
  if (spec.kind != TriangleKind::kRiordan) throw Error(ErrorCode::kKindMismatch, "riordan_diag_gfs needs a Riordan spec");
  if (mode == RiordanMode::kLgfPascal)
    return build_stack(spec, d_max, order, Wrapper::kLogarithmic, GFSource::kRiordanLgf, Weighting::kPascalProduct);
  return build_stack(spec, d_max, order, Wrapper::kFactorial, GFSource::kRiordanEegf, Weighting::kFactorialProduct);
}

GFStack diag_gfs(const TriangleSpec& spec, std::size_t d_max, RiordanMode mode, std::size_t order) {
  return spec.kind == TriangleKind::kSheffer ? sheffer_diag_gfs(spec, d_max, order)
                                             : riordan_diag_gfs(spec, d_max, mode, order);
}

std::vector<NumeratorRow> numerator_triangle(const GFStack& stack, Normalization norm) {
  std::vector<NumeratorRow> rows;
  for (const auto& e : stack.entries) {
    NumeratorRow row;
    row.d = e.d;
    row.coeffs = e.numerator;
    if (!e.shape.regular) {
      row.ok = false;
      row.error = "irregular denominator " + e.shape.denominator.str();
      rows.push_back(std::move(row));
      continue;
    }
    const Rational index(static_cast<std::int64_t>(e.d + 1));
    if (norm == Normalization::kIndex) {
      row.coeffs = e.numerator * index.inverse();
    } else if (norm == Normalization::kNarayana && e.d >= 1) {
      const auto [q, r] = divmod(e.numerator, Poly{Rational(0), index});
      if (!r.is_zero()) {
        row.ok = false;
        row.error = "numerator " + e.numerator.str() + " is not divisible by " + index.str() + "*t";
      } else {
        row.coeffs = q;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const VerifyCell& c) { return !c.pass; }));
  if (!round_trip) ++n;
  if (!lagrange_paths_agree) ++n;
  return n;
}

namespace {

std::string render_denominator(const Rational& c, std::size_t k) {
  const Rational mag = c.abs();
  std::string den = std::string(c.sign() < 0 ? "(1 + " : "(1 - ") + (mag.is_one() ? "" : mag.str() + "*") + "t)";
  if (k > 1) den += "^" + std::to_string(k);
  return den;
}

std::string render_reference(const ReferenceEntry& e) {
  std::vector<Rational> coeffs(e.numerator.begin(), e.numerator.end());
  return "(" + Poly(std::move(coeffs)).str() + ")/" + render_denominator(Rational(e.c), e.k);
}

RatFunc reference_value(const ReferenceEntry& e) {
  std::vector<Rational> coeffs(e.numerator.begin(), e.numerator.end());
  return RatFunc(Poly(std::move(coeffs)), Poly::one_minus_ct_pow(Rational(e.c), e.k));
}

}  // namespace

VerifyReport verify_stack(const TriangleSpec& spec, std::size_t d_max, std::size_t m_max, RiordanMode mode,
                          std::size_t order) {
  const GFStack stack = diag_gfs(spec, d_max, mode, order);
  VerifyReport report;
  report.spec = spec;
  report.source = stack.source;
  report.weighting = stack.weighting;
  report.d_max = d_max;
  report.m_max = m_max;
  report.entries = stack.entries;

  const Triangle tri = build_triangle(spec, d_max + m_max);
  for (const auto& e : stack.entries) {
    const DiagonalSeq direct = diagonal(tri, e.d, m_max, stack.weighting);
    const std::vector<Rational> closed = e.sequence(m_max);
    for (std::size_t m = 0; m < m_max; ++m)
      report.cells.push_back({e.d, m, direct.terms[m], closed[m], direct.terms[m] == closed[m]});
  }

  report.round_trip = compose(stack.y, stack.reversion) == RatFuncSeries::identity(order);

  const RationalSeries g = evaluate_spec(spec, order).g.truncate(order - 1);
  RatFuncSeries direct_h = lagrange_H(stack.y, integrate(g));
  report.lagrange_paths_agree = direct_h == stack.composed;

  const bool table_mode = spec.kind == TriangleKind::kSheffer || mode == RiordanMode::kLgfPascal;
  if (table_mode) {
    for (const ReferenceTable* table : reference_tables_for(spec.name)) {
      for (const auto& ref : table->entries) {
        if (ref.d > d_max) continue;
        RatFunc computed;
        if (table->quantity == ReferenceQuantity::kStack) {
          computed = stack.entries[ref.d].gf;
        } else {
          computed = stack.reversion[ref.d + 1] * factorial(static_cast<unsigned>(ref.d + 1));
        }
        const DiagonalGF shown = make_entry(ref.d, computed, stack.weighting, stack.source);
        report.reference.push_back(
            {table->label, ref.d, render_reference(ref), display(shown), reference_value(ref) == computed});
      }
    }
  }
  return report;
}

std::string display(const DiagonalGF& gf) {
  if (!gf.shape.regular) return gf.gf.str();
  if (gf.shape.k == 0) return gf.numerator.str();
  std::size_t terms = 0;
  for (const auto& c : gf.numerator.coeffs()) terms += c.is_zero() ? 0 : 1;
  const std::string num = gf.numerator.str();
  return (terms > 1 ? "(" + num + ")" : num) + "/" + render_denominator(gf.shape.c, gf.shape.k);
}

}  // namespace tforge
