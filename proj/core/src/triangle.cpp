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

#include "tforge/triangle.hpp"

#include <algorithm>

#include "tforge/error.hpp"
#include "tforge/series.hpp"

namespace tforge {

Triangle::Triangle(TriangleSpec spec, std::vector<std::vector<Rational>> rows)
    : spec_(std::move(spec)), rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n) rows_[n].resize(n + 1);
}

Rational Triangle::operator()(std::size_t n, std::size_t m) const {
  if (n >= rows_.size()) throw Error(ErrorCode::kOutOfRange, "row " + std::to_string(n) + " not built");
  return m <= n ? rows_[n][m] : Rational(0);
}

bool Triangle::all_integers() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Rational& q) { return q.is_integer(); });
  });
}

Triangle build_triangle(const TriangleSpec& spec, std::size_t rows) {
  if (rows == 0) return Triangle(spec, {});
  const std::size_t order = rows - 1;
  const SpecSeries ser = evaluate_spec(spec, order);
  const RationalSeries& g = ser.g;
  const RationalSeries& f = ser.f;
  const bool sheffer = spec.kind == TriangleKind::kSheffer;

  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) out[n].resize(n + 1);

  // column m has generating function g f^m (divided by m! for Sheffer)
  RationalSeries column = g.truncate(order);
  for (std::size_t m = 0; m < rows; ++m) {
    if (m > 0) column = column * f;
    const Rational col_scale = sheffer ? factorial(static_cast<unsigned>(m)).inverse() : Rational(1);
    for (std::size_t n = m; n < rows; ++n) {
      Rational v = column[n] * col_scale;
      if (sheffer) v *= factorial(static_cast<unsigned>(n));
      out[n][m] = std::move(v);
    }
  }
  return Triangle(spec, std::move(out));
}

std::vector<std::vector<Rational>> multiply(const Triangle& a, const Triangle& b) {
  const std::size_t n = std::min(a.rows(), b.rows());
  std::vector<std::vector<Rational>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].resize(i + 1);
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = j; k <= i; ++k) out[i][j] += a(i, k) * b(k, j);
  }
  return out;
}

const char* to_string(Weighting w) noexcept {
  switch (w) {
    case Weighting::kPlain: return "plain";
    case Weighting::kPascalProduct: return "pascal-product";
    case Weighting::kFactorialProduct: return "factorial-product";
  }
  return "plain";
}

DiagonalSeq diagonal(const Triangle& tri, std::size_t d, std::size_t count, Weighting weighting) {
  if (d + count > tri.rows())
    throw Error(ErrorCode::kOutOfRange, "diagonal " + std::to_string(d) + " with " + std::to_string(count) +
                                            " terms needs " + std::to_string(d + count) + " rows, triangle has " +
                                            std::to_string(tri.rows()));
  DiagonalSeq seq{d, weighting, {}};
  seq.terms.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    Rational v = tri(d + m, m);
    switch (weighting) {
      case Weighting::kPlain:
        break;
      case Weighting::kPascalProduct:
        v *= binomial(static_cast<std::int64_t>(d + m), static_cast<std::int64_t>(m));
        break;
      case Weighting::kFactorialProduct:
        v *= factorial(static_cast<unsigned>(d + m));
        break;
    }
    seq.terms.push_back(std::move(v));
  }
  return seq;
}

Rational row_polynomial_eval(const Triangle& tri, std::size_t n, const Rational& x) {
  return row_polynomial(tri, n).eval(x);
}

Poly row_polynomial(const Triangle& tri, std::size_t n) {
  if (n >= tri.rows()) throw Error(ErrorCode::kOutOfRange, "row " + std::to_string(n) + " not built");
  return Poly(tri.row(n));
}

}  // namespace tforge
