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
#include <vector>

#include "tforge/poly.hpp"
#include "tforge/rational.hpp"
#include "tforge/spec.hpp"

namespace tforge {

inline constexpr std::size_t kDefaultRows = 16;

/// Lower-triangular array T(n, m), 0 <= m <= n < rows(), built from a spec.
class Triangle {
 public:
  Triangle(TriangleSpec spec, std::vector<std::vector<Rational>> rows);

  const TriangleSpec& spec() const { return spec_; }
  TriangleKind kind() const { return spec_.kind; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }
  const std::vector<std::vector<Rational>>& entries() const { return rows_; }
  /// Zero above the diagonal.
  Rational operator()(std::size_t n, std::size_t m) const;
  bool all_integers() const;

 private:
  TriangleSpec spec_;
  std::vector<std::vector<Rational>> rows_;
};

/// Sheffer: S(n, m) = n! [s^n] g f^m / m!.  Riordan: R(n, m) = [x^n] G F^m.
Triangle build_triangle(const TriangleSpec& spec, std::size_t rows = kDefaultRows);

/// Matrix product of two lower-triangular arrays, truncated to the smaller size.
std::vector<std::vector<Rational>> multiply(const Triangle& a, const Triangle& b);

enum class Weighting { kPlain, kPascalProduct, kFactorialProduct };

const char* to_string(Weighting w) noexcept;

struct DiagonalSeq {
  std::size_t d = 0;
  Weighting weighting = Weighting::kPlain;
  std::vector<Rational> terms;
};

/// terms[m] = w(d, m) T(d + m, m) for m < count, with w = 1, binom(d+m, m)
/// or (d+m)!. Throws Error(kOutOfRange) unless d + count <= rows().
DiagonalSeq diagonal(const Triangle& tri, std::size_t d, std::size_t count, Weighting weighting = Weighting::kPlain);

/// sum_m T(n, m) x^m
Rational row_polynomial_eval(const Triangle& tri, std::size_t n, const Rational& x);
Poly row_polynomial(const Triangle& tri, std::size_t n);

}  // namespace tforge
