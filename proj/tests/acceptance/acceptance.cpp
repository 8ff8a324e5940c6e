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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tforge/diagonal_gf.hpp"
#include "tforge/error.hpp"
#include "tforge/spec.hpp"
#include "tforge/triangle.hpp"

namespace {

using namespace tforge;

using Rows = std::vector<std::vector<std::int64_t>>;

std::vector<Rational> ints(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

struct Context {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + x.str();
  return out;
}

// Numerators and (1 - c t)^{2d+1} denominators of rows [from, from + rows.size()).
void expect_rows(Context& ctx, const GFStack& stack, const Rows& rows, std::int64_t c, std::size_t from = 0,
                 Normalization norm = Normalization::kNone) {
  const auto table = numerator_triangle(stack, norm);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t d = from + i;
    const std::string tag = stack.spec.name + " d=" + std::to_string(d);
    if (d >= table.size() || !table[d].ok) {
      ctx.expect(false, tag + " missing numerator");
      continue;
    }
    ctx.expect(table[d].coeffs.coeffs() == ints(rows[i]), tag + " numerator " + join(table[d].coeffs.coeffs()));
    const DiagonalGF& e = stack.entries[d];
    ctx.expect(e.shape.regular && e.shape.c == Rational(c) && e.shape.k == 2 * d + 1, tag + " denominator");
  }
}

// Closed-form sequences against the triangle built directly from the same TriangleSpec.
void expect_matches_triangle(Context& ctx, const GFStack& stack, std::size_t count) {
  const Triangle tri = build_triangle(stack.spec, stack.entries.size() + count);
  for (const auto& e : stack.entries) {
    const auto seq = e.sequence(count);
    for (std::size_t m = 0; m < count; ++m) {
      const auto n = static_cast<std::int64_t>(e.d + m);
      Rational direct = tri(e.d + m, m);
      if (stack.weighting == Weighting::kPascalProduct) direct *= binomial(n, static_cast<std::int64_t>(m));
      if (stack.weighting == Weighting::kFactorialProduct)
        direct *= factorial(static_cast<unsigned>(n)) * binomial(n, static_cast<std::int64_t>(m));
      ctx.expect(seq[m] == direct, stack.spec.name + " d=" + std::to_string(e.d) + " m=" + std::to_string(m));
    }
  }
}

const ReferenceCheck* find_reference(const VerifyReport& r, std::size_t d) {
  for (const auto& ref : r.reference)
    if (ref.d == d && ref.table.find("diagonal") != std::string::npos) return &ref;
  return nullptr;
}

void c1_stirling_second_kind(Context& ctx) {
  const GFStack s = sheffer_diag_gfs(catalog_lookup("stirling2"), 4);
  expect_rows(ctx, s, {{1}, {0, 1}, {0, 1, 2}, {0, 1, 8, 6}, {0, 1, 22, 58, 24}}, 1);
  expect_matches_triangle(ctx, s, 12);
}

void c2_second_diagonal_expansion(Context& ctx) {
  const GFStack s = sheffer_diag_gfs(catalog_lookup("stirling2"), 2);
  ctx.expect(display(s.entries[2]) == "(t + 2*t^2)/(1 - t)^5", "closed form " + display(s.entries[2]));
  ctx.expect(s.entries[2].expansion(9) == ints({0, 1, 7, 25, 65, 140, 266, 462, 750}),
             "expansion " + join(s.entries[2].expansion(9)));
}

void c3_pascal_stirling_product(Context& ctx) {
  const TriangleSpec spec = catalog_lookup("P.S2");
  const GFStack s = sheffer_diag_gfs(spec, 4);
  expect_rows(ctx, s, {{1}, {1, 2}, {1, 8, 6}, {1, 22, 58, 24}}, 1, 1);
  expect_matches_triangle(ctx, s, 12);
  const VerifyReport r = verify_stack(spec, 4, 8);
  ctx.expect(r.passed(), "verify P.S2");
  const ReferenceCheck* ref = find_reference(r, 4);
  ctx.expect(ref != nullptr && !ref->match, "tabulated d=4 entry not reported as a mismatch");
}

void c4_generalized_stirling_second_kind(Context& ctx) {
  const GFStack s = sheffer_diag_gfs(catalog_lookup("S2[2,1]"), 4);
  expect_rows(ctx, s, {{1}, {1, 2}, {1, 16, 12}, {1, 66, 284, 120}, {1, 224, 2872, 5952, 1680}}, 2);
  expect_matches_triangle(ctx, s, 12);
}

void c5_generalized_stirling_first_kind(Context& ctx) {
  const GFStack s = sheffer_diag_gfs(catalog_lookup("S1phat[2,1]"), 4);
  expect_rows(ctx, s, {{1}, {1, 1}, {3, 8, 1}, {15, 71, 33, 1}, {105, 744, 718, 112, 1}}, 1);
  expect_matches_triangle(ctx, s, 12);
  const auto squares = s.entries[1].expansion(12);
  for (std::int64_t n = 0; n < 12; ++n)
    ctx.expect(squares[static_cast<std::size_t>(n)] == Rational((n + 1) * (n + 1)), "d=1 term " + std::to_string(n));
}

void c6_pascal_squared_binomials(Context& ctx) {
  const GFStack s = riordan_diag_gfs(catalog_lookup("pascal"), 4, RiordanMode::kLgfPascal);
  expect_rows(ctx, s, {{1}, {1, 1}, {1, 4, 1}, {1, 9, 9, 1}, {1, 16, 36, 16, 1}}, 1);
  expect_matches_triangle(ctx, s, 12);
  ctx.expect(s.entries[3].expansion(5) == ints({1, 16, 100, 400, 1225}), "d=3 expansion");
}

void c7_associated_pascal_narayana(Context& ctx) {
  const TriangleSpec spec = catalog_lookup("A097805");
  const GFStack s = riordan_diag_gfs(spec, 4, RiordanMode::kLgfPascal);
  expect_rows(ctx, s, {{1}, {1, 1}, {1, 3, 1}, {1, 6, 6, 1}}, 1, 1, Normalization::kNarayana);
  expect_matches_triangle(ctx, s, 12);
  const Triangle tri = build_triangle(spec, 5);
  std::vector<Rational> row4;
  for (std::int64_t m = 0; m <= 4; ++m) row4.push_back(tri(4, static_cast<std::size_t>(m)) * binomial(4, m));
  ctx.expect(row4 == ints({0, 4, 18, 12, 1}), "product row " + join(row4));
}

void c8_generalized_pascal_index(Context& ctx) {
  const GFStack s = riordan_diag_gfs(catalog_lookup("A135278"), 4, RiordanMode::kLgfPascal);
  expect_rows(ctx, s, {{1}, {1}, {1, 1}, {1, 3, 1}, {1, 6, 6, 1}}, 1, 0, Normalization::kIndex);
  expect_matches_triangle(ctx, s, 12);
}

void c9_verify_all(Context& ctx) {
  for (const auto& name : verification_names()) {
    const VerifyReport r = verify_stack(catalog_lookup(name), 6, 12);
    ctx.expect(r.passed(), name + " with " + std::to_string(r.failures()) + " failures");
    ctx.expect(r.cells.size() == 7 * 12, name + " cell count");
  }
}

void c10_reversion_round_trip(Context& ctx) {
  for (const auto& name : verification_names()) {
    const GFStack s = diag_gfs(catalog_lookup(name), 0, RiordanMode::kLgfPascal, 12);
    ctx.expect(compose(s.y, s.reversion) == RatFuncSeries::identity(12), name);
    ctx.expect(compose(s.reversion, s.y) == RatFuncSeries::identity(12), name + " (other side)");
  }
}

void c11_reference_misprints(Context& ctx) {
  for (const auto& name : {"charlier", "S2[3,1]", "S1phat[3,1]"}) {
    const GFStack s = diag_gfs(catalog_lookup(name), 4);
    expect_matches_triangle(ctx, s, 12);
    ctx.expect(verify_stack(catalog_lookup(name), 4, 12).passed(), std::string("verify ") + name);
  }
  const VerifyReport charlier = verify_stack(catalog_lookup("charlier"), 4, 6);
  const ReferenceCheck* ref = find_reference(charlier, 3);
  ctx.expect(ref != nullptr && !ref->match, "charlier d=3 not flagged");
  const VerifyReport s231 = verify_stack(catalog_lookup("S2[3,1]"), 4, 6);
  for (std::size_t d = 1; d <= 4; ++d) {
    const ReferenceCheck* r = find_reference(s231, d);
    ctx.expect(r != nullptr && !r->match, "S2[3,1] d=" + std::to_string(d) + " not flagged");
  }
  const VerifyReport s131 = verify_stack(catalog_lookup("S1phat[3,1]"), 4, 6);
  for (const auto& r : s131.reference) ctx.expect(r.match, "S1phat[3,1] d=" + std::to_string(r.d) + " flagged");
}

struct Criterion {
  const char* id;
  const char* description;
  std::function<void(Context&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"C1", "stirling2 diagonal gfs d<=4 are exact (t-poly)/(1-t)^(2d+1)", c1_stirling_second_kind},
      {"C2", "stirling2 d=2 expands to 0,1,7,25,65,140,266,462,750", c2_second_diagonal_expansion},
      {"C3", "P.S2 numerators d=1..4 and the tabulated d=4 mismatch", c3_pascal_stirling_product},
      {"C4", "S2[2,1] numerators over (1-2t)^(2d+1)", c4_generalized_stirling_second_kind},
      {"C5", "S1phat[2,1] numerators over (1-t)^(2d+1), d=1 gives (n+1)^2", c5_generalized_stirling_first_kind},
      {"C6", "pascal lgf numerators are squared binomials, d=3 gives 1,16,100,400,1225", c6_pascal_squared_binomials},
      {"C7", "A097805 Narayana rows and product row 0,4,18,12,1", c7_associated_pascal_narayana},
      {"C8", "A135278 numerators are (d+1) times Narayana rows", c8_generalized_pascal_index},
      {"C9", "verify d_max=6, m_max=12 passes for every verification entry", c9_verify_all},
      {"C10", "reversion round trip y(x(y)) = y at order 12", c10_reversion_round_trip},
      {"C11", "charlier, S2[3,1], S1phat[3,1] self-consistent with misprints flagged", c11_reference_misprints},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Context ctx;
    try {
      c.run(ctx);
    } catch (const std::exception& e) {
      ctx.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = ctx.problems.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", c.id, c.description);
    for (std::size_t i = 0; i < ctx.problems.size() && i < 5; ++i) std::printf("    %s\n", ctx.problems[i].c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
