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

#include "tforge/spec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "tforge/error.hpp"

namespace tforge {

const char* to_string(TriangleKind kind) noexcept {
  return kind == TriangleKind::kSheffer ? "Sheffer" : "Riordan";
}

SpecSeries evaluate_spec(const TriangleSpec& spec, std::size_t order) {
  const std::size_t n = std::max<std::size_t>(order, 1);
  RationalSeries g = expr_to_series(spec.g, spec.params, n);
  RationalSeries f = expr_to_series(spec.f, spec.params, n);
  const char* gname = spec.kind == TriangleKind::kSheffer ? "g" : "G";
  const char* fname = spec.kind == TriangleKind::kSheffer ? "f" : "F";
  if (!g[0].is_one())
    throw Error(ErrorCode::kInvalidSpec, std::string(gname) + "(0) must be 1, got " + g[0].str());
  if (!f[0].is_zero())
    throw Error(ErrorCode::kInvalidSpec, std::string(fname) + "(0) must be 0, got " + f[0].str());
  if (f[1].is_zero()) throw Error(ErrorCode::kInvalidSpec, std::string(fname) + "'(0) must be nonzero");
  if (order == 0) return {g.truncate(0), f.truncate(0)};
  return {std::move(g), std::move(f)};
}

// ---------------------------------------------------------------------------
// Inline specs

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> split_items(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',' || s[i] == ';') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

TriangleSpec parse_inline_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError(ErrorCode::kSyntax, 0, "inline spec must start with 'sheffer:' or 'riordan:'");
  TriangleSpec spec;
  const std::string kind = lower(trim(text.substr(0, colon)));
  if (kind == "sheffer") {
    spec.kind = TriangleKind::kSheffer;
  } else if (kind == "riordan") {
    spec.kind = TriangleKind::kRiordan;
  } else {
    throw ParseError(ErrorCode::kSyntax, 0, "unknown triangle kind '" + kind + "'");
  }

  bool have_g = false, have_f = false, in_params = false;
  std::string g_text, f_text;
  std::size_t g_at = 0, f_at = 0;
  const std::string_view body = text.substr(colon + 1);
  std::size_t cursor = colon + 1;
  for (std::string_view item : split_items(body)) {
    const std::size_t item_at = text.find(item, cursor);
    cursor = item_at == std::string_view::npos ? cursor : item_at + item.size();
    if (item.empty()) continue;
    if (lower(item.substr(0, std::min<std::size_t>(item.size(), 7))) == "params:") {
      in_params = true;
      item = trim(item.substr(7));
      if (item.empty()) continue;
    }
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(ErrorCode::kSyntax, item_at, "expected 'key=value' in inline spec");
    const std::string key(trim(item.substr(0, eq)));
    const std::string_view value = trim(item.substr(eq + 1));
    const std::size_t value_at = text.find(value, item_at);
    if (in_params) {
      try {
        spec.params[key] = eval_constant(parse_expr(value), spec.params);
      } catch (const ParseError& err) {
        throw ParseError(err.code(), value_at + err.offset(), "bad parameter '" + key + "'");
      }
      continue;
    }
    const std::string k = lower(key);
    if (k == "g") {
      g_text = value;
      g_at = value_at;
      have_g = true;
    } else if (k == "f") {
      f_text = value;
      f_at = value_at;
      have_f = true;
    } else {
      throw ParseError(ErrorCode::kSyntax, item_at, "unknown inline spec key '" + key + "'");
    }
  }
  if (!have_f) throw ParseError(ErrorCode::kSyntax, text.size(), "inline spec needs f=<expr>");
  auto parse_at = [](const std::string& src, std::size_t at) {
    try {
      return parse_expr(src);
    } catch (const ParseError& err) {
      // Re-anchor the offset to the full inline text.
      std::string msg = err.what();
      msg = msg.substr(0, msg.rfind(" at offset "));
      throw ParseError(err.code(), at + err.offset(), msg);
    }
  };
  if (have_g) spec.g = parse_at(g_text, g_at);
  spec.f = parse_at(f_text, f_at);
  return spec;
}

std::string to_inline_string(const TriangleSpec& spec) {
  std::string out = spec.kind == TriangleKind::kSheffer ? "sheffer: " : "riordan: ";
  out += "g=" + to_string(spec.g) + ", f=" + to_string(spec.f);
  if (!spec.params.empty()) {
    out += ", params: ";
    bool first = true;
    for (const auto& [k, v] : spec.params) {
      if (!first) out += ", ";
      out += k + "=" + v.str();
      first = false;
    }
  }
  return out;
}

TriangleSpec sheffer_product(const TriangleSpec& a, const TriangleSpec& b) {
  if (a.kind != TriangleKind::kSheffer || b.kind != TriangleKind::kSheffer)
    throw Error(ErrorCode::kKindMismatch, "Sheffer product needs two Sheffer specs");
  const Expr g1 = bind(a.g, a.params);
  const Expr f1 = bind(a.f, a.params);
  const Expr g2 = bind(b.g, b.params);
  const Expr f2 = bind(b.f, b.params);
  TriangleSpec out;
  out.kind = TriangleKind::kSheffer;
  out.g = g1 * substitute(g2, f1);
  out.f = substitute(f2, f1);
  if (!a.name.empty() && !b.name.empty()) out.name = a.name + "*" + b.name;
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"stirling2", TriangleKind::kSheffer, "1", "exp(s)-1", "A048993", {}, "Stirling numbers of the second kind"},
      {"stirling1", TriangleKind::kSheffer, "1", "-log(1-s)", "A132393", {}, "unsigned Stirling numbers of the first kind"},
      {"pascal-sheffer", TriangleKind::kSheffer, "exp(s)", "s", "", {}, "Pascal triangle as an Appell-type Sheffer matrix"},
      {"P.S2", TriangleKind::kSheffer, "exp(s)", "exp(s)-1", "", {}, "Pascal times Stirling2"},
      {"charlier", TriangleKind::kSheffer, "exp(s)", "-log(1-s)", "A094816", {}, "Charlier polynomial coefficients (Pascal times |Stirling1|)"},
      {"S2[d,a]", TriangleKind::kSheffer, "exp(a*s)", "exp(d*s)-1", "", {"d", "a"}, "generalized Stirling2 triangles"},
      {"S1phat[d,a]", TriangleKind::kSheffer, "(1-d*s)^(-a/d)", "-(1/d)*log(1-d*s)", "", {"d", "a"},
       "generalized signless Stirling1 triangles"},
      {"pascal-variant", TriangleKind::kRiordan, "1", "x/(1-x)", "A097805", {}, "associated Pascal variant"},
      {"pascal", TriangleKind::kRiordan, "1/(1-x)", "x/(1-x)", "A007318", {}, "Pascal triangle"},
      {"A135278", TriangleKind::kRiordan, "1/(1-x)^2", "x/(1-x)", "", {}, "generalized Pascal triangle"},
  };
  return entries;
}

namespace {

const std::vector<std::pair<std::string, std::string>>& family_aliases() {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"A154537", "S2[2,1]"},
      {"A282629", "S2[3,1]"},
      {"A028338", "S1phat[2,1]"},
      {"A286718", "S1phat[3,1]"},
  };
  return aliases;
}

[[noreturn]] void unknown_entry(std::string_view name) {
  std::string listing;
  for (const auto& e : catalog()) {
    if (!listing.empty()) listing += ", ";
    listing += e.name;
  }
  throw Error(ErrorCode::kUnknownCatalogEntry,
              "unknown catalog entry '" + std::string(name) + "'; available: " + listing);
}

TriangleSpec from_entry(const CatalogEntry& e, Bindings params, std::string name) {
  TriangleSpec spec;
  spec.kind = e.kind;
  spec.g = parse_expr(e.g);
  spec.f = parse_expr(e.f);
  spec.params = std::move(params);
  spec.name = std::move(name);
  return spec;
}

}  // namespace

TriangleSpec catalog_lookup(std::string_view name) {
  for (const auto& [alias, target] : family_aliases())
    if (name == alias) return catalog_lookup(target);

  const auto bracket = name.find('[');
  if (bracket != std::string_view::npos) {
    const std::string_view family = name.substr(0, bracket);
    const CatalogEntry* entry = nullptr;
    for (const auto& e : catalog())
      if (!e.family_params.empty() && std::string_view(e.name).substr(0, e.name.find('[')) == family) entry = &e;
    if (entry == nullptr || name.back() != ']') unknown_entry(name);
    const std::string_view args = name.substr(bracket + 1, name.size() - bracket - 2);
    const auto comma = args.find(',');
    std::int64_t d = 0, a = 0;
    try {
      if (comma == std::string_view::npos) throw Error(ErrorCode::kSyntax, "");
      const Rational dq = Rational::parse(trim(args.substr(0, comma)));
      const Rational aq = Rational::parse(trim(args.substr(comma + 1)));
      if (!dq.is_integer() || !aq.is_integer()) throw Error(ErrorCode::kSyntax, "");
      d = dq.numerator().get_si();
      a = aq.numerator().get_si();
    } catch (const Error&) {
      throw Error(ErrorCode::kCatalogConstraint,
                  "family instance '" + std::string(name) + "' needs integer arguments [d,a]");
    }
    const std::string label = std::string(family) + "[" + std::to_string(d) + "," + std::to_string(a) + "]";
    if (d < 1) throw Error(ErrorCode::kCatalogConstraint, label + ": d must be >= 1");
    if (a < 0) throw Error(ErrorCode::kCatalogConstraint, label + ": a must be >= 0");
    if (std::gcd(d, a) != 1) throw Error(ErrorCode::kCatalogConstraint, label + ": gcd(d, a) must be 1");
    if (d == 1 && a != 0) throw Error(ErrorCode::kCatalogConstraint, label + ": d = 1 requires a = 0");
    return from_entry(*entry, Bindings{{"d", Rational(d)}, {"a", Rational(a)}}, label);
  }

  for (const auto& e : catalog()) {
    if (!e.family_params.empty()) continue;
    if (name == e.name || (!e.oeis.empty() && name == e.oeis)) return from_entry(e, {}, e.name);
  }
  unknown_entry(name);
}

std::vector<std::string> verification_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) {
    if (e.family_params.empty()) {
      out.push_back(e.name);
    } else {
      const std::string family = e.name.substr(0, e.name.find('['));
      out.push_back(family + "[2,1]");
      out.push_back(family + "[3,1]");
    }
  }
  return out;
}

}  // namespace tforge
