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

#include "tforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <future>
#include <ostream>
#include <sstream>
#include <variant>

#include "tforge/error.hpp"

namespace tforge::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<Rational>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].str();
  }
  return out;
}

json rational_array(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += csv_field(f);
    first = false;
  }
  return out + "\n";
}

std::string label(const TriangleSpec& spec) { return spec.name.empty() ? to_inline_string(spec) : spec.name; }

json spec_json(const TriangleSpec& spec) {
  json j;
  j["name"] = label(spec);
  j["kind"] = to_string(spec.kind);
  j["g"] = to_string(spec.g);
  j["f"] = to_string(spec.f);
  json params = json::object();
  for (const auto& [k, v] : spec.params) params[k] = v.str();
  j["params"] = std::move(params);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string heading(const TriangleSpec& spec) {
  const bool sheffer = spec.kind == TriangleKind::kSheffer;
  return label(spec) + " (" + to_string(spec.kind) + ", " + (sheffer ? "g=" : "G=") + to_string(spec.g) + ", " +
         (sheffer ? "f=" : "F=") + to_string(spec.f) + ")";
}

Weighting parse_weighting(std::string_view text) {
  if (text == "plain") return Weighting::kPlain;
  if (text == "pascal-product") return Weighting::kPascalProduct;
  if (text == "factorial-product") return Weighting::kFactorialProduct;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown weighting '" + std::string(text) + "' (expected plain, pascal-product or factorial-product)");
}

RiordanMode parse_mode(std::string_view text) {
  if (text == "lgf-pascal") return RiordanMode::kLgfPascal;
  if (text == "eegf-factorial") return RiordanMode::kEegfFactorial;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mode '" + std::string(text) + "' (expected lgf-pascal or eegf-factorial)");
}

Normalization parse_normalization(std::string_view text) {
  if (text == "none") return Normalization::kNone;
  if (text == "narayana") return Normalization::kNarayana;
  if (text == "index") return Normalization::kIndex;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown normalization '" + std::string(text) + "' (expected none, narayana or index)");
}

json entry_json(const DiagonalGF& e, const NumeratorRow* normalized, std::size_t terms) {
  json j;
  j["d"] = e.d;
  j["closed_form"] = display(e);
  j["numerator"] = rational_array(e.numerator.coeffs());
  if (e.shape.regular) {
    j["den_base"] = e.shape.c.str();
    j["den_power"] = e.shape.k;
  } else {
    j["den_base"] = nullptr;
    j["den_power"] = nullptr;
    j["denominator"] = e.shape.denominator.str();
  }
  if (normalized) {
    if (normalized->ok) {
      j["normalized"] = rational_array(normalized->coeffs.coeffs());
    } else {
      j["normalized"] = nullptr;
      j["normalization_error"] = normalized->error;
    }
  }
  j["expansion"] = rational_array(e.expansion(terms));
  j["sequence"] = rational_array(e.sequence(terms));
  return j;
}

std::string shape_cell(const DiagonalGF& e, bool base) {
  if (!e.shape.regular) return base ? "irregular" : "";
  return base ? e.shape.c.str() : std::to_string(e.shape.k);
}

std::string normalized_cell(const NumeratorRow& row) { return row.ok ? join(row.coeffs.coeffs(), " ") : row.error; }

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "markdown") return Format::kMarkdown;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + std::string(text) + "' (expected json, csv or markdown)");
}

std::size_t truncation_order() {
  const char* env = std::getenv("TFORGE_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOrder;
  const std::string text(env);
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || value == 0 || value > 64)
    throw Error(ErrorCode::kInvalidArgument, "TFORGE_ORDER must be an integer in 1..64, got '" + text + "'");
  return value;
}

TriangleSpec resolve_source(const std::string& name, const std::string& inline_spec) {
  if (name.empty() == inline_spec.empty())
    throw Error(ErrorCode::kInvalidArgument, "exactly one of --name or --spec is required");
  return name.empty() ? parse_inline_spec(inline_spec) : catalog_lookup(name);
}

Document cmd_catalog(Format format) {
  const auto& entries = catalog();
  std::string out;
  switch (format) {
    case Format::kJson: {
      json arr = json::array();
      for (const auto& e : entries) {
        json j;
        j["name"] = e.name;
        j["kind"] = to_string(e.kind);
        j["g"] = e.g;
        j["f"] = e.f;
        j["oeis"] = e.oeis;
        j["family_params"] = e.family_params;
        j["description"] = e.description;
        arr.push_back(std::move(j));
      }
      out = dump(arr);
      break;
    }
    case Format::kCsv:
      out = csv_row({"name", "kind", "g", "f", "oeis", "description"});
      for (const auto& e : entries) out += csv_row({e.name, to_string(e.kind), e.g, e.f, e.oeis, e.description});
      break;
    case Format::kMarkdown:
      out = "# Catalog\n\n";
      for (const auto& e : entries) {
        const bool sheffer = e.kind == TriangleKind::kSheffer;
        out += "- " + e.name + " " + to_string(e.kind) + (sheffer ? " g=" : " G=") + e.g + (sheffer ? " f=" : " F=") + e.f;
        if (!e.oeis.empty()) out += " (" + e.oeis + ")";
        out += ": " + e.description + "\n";
      }
      break;
  }
  return {out, 0};
}

Document cmd_triangle(const TriangleSpec& spec, std::size_t rows, Format format) {
  const Triangle tri = build_triangle(spec, rows);
  std::string out;
  switch (format) {
    case Format::kJson: {
      json j;
      j["spec"] = spec_json(spec);
      json arr = json::array();
      for (const auto& row : tri.entries()) arr.push_back(rational_array(row));
      j["rows"] = std::move(arr);
      out = dump(j);
      break;
    }
    case Format::kCsv:
      out = csv_row({"n", "m", "value"});
      for (std::size_t n = 0; n < tri.rows(); ++n)
        for (std::size_t m = 0; m <= n; ++m) out += csv_row({std::to_string(n), std::to_string(m), tri(n, m).str()});
      break;
    case Format::kMarkdown:
      out = "# " + heading(spec) + "\n\n| n | row |\n|---|---|\n";
      for (std::size_t n = 0; n < tri.rows(); ++n) out += "| " + std::to_string(n) + " | " + join(tri.row(n), " ") + " |\n";
      break;
  }
  return {out, 0};
}

Document cmd_diagonal(const TriangleSpec& spec, std::size_t d, std::size_t count, Weighting weighting,
                      Format format) {
  const Triangle tri = build_triangle(spec, d + count);
  const DiagonalSeq seq = diagonal(tri, d, count, weighting);
  std::string out;
  switch (format) {
    case Format::kJson: {
      json j;
      j["spec"] = spec_json(spec);
      j["d"] = d;
      j["weighting"] = to_string(weighting);
      j["terms"] = rational_array(seq.terms);
      out = dump(j);
      break;
    }
    case Format::kCsv:
      out = csv_row({"m", "value"});
      for (std::size_t m = 0; m < seq.terms.size(); ++m) out += csv_row({std::to_string(m), seq.terms[m].str()});
      break;
    case Format::kMarkdown:
      out = "# " + heading(spec) + "\n\ndiagonal d=" + std::to_string(d) + " (" + to_string(weighting) +
            "): " + join(seq.terms, ", ") + "\n";
      break;
  }
  return {out, 0};
}

Document cmd_diag_gf(const TriangleSpec& spec, const StackOptions& options, Format format) {
  const GFStack stack = diag_gfs(spec, options.d_max, options.mode, options.order);
  const bool normalize = options.normalization != Normalization::kNone;
  const std::vector<NumeratorRow> rows = numerator_triangle(stack, options.normalization);
  std::string out;
  switch (format) {
    case Format::kJson: {
      json j;
      j["spec"] = spec_json(spec);
      j["source"] = to_string(stack.source);
      j["weighting"] = to_string(stack.weighting);
      j["normalization"] = to_string(options.normalization);
      j["order"] = stack.order;
      json results = json::array();
      for (std::size_t i = 0; i < stack.entries.size(); ++i)
        results.push_back(entry_json(stack.entries[i], normalize ? &rows[i] : nullptr, options.terms));
      j["results"] = std::move(results);
      out = dump(j);
      break;
    }
    case Format::kCsv:
      out = normalize ? csv_row({"d", "den_base", "den_power", "numerator", "normalized", "expansion"})
                      : csv_row({"d", "den_base", "den_power", "numerator", "expansion"});
      for (std::size_t i = 0; i < stack.entries.size(); ++i) {
        const DiagonalGF& e = stack.entries[i];
        const std::string num = join(e.numerator.coeffs(), " ");
        const std::string exp = join(e.expansion(options.terms), " ");
        out += normalize ? csv_row({std::to_string(e.d), shape_cell(e, true), shape_cell(e, false), num,
                                    normalized_cell(rows[i]), exp})
                         : csv_row({std::to_string(e.d), shape_cell(e, true), shape_cell(e, false), num, exp});
      }
      break;
    case Format::kMarkdown:
      out = "# Diagonal generating functions: " + heading(spec) + "\n\nsource " + to_string(stack.source) +
            ", weighting " + to_string(stack.weighting) + ", truncation order " + std::to_string(stack.order) + "\n\n";
      out += normalize ? "| d | closed form | c | k | " + std::string(to_string(options.normalization)) +
                             " row | expansion |\n|---|---|---|---|---|---|\n"
                       : "| d | closed form | c | k | expansion |\n|---|---|---|---|---|\n";
      for (std::size_t i = 0; i < stack.entries.size(); ++i) {
        const DiagonalGF& e = stack.entries[i];
        out += "| " + std::to_string(e.d) + " | " + display(e) + " | " + shape_cell(e, true) + " | " +
               shape_cell(e, false) + " | ";
        if (normalize) out += normalized_cell(rows[i]) + " | ";
        out += join(e.expansion(options.terms), ", ") + " |\n";
      }
      break;
  }
  return {out, 0};
}

Document cmd_numerators(const TriangleSpec& spec, const StackOptions& options, Format format) {
  const GFStack stack = diag_gfs(spec, options.d_max, options.mode, options.order);
  const std::vector<NumeratorRow> rows = numerator_triangle(stack, options.normalization);
  std::string out;
  switch (format) {
    case Format::kJson: {
      json j;
      j["spec"] = spec_json(spec);
      j["normalization"] = to_string(options.normalization);
      json arr = json::array();
      for (const auto& row : rows) {
        json r;
        r["d"] = row.d;
        r["ok"] = row.ok;
        r["coefficients"] = rational_array(row.coeffs.coeffs());
        if (!row.ok) r["error"] = row.error;
        arr.push_back(std::move(r));
      }
      j["rows"] = std::move(arr);
      out = dump(j);
      break;
    }
    case Format::kCsv:
      out = csv_row({"d", "ok", "coefficients"});
      for (const auto& row : rows)
        out += csv_row({std::to_string(row.d), row.ok ? "true" : "false", normalized_cell(row)});
      break;
    case Format::kMarkdown:
      out = "# Numerator triangle: " + heading(spec) + "\n\nnormalization " + to_string(options.normalization) +
            "\n\n| d | coefficients |\n|---|---|\n";
      for (const auto& row : rows) out += "| " + std::to_string(row.d) + " | " + normalized_cell(row) + " |\n";
      break;
  }
  return {out, 0};
}

namespace {

using VerifyOutcome = std::variant<VerifyReport, std::string>;

json report_json(const TriangleSpec& spec, const VerifyOutcome& outcome) {
  json j;
  j["spec"] = spec_json(spec);
  if (const auto* err = std::get_if<std::string>(&outcome)) {
    j["passed"] = false;
    j["error"] = *err;
    return j;
  }
  const VerifyReport& r = std::get<VerifyReport>(outcome);
  j["source"] = to_string(r.source);
  j["weighting"] = to_string(r.weighting);
  j["passed"] = r.passed();
  j["round_trip"] = r.round_trip;
  j["lagrange_paths_agree"] = r.lagrange_paths_agree;
  json diagonals = json::array();
  for (const auto& e : r.entries) {
    json dj;
    dj["d"] = e.d;
    dj["closed_form"] = display(e);
    std::vector<Rational> direct;
    std::vector<Rational> closed;
    json pass = json::array();
    for (const auto& c : r.cells) {
      if (c.d != e.d) continue;
      direct.push_back(c.direct);
      closed.push_back(c.closed);
      pass.push_back(c.pass);
    }
    dj["direct"] = rational_array(direct);
    dj["closed"] = rational_array(closed);
    dj["pass"] = std::move(pass);
    diagonals.push_back(std::move(dj));
  }
  j["diagonals"] = std::move(diagonals);
  json refs = json::array();
  for (const auto& ref : r.reference) {
    json rj;
    rj["table"] = ref.table;
    rj["d"] = ref.d;
    rj["tabulated"] = ref.reference;
    rj["computed"] = ref.computed;
    rj["match"] = ref.match;
    refs.push_back(std::move(rj));
  }
  j["reference"] = std::move(refs);
  return j;
}

bool outcome_passed(const VerifyOutcome& o) {
  const auto* r = std::get_if<VerifyReport>(&o);
  return r != nullptr && r->passed();
}

std::string report_markdown(const TriangleSpec& spec, const VerifyOutcome& outcome) {
  std::string out = "## " + heading(spec) + "\n\n";
  if (const auto* err = std::get_if<std::string>(&outcome)) return out + "error: " + *err + "\n\n";
  const VerifyReport& r = std::get<VerifyReport>(outcome);
  out += std::string("status ") + (r.passed() ? "PASS" : "FAIL") + ", source " + to_string(r.source) + ", weighting " +
         to_string(r.weighting) + "\n\n";
  out += std::string("- reversion round trip: ") + (r.round_trip ? "pass" : "FAIL") + "\n";
  out += std::string("- two-path Lagrange inversion: ") + (r.lagrange_paths_agree ? "pass" : "FAIL") + "\n\n";
  out += "| d | closed form | direct diagonal | status |\n|---|---|---|---|\n";
  for (const auto& e : r.entries) {
    std::vector<Rational> direct;
    std::string failed;
    for (const auto& c : r.cells) {
      if (c.d != e.d) continue;
      direct.push_back(c.direct);
      if (!c.pass) failed += (failed.empty() ? "" : ",") + std::to_string(c.m);
    }
    out += "| " + std::to_string(e.d) + " | " + display(e) + " | " + join(direct, ", ") + " | " +
           (failed.empty() ? "pass" : "FAIL at m=" + failed) + " |\n";
  }
  if (!r.reference.empty()) {
    out += "\n| table | d | tabulated | computed | |\n|---|---|---|---|---|\n";
    for (const auto& ref : r.reference)
      out += "| " + ref.table + " | " + std::to_string(ref.d) + " | " + ref.reference + " | " + ref.computed + " | " +
             (ref.match ? "match" : "MISMATCH") + " |\n";
  }
  return out + "\n";
}

}  // namespace

Document cmd_verify(const std::vector<TriangleSpec>& specs, const VerifyOptions& options, Format format) {
  std::vector<std::future<VerifyOutcome>> futures;
  futures.reserve(specs.size());
  for (const auto& spec : specs) {
    futures.push_back(std::async(std::launch::async, [&spec, &options]() -> VerifyOutcome {
      try {
        return verify_stack(spec, options.d_max, options.m_max, options.mode, options.order);
      } catch (const Error& e) {
        return std::string(e.what());
      }
    }));
  }
  std::vector<VerifyOutcome> outcomes;
  outcomes.reserve(futures.size());
  for (auto& f : futures) outcomes.push_back(f.get());

  bool all_passed = true;
  for (const auto& o : outcomes) all_passed = all_passed && outcome_passed(o);

  std::string out;
  switch (format) {
    case Format::kJson: {
      json j;
      j["d_max"] = options.d_max;
      j["m_max"] = options.m_max;
      j["order"] = options.order;
      j["passed"] = all_passed;
      json reports = json::array();
      for (std::size_t i = 0; i < specs.size(); ++i) reports.push_back(report_json(specs[i], outcomes[i]));
      j["reports"] = std::move(reports);
      out = dump(j);
      break;
    }
    case Format::kCsv:
      out = csv_row({"name", "d", "m", "direct", "closed", "pass"});
      for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto* r = std::get_if<VerifyReport>(&outcomes[i]);
        if (r == nullptr) {
          out += csv_row({label(specs[i]), "", "", "", std::get<std::string>(outcomes[i]), "false"});
          continue;
        }
        for (const auto& c : r->cells)
          out += csv_row({label(specs[i]), std::to_string(c.d), std::to_string(c.m), c.direct.str(), c.closed.str(),
                          c.pass ? "true" : "false"});
      }
      break;
    case Format::kMarkdown:
      out = "# Verification\n\nd_max " + std::to_string(options.d_max) + ", m_max " + std::to_string(options.m_max) +
            ", truncation order " + std::to_string(options.order) + ": " + (all_passed ? "PASS" : "FAIL") + "\n\n";
      for (std::size_t i = 0; i < specs.size(); ++i) out += report_markdown(specs[i], outcomes[i]);
      break;
  }
  return {out, all_passed ? 0 : 1};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sheffer and Riordan triangles, their diagonals and diagonal generating functions", "tforge"};
  app.require_subcommand(1);

  std::string format_text = "markdown";
  std::string name;
  std::string inline_spec;
  std::size_t rows = kDefaultRows;
  std::size_t d = 0;
  std::size_t count = 10;
  std::string weighting_text = "plain";
  std::size_t d_max = kDefaultDMax;
  std::size_t m_max = kDefaultMMax;
  std::size_t terms = 8;
  std::string mode_text = "lgf-pascal";
  std::string norm_text = "none";

  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", format_text, "json, csv or markdown"); };
  auto add_source = [&](CLI::App* sub) {
    auto* n = sub->add_option("--name", name, "catalog name or A-number");
    auto* s = sub->add_option("--spec", inline_spec, "inline spec, e.g. \"sheffer: g=1, f=exp(s)-1\"");
    n->excludes(s);
  };

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list catalog entries");
  add_format(catalog_cmd);

  CLI::App* triangle_cmd = app.add_subcommand("triangle", "build a triangle");
  add_source(triangle_cmd);
  triangle_cmd->add_option("--rows", rows, "number of rows")->check(CLI::PositiveNumber);
  add_format(triangle_cmd);

  CLI::App* diagonal_cmd = app.add_subcommand("diagonal", "extract a diagonal sequence T(d+m, m)");
  add_source(diagonal_cmd);
  diagonal_cmd->add_option("--d", d, "diagonal index");
  diagonal_cmd->add_option("--count", count, "number of terms");
  diagonal_cmd->add_option("--weighting", weighting_text, "plain, pascal-product or factorial-product");
  add_format(diagonal_cmd);

  CLI::App* diag_gf_cmd = app.add_subcommand("diag-gf", "closed-form diagonal generating functions");
  CLI::App* numerators_cmd = app.add_subcommand("numerators", "numerator triangle of the diagonal gfs");
  for (CLI::App* sub : {diag_gf_cmd, numerators_cmd}) {
    add_source(sub);
    sub->add_option("--dmax", d_max, "largest diagonal index");
    sub->add_option("--mode", mode_text, "Riordan mode: lgf-pascal or eegf-factorial");
    sub->add_option("--normalize", norm_text, "none, narayana or index");
    add_format(sub);
  }
  diag_gf_cmd->add_option("--terms", terms, "expansion terms per entry");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check closed forms against the built triangle");
  verify_cmd->add_option("--name", name, "catalog name, A-number or 'all'")->required();
  verify_cmd->add_option("--dmax", d_max, "largest diagonal index");
  verify_cmd->add_option("--mmax", m_max, "terms compared per diagonal");
  verify_cmd->add_option("--mode", mode_text, "Riordan mode: lgf-pascal or eegf-factorial");
  add_format(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(format_text);
    Document doc;
    if (catalog_cmd->parsed()) {
      doc = cmd_catalog(format);
    } else if (triangle_cmd->parsed()) {
      doc = cmd_triangle(resolve_source(name, inline_spec), rows, format);
    } else if (diagonal_cmd->parsed()) {
      doc = cmd_diagonal(resolve_source(name, inline_spec), d, count, parse_weighting(weighting_text), format);
    } else if (diag_gf_cmd->parsed() || numerators_cmd->parsed()) {
      StackOptions options{d_max, parse_mode(mode_text), parse_normalization(norm_text), terms, truncation_order()};
      const TriangleSpec spec = resolve_source(name, inline_spec);
      doc = diag_gf_cmd->parsed() ? cmd_diag_gf(spec, options, format) : cmd_numerators(spec, options, format);
    } else {
      VerifyOptions options{d_max, m_max, parse_mode(mode_text), truncation_order()};
      std::vector<TriangleSpec> specs;
      if (name == "all") {
        for (const auto& n : verification_names()) specs.push_back(catalog_lookup(n));
      } else {
        specs.push_back(catalog_lookup(name));
      }
      doc = cmd_verify(specs, options, format);
    }
    out << doc.text;
    return doc.exit_code;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tforge::cli
