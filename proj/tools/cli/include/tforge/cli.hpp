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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tforge/diagonal_gf.hpp"
#include "tforge/spec.hpp"
#include "tforge/triangle.hpp"

namespace tforge::cli {

enum class Format { kJson, kCsv, kMarkdown };

/// "json", "csv" or "markdown"; anything else is Error(kInvalidArgument).
Format parse_format(std::string_view text);

/// TFORGE_ORDER when set to a positive integer, kDefaultOrder when unset.
std::size_t truncation_order();

/// Rendered command output plus the process exit status it implies.
struct Document {
  std::string text;
  int exit_code = 0;
};

/// A catalog name (or A-number) or an inline "sheffer: ..." / "riordan: ..."
/// spec; exactly one of the two must be nonempty.
TriangleSpec resolve_source(const std::string& name, const std::string& inline_spec);

Document cmd_catalog(Format format);

Document cmd_triangle(const TriangleSpec& spec, std::size_t rows, Format format);

Document cmd_diagonal(const TriangleSpec& spec, std::size_t d, std::size_t count, Weighting weighting,
                      Format format);

struct StackOptions {
  std::size_t d_max = kDefaultDMax;
  RiordanMode mode = RiordanMode::kLgfPascal;
  Normalization normalization = Normalization::kNone;
  /// Leading expansion terms reported per entry.
  std::size_t terms = 8;
  std::size_t order = kDefaultOrder;
};

Document cmd_diag_gf(const TriangleSpec& spec, const StackOptions& options, Format format);

Document cmd_numerators(const TriangleSpec& spec, const StackOptions& options, Format format);

struct VerifyOptions {
  std::size_t d_max = kDefaultDMax;
  std::size_t m_max = kDefaultMMax;
  RiordanMode mode = RiordanMode::kLgfPascal;
  std::size_t order = kDefaultOrder;
};

/// Runs verify_stack for every spec (concurrently) and reports in input
/// order. Exit status 1 iff any oracle comparison fails.
Document cmd_verify(const std::vector<TriangleSpec>& specs, const VerifyOptions& options, Format format);

/// Full command line without the program name. Usage and tforge::Error
/// failures go to err with exit status 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tforge::cli
