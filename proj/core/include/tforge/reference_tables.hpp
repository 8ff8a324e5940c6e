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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tforge/rational.hpp"

namespace tforge {

/// One tabulated closed form numerator / (1 - c t)^k, transcribed as
/// published (misprints included).
struct ReferenceEntry {
  std::size_t d = 0;
  std::vector<std::int64_t> numerator;
  std::int64_t c = 1;
  std::size_t k = 1;
};

enum class ReferenceQuantity {
  kStack,      // entries of the diagonal gf stack
  kReversion,  // (d+1)! [y^{d+1}] x(t;y)
};

struct ReferenceTable {
  std::string triangle;  // catalog name
  std::string label;
  ReferenceQuantity quantity = ReferenceQuantity::kStack;
  std::vector<ReferenceEntry> entries;
  /// Known misprint in the transcription, empty when none is known.
  std::string known_issue;
};

const std::vector<ReferenceTable>& reference_tables();
std::vector<const ReferenceTable*> reference_tables_for(std::string_view triangle);

}  // namespace tforge
