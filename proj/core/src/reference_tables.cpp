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

#include "tforge/reference_tables.hpp"

namespace tforge {

namespace {

// Regular tables: entry d sits over (1 - c t)^(2d+1).
std::vector<ReferenceEntry> regular(std::int64_t c, std::vector<std::vector<std::int64_t>> rows) {
  std::vector<ReferenceEntry> out;
  for (std::size_t d = 0; d < rows.size(); ++d) out.push_back({d, std::move(rows[d]), c, 2 * d + 1});
  return out;
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = [] {
    std::vector<ReferenceTable> t;
    t.push_back({"stirling2", "Stirling2 diagonal gfs (second-order Eulerian numerators)", ReferenceQuantity::kStack,
                 regular(1, {{1}, {0, 1}, {0, 1, 2}, {0, 1, 8, 6}, {0, 1, 22, 58, 24}}), ""});
    t.push_back({"P.S2", "P.S2 diagonal gfs", ReferenceQuantity::kStack,
                 regular(1, {{1}, {1}, {1, 2}, {1, 8, 6}, {1, 22, 58, 0, 24}}),
                 "d=4 numerator printed with 24t^4 instead of 24t^3"});

    auto stirling1_rev = regular(1, {{1}, {0, 1}, {0, 2, 1}, {0, 6, 8, 1}, {0, 24, 58, 22, 1}});
    stirling1_rev[2].c = -1;  // printed as (1 + t)^5
    t.push_back({"stirling1", "|Stirling1| reversion x(t;y)", ReferenceQuantity::kStack, stirling1_rev,
                 "d=2 denominator printed as (1+t)^5 instead of (1-t)^5"});
    t.push_back({"charlier", "|Stirling1| reversion x(t;y)", ReferenceQuantity::kReversion, stirling1_rev,
                 "d=2 denominator printed as (1+t)^5 instead of (1-t)^5"});
    t.push_back({"charlier", "Charlier diagonal gfs", ReferenceQuantity::kStack,
                 regular(1, {{1}, {1}, {1, 3, -1}, {0, 18, -2, -1}, {1, 80, 49, -27, 2}}),
                 "d=3 numerator printed as t + 17t - 2t^2 - t^3"});

    t.push_back({"S2[2,1]", "S2[2,1] diagonal gfs", ReferenceQuantity::kStack,
                 regular(2, {{1}, {1, 2}, {1, 16, 12}, {1, 66, 284, 120}, {1, 224, 2872, 5952, 1680}}), ""});
    t.push_back({"S2[3,1]", "S2[3,1] diagonal gfs", ReferenceQuantity::kStack,
                 regular(3, {{1}, {1, 3}, {1, 16, 12}, {1, 66, 284, 120}, {1, 224, 2872, 5952, 1680}}),
                 "numerators d>=2 repeat the S2[2,1] table"});
    t.push_back({"S1phat[2,1]", "S1phat[2,1] diagonal gfs", ReferenceQuantity::kStack,
                 regular(1, {{1}, {1, 1}, {3, 8, 1}, {15, 71, 33, 1}, {105, 744, 718, 112, 1}}), ""});
    t.push_back({"S1phat[3,1]", "S1phat[3,1] diagonal gfs", ReferenceQuantity::kStack,
                 regular(1, {{1}, {1, 2}, {4, 19, 4}, {28, 222, 147, 8}, {280, 3194, 4128, 887, 16}}), ""});

    t.push_back({"pascal-variant", "A097805 l.g.f. stack", ReferenceQuantity::kStack,
                 regular(1, {{1}, {0, 2}, {0, 3, 3}, {0, 4, 12, 4}, {0, 5, 30, 30, 5}}), ""});
    t.push_back({"pascal", "Pascal l.g.f. stack (squared binomials)", ReferenceQuantity::kStack,
                 regular(1, {{1}, {1, 1}, {1, 4, 1}, {1, 9, 9, 1}, {1, 16, 36, 16, 1}}), ""});
    t.push_back({"A135278", "A135278 l.g.f. stack", ReferenceQuantity::kStack,
                 regular(1, {{1}, {2}, {3, 3}, {4, 12, 4}, {5, 30, 30, 5}}), ""});
    return t;
  }();
  return tables;
}

std::vector<const ReferenceTable*> reference_tables_for(std::string_view triangle) {
  std::vector<const ReferenceTable*> out;
  for (const auto& t : reference_tables())
    if (t.triangle == triangle) out.push_back(&t);
  return out;
}

}  // namespace tforge
