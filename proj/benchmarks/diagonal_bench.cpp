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

#include <benchmark/benchmark.h>

#include "tforge/diagonal_gf.hpp"
#include "tforge/triangle.hpp"

namespace {

using namespace tforge;

void BM_BuildTriangle(benchmark::State& state) {
  const TriangleSpec spec = catalog_lookup("S1phat[2,1]");
  const auto rows = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_triangle(spec, rows));
}
BENCHMARK(BM_BuildTriangle)->Arg(10)->Arg(20)->Arg(40);

void BM_ShefferStack(benchmark::State& state) {
  const TriangleSpec spec = catalog_lookup("stirling2");
  const auto d_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sheffer_diag_gfs(spec, d_max));
}
BENCHMARK(BM_ShefferStack)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_RiordanStack(benchmark::State& state) {
  const TriangleSpec spec = catalog_lookup("pascal");
  const auto d_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(riordan_diag_gfs(spec, d_max, RiordanMode::kLgfPascal));
}
BENCHMARK(BM_RiordanStack)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const TriangleSpec spec = catalog_lookup("charlier");
  for (auto _ : state) benchmark::DoNotOptimize(verify_stack(spec, 6, 12));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

}  // namespace
