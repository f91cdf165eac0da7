// Copyright 2026 The bubblelat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP versions on bubble lattices.

#include <benchmark/benchmark.h>

#include <map>
#include <utility>

#include "bubble/bubble_order.hpp"
#include "bubble/kernels.hpp"
#include "bubble/lattice.hpp"

namespace k = bubble::kernels;

namespace {

constexpr std::pair<int, int> kShapes[] = {{3, 2}, {3, 3}, {4, 3}};

struct Fixture {
  bubble::FinitePoset hasse;
  k::Table join;
  k::Table meet;
};

const Fixture& fixture(int shape) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(shape);
  if (it != cache.end()) return it->second;
  auto [m, n] = kShapes[shape];
  Fixture f;
  f.hasse = bubble::build_bubble_lattice(m, n).hasse;
  f.join = k::serial::join_table(f.hasse.up_matrix());
  f.meet = k::serial::join_table(f.hasse.down_matrix());
  return cache.emplace(shape, std::move(f)).first->second;
}

void label(benchmark::State& state) {
  auto [m, n] = kShapes[state.range(0)];
  state.SetLabel("Bub(" + std::to_string(m) + "," + std::to_string(n) + "), " +
                 std::to_string(fixture(static_cast<int>(state.range(0))).hasse.size()) + " elements");
}

template <auto Kernel>
void reduction(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.hasse.up_matrix(), f.hasse.down_matrix()));
  label(state);
}

template <auto Kernel>
void join_table(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.hasse.up_matrix()));
  label(state);
}

template <auto Kernel>
void semidistributive(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.join, f.meet, f.hasse.size()));
  label(state);
}

template <auto Kernel>
void left_modular(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.join, f.meet, f.hasse.up_matrix()));
  label(state);
}

}  // namespace

BENCHMARK(reduction<k::serial::transitive_reduction>)->Name("reduction/serial")->DenseRange(0, 2);
BENCHMARK(reduction<k::omp::transitive_reduction>)->Name("reduction/omp")->DenseRange(0, 2);
BENCHMARK(join_table<k::serial::join_table>)->Name("join_table/serial")->DenseRange(0, 2);
BENCHMARK(join_table<k::omp::join_table>)->Name("join_table/omp")->DenseRange(0, 2);
BENCHMARK(semidistributive<k::serial::join_sd_violation>)->Name("join_sd/serial")->DenseRange(0, 2);
BENCHMARK(semidistributive<k::omp::join_sd_violation>)->Name("join_sd/omp")->DenseRange(0, 2);
BENCHMARK(left_modular<k::serial::left_modular_flags>)->Name("left_modular/serial")->DenseRange(0, 2);
BENCHMARK(left_modular<k::omp::left_modular_flags>)->Name("left_modular/omp")->DenseRange(0, 2);

BENCHMARK_MAIN();
