// Copyright 2026 The cghz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <span>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "cghz/kernels.hpp"
#include "cghz/qstate.hpp"

namespace {

using cghz::cplx;

std::vector<cplx> random_state(std::size_t qubits) {
    std::mt19937_64 gen(qubits);
    std::normal_distribution<double> dist;
    std::vector<cplx> v(std::size_t{1} << qubits);
    double norm = 0.0;
    for (auto &a : v) {
        a = {dist(gen), dist(gen)};
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

const cghz::Matrix2 kPhaseGate{cplx{0.0, 1.0}, 0.0, 0.0, cplx{0.0, -1.0}};
const cghz::Diag4 kFaraday{-1.0, cplx{0.0, 1.0}, cplx{0.0, 1.0}, -1.0};

using Apply1q = void (*)(std::span<cplx>, std::size_t, const cghz::Matrix2 &);
using ApplyDiag = void (*)(std::span<cplx>, std::size_t, std::size_t, const cghz::Diag4 &);
using NormSq = double (*)(std::span<const cplx>);

void BM_apply_1q(benchmark::State &state, Apply1q kernel, const cghz::Matrix2 &u) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto v = random_state(n);
    for (auto _ : state) {
        kernel(v, n / 2, u);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

void BM_apply_diag2(benchmark::State &state, ApplyDiag kernel) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto v = random_state(n);
    for (auto _ : state) {
        kernel(v, 0, n - 1, kFaraday);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

void BM_norm_sq(benchmark::State &state, NormSq kernel) {
    const auto v = random_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel(v));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

void BM_measure_and_drop(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<cghz::QubitId> reg;
    for (std::size_t i = 0; i < n; ++i) {
        reg.push_back(cghz::QubitId::photon("q" + std::to_string(i)));
    }
    const cghz::StateVector base(reg, random_state(n));
    cghz::Rng rng(1);
    for (auto _ : state) {
        auto s = base;
        benchmark::DoNotOptimize(s.measure_and_drop("q0", rng));
    }
}

void sizes(benchmark::internal::Benchmark *b) {
    for (int n : {10, 14, 18, 22}) {
        b->Arg(n);
    }
}

namespace k = cghz::kernels;

BENCHMARK_CAPTURE(BM_apply_1q, hadamard_serial, k::serial::apply_1q, cghz::gates::hadamard())
    ->Apply(sizes);
BENCHMARK_CAPTURE(BM_apply_1q, hadamard_omp, k::omp::apply_1q, cghz::gates::hadamard())
    ->Apply(sizes);
BENCHMARK_CAPTURE(BM_apply_1q, complex_serial, k::serial::apply_1q, kPhaseGate)->Apply(sizes);
BENCHMARK_CAPTURE(BM_apply_1q, complex_omp, k::omp::apply_1q, kPhaseGate)->Apply(sizes);
BENCHMARK_CAPTURE(BM_apply_diag2, serial, k::serial::apply_diag2)->Apply(sizes);
BENCHMARK_CAPTURE(BM_apply_diag2, omp, k::omp::apply_diag2)->Apply(sizes);
BENCHMARK_CAPTURE(BM_norm_sq, serial, k::serial::norm_sq)->Apply(sizes);
BENCHMARK_CAPTURE(BM_norm_sq, omp, k::omp::norm_sq)->Apply(sizes);
BENCHMARK(BM_measure_and_drop)->Arg(10)->Arg(16)->Arg(20);

} // namespace

BENCHMARK_MAIN();
