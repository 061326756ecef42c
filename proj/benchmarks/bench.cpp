// Microbenchmarks for the hot paths of the exhaustive scans: the
// Perron solve dominates, followed by distance BFS and the strong
// connectivity filter.

#include <benchmark/benchmark.h>

#include <random>

#include "dalpha/canonical.hpp"
#include "dalpha/coloring.hpp"
#include "dalpha/connectivity.hpp"
#include "dalpha/distance.hpp"
#include "dalpha/enumerate.hpp"
#include "dalpha/families.hpp"
#include "dalpha/spectrum.hpp"
#include "dalpha/verify.hpp"

namespace {

dalpha::Digraph random_digraph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return dalpha::digraph_from_mask(n, dalpha::random_sc_mask(n, rng));
}

void BM_perron(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto dd = dalpha::distance_data(random_digraph(n, 42));
    auto m = dalpha::dalpha_matrix(dd, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(dalpha::perron(m).radius);
}
BENCHMARK(BM_perron)->Arg(5)->Arg(8);

void BM_perron_near_regular(benchmark::State& state) {
    // Distance regular input converges in one step; the interesting
    // contrast with BM_perron shows how much the spectral gap costs.
    auto m = dalpha::dalpha_matrix(dalpha::directed_cycle(8), 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(dalpha::perron(m).radius);
}
BENCHMARK(BM_perron_near_regular);

void BM_distance_data(benchmark::State& state) {
    auto g = random_digraph(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(dalpha::distance_data(g).tr_max);
}
BENCHMARK(BM_distance_data)->Arg(5)->Arg(8);

void BM_sc_filter(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::uint64_t total = std::uint64_t{1} << dalpha::arc_slots(n);
    std::uint64_t mask = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dalpha::mask_strongly_connected(n, mask));
        mask = (mask + 0x9e3779b97f4a7c15ULL) & (total - 1);
    }
}
BENCHMARK(BM_sc_filter)->Arg(4)->Arg(5)->Arg(6);

void BM_count_sc_n4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dalpha::count_sc(4));
}
BENCHMARK(BM_count_sc_n4);

void BM_canonical_key(benchmark::State& state) {
    auto g = random_digraph(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(dalpha::canonical_key(g));
}
BENCHMARK(BM_canonical_key)->Arg(5)->Arg(6);

void BM_dichromatic(benchmark::State& state) {
    auto g = random_digraph(static_cast<int>(state.range(0)), 19);
    for (auto _ : state) benchmark::DoNotOptimize(dalpha::dichromatic_number(g).num_classes);
}
BENCHMARK(BM_dichromatic)->Arg(5)->Arg(8);

void BM_vertex_connectivity(benchmark::State& state) {
    auto g = dalpha::k_n_k_m(8, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(dalpha::vertex_connectivity(g).value);
}
BENCHMARK(BM_vertex_connectivity);

void BM_mu_closed_form(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dalpha::mu_closed_form(30, 5, 3, 0.7));
}
BENCHMARK(BM_mu_closed_form);

void BM_extremal_scan_n4(benchmark::State& state) {
    for (auto _ : state) {
        auto r = dalpha::extremal_scan(4, 0.5, dalpha::ClassSelector::all(), 1);
        benchmark::DoNotOptimize(r.min_value);
    }
}
BENCHMARK(BM_extremal_scan_n4);

} // namespace

BENCHMARK_MAIN();
