#include <benchmark/benchmark.h>

#include "adim/generate.hpp"
#include "adim/harness.hpp"

using namespace adim;

namespace {

Graph make_ba(int n, int q, std::uint64_t seed = 7) {
    GenConfig cfg;
    cfg.model = GenModel::barabasi_albert;
    cfg.n = n;
    cfg.q = q;
    cfg.seed = seed;
    return gen_barabasi_albert(cfg).graph;
}

Graph make_er(int n, double p, std::uint64_t seed = 7) {
    GenConfig cfg;
    cfg.model = GenModel::erdos_renyi;
    cfg.n = n;
    cfg.p = p;
    cfg.seed = seed;
    cfg.require_connected = true;
    return gen_erdos_renyi(cfg).graph;
}

void BM_Apsp(benchmark::State& state) {
    Graph g = make_ba(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        DistanceMatrix d = all_pairs_shortest_paths(g);
        benchmark::DoNotOptimize(d.at(0, 1));
    }
}
BENCHMARK(BM_Apsp)->Arg(200)->Arg(500)->Arg(1000);

void BM_Partition(benchmark::State& state) {
    Graph g = make_ba(500, 5);
    DistanceMatrix d = all_pairs_shortest_paths(g);
    std::vector<int> members;
    for (int i = 0; i < state.range(0); ++i) members.push_back(i * 7 % 500);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    AttackerSet s(members, 500);
    for (auto _ : state) {
        ClassPartition p = partition_by_representation(d, s);
        benchmark::DoNotOptimize(p.mu);
    }
}
BENCHMARK(BM_Partition)->Arg(8)->Arg(64);

void BM_AdimGeqK(benchmark::State& state) {
    Graph g = make_er(static_cast<int>(state.range(0)), 0.02);
    DistanceMatrix d = all_pairs_shortest_paths(g);
    for (auto _ : state) {
        GeqSolution s = adim_geq_k(d, 3);
        benchmark::DoNotOptimize(s.cardinality);
    }
}
BENCHMARK(BM_AdimGeqK)->Arg(200)->Arg(400);

void BM_AdimKopt(benchmark::State& state) {
    Graph g = make_er(300, 0.02);
    DistanceMatrix d = all_pairs_shortest_paths(g);
    SolverOptions opt;
    opt.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        KoptSolution s = adim_kopt(d, opt);
        benchmark::DoNotOptimize(s.k_opt);
    }
}
BENCHMARK(BM_AdimKopt)->Arg(1)->Arg(2)->Arg(4);

void BM_AdimEq1(benchmark::State& state) {
    Graph g = make_ba(static_cast<int>(state.range(0)), 5);
    DistanceMatrix d = all_pairs_shortest_paths(g);
    for (auto _ : state) {
        Eq1Solution s = adim_eq1(d);
        benchmark::DoNotOptimize(s.cardinality);
    }
}
BENCHMARK(BM_AdimEq1)->Arg(200)->Arg(500);

void BM_GenBarabasiAlbert(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Graph g = make_ba(500, 5, ++seed);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_GenBarabasiAlbert);

}  // namespace

BENCHMARK_MAIN();
