#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here deliberately avoids the library's solver internals: oracles are
// straightforward re-implementations used to cross-check results.

#include <algorithm>
#include <vector>

#include "adim/anonymity.hpp"
#include "adim/distance_matrix.hpp"
#include "adim/generate.hpp"
#include "adim/graph.hpp"

namespace testutil {

inline adim::Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return adim::Graph::from_edges(n, e);
}

inline adim::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return adim::Graph::from_edges(n, e);
}

inline adim::Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return adim::Graph::from_edges(n, e);
}

// node 0 is the center, 1..leaves are the leaves
inline adim::Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return adim::Graph::from_edges(leaves + 1, e);
}

// rim 0..rim-1 forms a cycle, node `rim` is the hub
inline adim::Graph wheel(int rim) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rim; ++i) {
        e.emplace_back(i, (i + 1) % rim);
        e.emplace_back(i, rim);
    }
    return adim::Graph::from_edges(rim + 1, e);
}

// The six-node graph used by the worked anonymity examples: nodes v1..v6
// map to ids 0..5, edges v1v2, v2v4, v2v6, v3v4, v3v5, v4v5.
inline adim::Graph example_six() {
    return adim::Graph::from_edges(6, {{0, 1}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {3, 4}});
}

// Floyd-Warshall, kept solely as an APSP oracle.
inline std::vector<std::vector<int>> floyd_warshall(const adim::Graph& g) {
    const int n = g.node_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) d[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Quadratic pairwise grouping of nodes by equal metric representation;
// returns class sizes only (order-free), plus the measure via *mu.
inline std::vector<std::vector<int>> naive_partition(const adim::DistanceMatrix& d,
                                                     const adim::AttackerSet& s, int* mu) {
    std::vector<int> outside;
    for (int v = 0; v < d.node_count(); ++v)
        if (!s.contains(v)) outside.push_back(v);

    std::vector<std::vector<int>> classes;
    std::vector<char> placed(outside.size(), 0);
    for (std::size_t i = 0; i < outside.size(); ++i) {
        if (placed[i]) continue;
        std::vector<int> cls{outside[i]};
        placed[i] = 1;
        for (std::size_t j = i + 1; j < outside.size(); ++j) {
            if (placed[j]) continue;
            bool equal = true;
            for (int m : s.members())
                if (d.at(outside[i], m) != d.at(outside[j], m)) {
                    equal = false;
                    break;
                }
            if (equal) {
                cls.push_back(outside[j]);
                placed[j] = 1;
            }
        }
        classes.push_back(std::move(cls));
    }
    if (mu) {
        *mu = static_cast<int>(outside.size());
        for (const auto& cls : classes) *mu = std::min(*mu, static_cast<int>(cls.size()));
    }
    return classes;
}

// Does the member set induce a connected subgraph of g?
inline bool induces_connected(const adim::Graph& g, const std::vector<int>& members) {
    if (members.empty()) return true;
    std::vector<char> in(g.node_count(), 0);
    for (int v : members) in[v] = 1;
    std::vector<int> queue{members.front()};
    std::vector<char> seen(g.node_count(), 0);
    seen[members.front()] = 1;
    std::size_t reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : g.neighbors(queue[head])) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == members.size();
}

// Seeded connected ER corpus used by the oracle-equivalence suites.
inline std::vector<adim::Graph> connected_corpus(int count, int n_lo, int n_hi,
                                                 std::uint64_t seed) {
    const double ps[] = {0.35, 0.5, 0.7};
    std::vector<adim::Graph> graphs;
    graphs.reserve(count);
    for (int i = 0; i < count; ++i) {
        adim::GenConfig cfg;
        cfg.model = adim::GenModel::erdos_renyi;
        cfg.n = n_lo + i % (n_hi - n_lo + 1);
        cfg.p = ps[i % 3];
        cfg.seed = adim::substream_seed(seed, i);
        cfg.require_connected = true;
        graphs.push_back(adim::gen_erdos_renyi(cfg).graph);
    }
    return graphs;
}

}  // namespace testutil
