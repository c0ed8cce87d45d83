#include "adim/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace adim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// The generator is std::mt19937_64 throughout; draws below avoid the
// standard distributions so results do not depend on the library
// implementation.
using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
}

GenResult gen_erdos_renyi(const GenConfig& cfg) {
    if (cfg.n < 0) throw std::invalid_argument("gen_erdos_renyi: n must be non-negative");
    if (cfg.p < 0.0 || cfg.p > 1.0)
        throw std::invalid_argument("gen_erdos_renyi: p must lie in [0, 1]");

    constexpr int kMaxRetries = 10000;
    for (int attempt = 0;; ++attempt) {
        Rng rng = make_rng(cfg.seed + static_cast<std::uint64_t>(attempt));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < cfg.n; ++i)
            for (int j = i + 1; j < cfg.n; ++j)
                if (uniform01(rng) < cfg.p) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(cfg.n, edges);
        if (!cfg.require_connected || is_connected(g)) return GenResult{std::move(g), attempt};
        if (attempt + 1 >= kMaxRetries)
            throw std::runtime_error("gen_erdos_renyi: no connected sample after " +
                                     std::to_string(kMaxRetries) + " attempts");
    }
}

GenResult gen_barabasi_albert(const GenConfig& cfg) {
    if (cfg.q < 1 || cfg.q >= cfg.n)
        throw std::invalid_argument("gen_barabasi_albert: need 1 <= q < n");

    Rng rng = make_rng(cfg.seed);
    std::vector<int> repeated;  // duplicates carry the degree bias
    repeated.reserve(static_cast<std::size_t>(cfg.n) * (cfg.q + 1));
    for (int v = 0; v < cfg.q; ++v) repeated.push_back(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(cfg.q) * (cfg.n - cfg.q));
    std::vector<int> picked;
    for (int w = cfg.q; w < cfg.n; ++w) {
        picked.clear();
        while (static_cast<int>(picked.size()) < cfg.q) {
            const int u = repeated[uniform_below(rng, repeated.size())];
            if (std::find(picked.begin(), picked.end(), u) == picked.end()) picked.push_back(u);
        }
        for (int u : picked) edges.emplace_back(u, w);
        repeated.push_back(w);
        repeated.insert(repeated.end(), picked.begin(), picked.end());
    }
    return GenResult{Graph::from_edges(cfg.n, edges), 0};
}

GenResult gen_random_tree(const GenConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("gen_random_tree: n must be positive");
    if (cfg.n == 1) return GenResult{Graph::from_edges(1, {}), 0};
    if (cfg.n == 2) return GenResult{Graph::from_edges(2, {{0, 1}}), 0};

    Rng rng = make_rng(cfg.seed);
    const int n = cfg.n;
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = static_cast<int>(uniform_below(rng, n));

    // linear decode: repeatedly attach the smallest-id leaf; the final
    // leaf always pairs with node n-1, which the pointer never visits
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int scan = 0;
    while (degree[scan] != 1) ++scan;
    int leaf = scan;
    for (int x : pruefer) {
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1 && x < scan) {
            leaf = x;
        } else {
            while (degree[++scan] != 1) {
            }
            leaf = scan;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return GenResult{Graph::from_edges(n, edges), 0};
}

GenResult generate(const GenConfig& cfg) {
    switch (cfg.model) {
        case GenModel::erdos_renyi: return gen_erdos_renyi(cfg);
        case GenModel::barabasi_albert: return gen_barabasi_albert(cfg);
        case GenModel::random_tree: return gen_random_tree(cfg);
    }
    throw std::invalid_argument("generate: unknown model");
}

const char* model_name(GenModel model) {
    switch (model) {
        case GenModel::erdos_renyi: return "er";
        case GenModel::barabasi_albert: return "ba";
        case GenModel::random_tree: return "tree";
    }
    return "?";
}

}  // namespace adim
