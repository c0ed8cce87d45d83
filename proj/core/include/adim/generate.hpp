#pragma once

#include <cstdint>

#include "adim/graph.hpp"

namespace adim {

enum class GenModel { erdos_renyi, barabasi_albert, random_tree };

struct GenConfig {
    GenModel model = GenModel::erdos_renyi;
    int n = 0;
    double p = 0.0;                 // edge probability (erdos_renyi)
    int q = 1;                      // attachment count (barabasi_albert)
    std::uint64_t seed = 0;
    bool require_connected = false; // resample until connected (erdos_renyi)
};

struct GenResult {
    Graph graph;
    int retries = 0;  // connectivity resamples that were needed
};

/// Sub-stream seed for one sample of an ensemble. splitmix64 decorrelates
/// the streams so samples can be generated independently and in parallel.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// G(n, p): every unordered pair is included independently with
/// probability p, pairs visited in fixed (i < j) order. With
/// require_connected the draw is repeated on incremented sub-seeds until
/// the graph is connected; the retry count is reported.
GenResult gen_erdos_renyi(const GenConfig& cfg);

/// G(n, q) preferential attachment: q isolated seed nodes start the
/// repeated-nodes list; every new node links to q distinct nodes drawn
/// from the list (degree-biased through the duplicates), then itself and
/// its q targets join the list. Edge count is exactly q * (n - q).
GenResult gen_barabasi_albert(const GenConfig& cfg);

/// Uniform random labeled tree via a decoded random Pruefer sequence.
GenResult gen_random_tree(const GenConfig& cfg);

/// Dispatch on cfg.model.
GenResult generate(const GenConfig& cfg);

/// "er" / "ba" / "tree", as used in generated file names and manifests.
const char* model_name(GenModel model);

}  // namespace adim
