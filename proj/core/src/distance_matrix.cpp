#include "adim/distance_matrix.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include "parallel_for.hpp"

namespace adim {

namespace {
constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();
}

DistanceMatrix all_pairs_shortest_paths(const Graph& g, int workers) {
    const int n = g.node_count();
    if (n < 1) throw std::invalid_argument("all_pairs_shortest_paths: graph is empty");
    if (auto bad = unreachable_pair(g)) {
        throw std::invalid_argument("all_pairs_shortest_paths: graph is disconnected, no path between nodes " +
                                    std::to_string(bad->first) + " and " + std::to_string(bad->second));
    }

    DistanceMatrix m;
    m.n_ = n;
    m.d_.assign(static_cast<std::size_t>(n) * n, kUnreached);

    std::atomic<std::uint16_t> diameter{0};
    detail::parallel_for_ordered(n, workers, nullptr, [&](int source) {
        std::uint16_t* dist = m.d_.data() + static_cast<std::size_t>(source) * n;
        std::vector<int> queue;
        queue.reserve(n);
        dist[source] = 0;
        queue.push_back(source);
        std::uint16_t farthest = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            std::uint16_t du = dist[u];
            if (du == kUnreached - 1)
                throw std::invalid_argument("all_pairs_shortest_paths: diameter exceeds 16-bit hop counts");
            for (int v : g.neighbors(u)) {
                if (dist[v] == kUnreached) {
                    dist[v] = static_cast<std::uint16_t>(du + 1);
                    farthest = static_cast<std::uint16_t>(du + 1);
                    queue.push_back(v);
                }
            }
        }
        // monotone max; ordering across threads is irrelevant
        std::uint16_t seen = diameter.load(std::memory_order_relaxed);
        while (seen < farthest &&
               !diameter.compare_exchange_weak(seen, farthest, std::memory_order_relaxed)) {
        }
    });

    m.diameter_ = diameter.load(std::memory_order_relaxed);
    return m;
}

}  // namespace adim
