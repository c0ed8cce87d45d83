#pragma once

#include <cstdint>
#include <vector>

#include "adim/graph.hpp"

namespace adim {

/// Dense n x n matrix of unweighted shortest-path hop counts. Entries are
/// 16-bit: every metric the solvers compute lives on graphs whose diameter
/// is tiny, and halving the footprint matters at n ~ 2000.
/// Immutable after construction; safe to share across threads.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    int node_count() const noexcept { return n_; }
    std::uint16_t at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    const std::uint16_t* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }
    std::uint16_t diameter() const noexcept { return diameter_; }

private:
    int n_ = 0;
    std::uint16_t diameter_ = 0;
    std::vector<std::uint16_t> d_;

    friend DistanceMatrix all_pairs_shortest_paths(const Graph&, int);
};

/// One BFS per source, O(nm) total. Sources are processed in parallel when
/// workers > 1; each BFS writes a disjoint row, so results are identical to
/// the sequential run. Throws if the graph is disconnected (the error names
/// two unreachable nodes) or if the diameter does not fit in 16 bits.
DistanceMatrix all_pairs_shortest_paths(const Graph& g, int workers = 1);

}  // namespace adim
