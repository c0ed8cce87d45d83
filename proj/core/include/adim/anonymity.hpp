#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "adim/distance_matrix.hpp"

namespace adim {

/// A non-empty proper subset of the node set, held in strictly ascending
/// order. The order fixes the coordinate order of every metric vector
/// derived from the set; all quantities computed downstream (equivalence
/// classes, the measure) are invariant under coordinate permutation, so
/// one canonical order suffices.
class AttackerSet {
public:
    /// Sorts the members; throws if empty, out of range, duplicated, or
    /// not a proper subset of {0..graph_n-1}.
    AttackerSet(std::vector<int> members, int graph_n);

    const std::vector<int>& members() const noexcept { return members_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    int graph_n() const noexcept { return graph_n_; }
    bool contains(int v) const;

    friend bool operator==(const AttackerSet&, const AttackerSet&) = default;

private:
    std::vector<int> members_;
    int graph_n_;
};

/// Distances from one node to each attacker-set member, in member order.
struct MetricVector {
    std::vector<std::uint16_t> coords;

    friend auto operator<=>(const MetricVector&, const MetricVector&) = default;
};

/// coords[i] = dist(v, s.members()[i]). Throws if v is in s.
MetricVector metric_representation(const DistanceMatrix& d, int v, const AttackerSet& s);

/// Equivalence classes of V minus the attacker set under identical metric
/// representation, in canonical order (lexicographic by class vector).
/// mu is the smallest class size.
struct ClassPartition {
    AttackerSet attacker;
    std::vector<std::vector<int>> classes;  // members ascending within a class
    std::vector<MetricVector> reprs;        // reprs[i] is shared by classes[i]
    int mu = 0;
};

ClassPartition partition_by_representation(const DistanceMatrix& d, const AttackerSet& s);

/// True iff s is a k-antiresolving set, i.e. the partition measure equals
/// k exactly. Each set is k-antiresolving for exactly one k (its measure).
bool verify_k_antiresolving(const DistanceMatrix& d, const AttackerSet& s, int k);

/// One "repr=(a,b,...) -> [nodes]" line per class, canonical order.
std::string to_canonical_text(const ClassPartition& p);

}  // namespace adim
