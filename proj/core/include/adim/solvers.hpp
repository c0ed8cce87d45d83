#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "adim/anonymity.hpp"
#include "adim/distance_matrix.hpp"

namespace adim {

struct SolverOptions {
    /// Independent start-node (resp. target-node) iterations may run in
    /// parallel; results are identical to the sequential run.
    int workers = 1;
    /// Cooperative wall-clock cutoff; TimeoutError when exceeded.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Minimum-cardinality node set whose partition measure is at least k.
/// Infeasibility stands for the empty witness / infinite cardinality.
struct GeqSolution {
    int k = 1;
    bool feasible = false;
    int cardinality = 0;                 // meaningful when feasible
    std::optional<AttackerSet> witness;  // engaged when feasible
};

/// The largest k for which a k-antiresolving set exists, with a witness
/// of minimum cardinality for that k.
struct KoptSolution {
    int k_opt = 1;
    int cardinality = 0;
    AttackerSet witness;
    double fraction = 0.0;  // k_opt / n
};

/// A set re-identifying at least one node with certainty (measure 1).
struct Eq1Solution {
    int cardinality = 0;
    AttackerSet witness;
};

/// Exact solver: grows a candidate set from every start node, absorbing
/// all minimum-size equivalence classes until the measure reaches k, and
/// keeps the smallest candidate found (ties to the earliest start node).
/// Terminates early once a single-node solution is known. O(log n) calls
/// of this solve the maximisation problem below.
GeqSolution adim_geq_k(const DistanceMatrix& d, int k, const SolverOptions& opt = {});

/// Binary search over k in {1..n-1}; sound because feasibility of the
/// ">= k" problem is downward-closed in k.
KoptSolution adim_kopt(const DistanceMatrix& d, const SolverOptions& opt = {});

/// Greedy set-cover approximation, one instance per target node; the
/// returned set always has measure exactly 1 and cardinality within a
/// ln(n-1)+1 factor of optimal.
Eq1Solution adim_eq1(const DistanceMatrix& d, const SolverOptions& opt = {});

/// Enumeration baselines, exact by construction. They walk every
/// non-empty proper subset in ascending (size, lexicographic) order and
/// group nodes through partition_by_representation, sharing nothing with
/// the solvers above except the distance matrix. Refuse n > max_n.
GeqSolution oracle_brute_force_geq(const DistanceMatrix& d, int k, int max_n = 16);
KoptSolution oracle_kopt(const DistanceMatrix& d, int max_n = 16);
Eq1Solution oracle_eq1(const DistanceMatrix& d, int max_n = 16);

/// Stable JSON records: {problem, k, feasible, cardinality, witness, p}.
/// Witness ids are emitted as dataset labels when a label map is given.
nlohmann::json to_json(const GeqSolution& s, const std::vector<std::string>* labels = nullptr);
nlohmann::json to_json(const KoptSolution& s, const std::vector<std::string>* labels = nullptr);
nlohmann::json to_json(const Eq1Solution& s, const std::vector<std::string>* labels = nullptr);

}  // namespace adim
