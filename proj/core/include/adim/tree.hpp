#pragma once

#include <vector>

#include "adim/anonymity.hpp"
#include "adim/distance_matrix.hpp"
#include "adim/solvers.hpp"

namespace adim {

/// True iff the metric belongs to a tree (connected with n-1 edges; the
/// matrix construction already guarantees connectivity).
bool is_tree(const DistanceMatrix& d);

/// The tree rooted at a member of the attacker set: one branch per
/// neighbor outside the set, holding the root, that child and all its
/// descendants. Level class j collects the branch nodes at distance j
/// from the root; each level class is an equivalence class of the
/// partition induced by the attacker set.
struct RootedView {
    int root = -1;
    std::vector<int> children;                    // Nbr(root) outside the set, ascending
    std::vector<std::vector<int>> branches;       // aligned with children
    std::vector<int> eccentricities;              // max root distance within each branch
    std::vector<std::vector<int>> level_classes;  // [j-1] = branch nodes at distance j
};

/// Requires root to be a member of s. Callers must guarantee that s
/// induces a connected subtree (true for every k-antiresolving set with
/// k >= 2), which keeps the branches free of attacker nodes.
RootedView build_rooted_view(const DistanceMatrix& d, int root, const AttackerSet& s);

/// Turns a k'-antiresolving set of a tree into a (k'-1)-antiresolving
/// set by absorbing whole branches below a boundary node: either one
/// branch when all branch eccentricities agree, or branches in ascending
/// eccentricity order until a level class shrinks to exactly k'-1.
/// Boundary nodes are tried in ascending id order; the result is
/// verified to have measure k'-1 before it is returned. Throws if the
/// metric is not a tree, if mu(s) != k_prime, or if k_prime < 2.
AttackerSet descend_one(const DistanceMatrix& d, const AttackerSet& s, int k_prime);

/// A witness set with measure exactly k_target, for any 1 <= k_target <=
/// k' (k' being the largest k with any k-antiresolving set). Endpoints
/// come straight from the solvers; intermediate levels walk descend_one
/// down from a minimum k'-antiresolving set, re-minimizing at each level.
/// The returned set is re-verified before being handed back.
AttackerSet antiresolving_chain(const DistanceMatrix& d, int k_target,
                                const SolverOptions& opt = {});

struct TreeChainEntry {
    int k;
    int cardinality;
    AttackerSet witness;
};

/// The whole chain k = 1..k' in one walk (equal, level for level, to
/// calling antiresolving_chain for each k).
std::vector<TreeChainEntry> full_antiresolving_chain(const DistanceMatrix& d,
                                                     const SolverOptions& opt = {});

}  // namespace adim
