#include "adim/tree.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace adim {

bool is_tree(const DistanceMatrix& d) {
    const int n = d.node_count();
    long long edges = 0;
    for (int u = 0; u < n; ++u) {
        const std::uint16_t* row = d.row(u);
        for (int v = u + 1; v < n; ++v)
            if (row[v] == 1) ++edges;
    }
    return edges == static_cast<long long>(n) - 1;
}

RootedView build_rooted_view(const DistanceMatrix& d, int root, const AttackerSet& s) {
    if (!s.contains(root))
        throw std::invalid_argument("build_rooted_view: root must belong to the attacker set");
    const int n = d.node_count();
    const std::uint16_t* dr = d.row(root);

    RootedView view;
    view.root = root;
    for (int v = 0; v < n; ++v)
        if (dr[v] == 1 && !s.contains(v)) view.children.push_back(v);

    int max_ecc = 0;
    for (int child : view.children) {
        std::vector<int> branch{root};
        int ecc = 0;
        const std::uint16_t* dc = d.row(child);
        // x lies behind `child` iff the root path passes through it
        for (int x = 0; x < n; ++x) {
            if (x == root) continue;
            if (dr[x] == dc[x] + 1) {
                branch.push_back(x);
                ecc = std::max<int>(ecc, dr[x]);
            }
        }
        std::sort(branch.begin(), branch.end());
        view.branches.push_back(std::move(branch));
        view.eccentricities.push_back(ecc);
        max_ecc = std::max(max_ecc, ecc);
    }

    view.level_classes.assign(max_ecc, {});
    for (const auto& branch : view.branches) {
        for (int x : branch) {
            if (x == root) continue;
            view.level_classes[dr[x] - 1].push_back(x);
        }
    }
    for (auto& cls : view.level_classes) {
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    }
    return view;
}

namespace {

int measure_of(const DistanceMatrix& d, const std::vector<int>& members) {
    return partition_by_representation(d, AttackerSet(members, d.node_count())).mu;
}

std::vector<int> merged_with(const std::vector<int>& base, const std::vector<int>& extra,
                             int skip) {
    std::vector<int> out = base;
    for (int v : extra)
        if (v != skip) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Case 1 (all eccentricities equal): absorb one branch. Pairs with
// |A_alpha ∩ T_beta| = 1 are tried smallest beta first, then smallest
// alpha; each candidate is verified before being accepted.
std::optional<std::vector<int>> case_equal_ecc(const DistanceMatrix& d, const AttackerSet& s,
                                               const RootedView& view, int k_prime) {
    for (std::size_t beta = 0; beta < view.branches.size(); ++beta) {
        const auto& branch = view.branches[beta];
        for (const auto& level : view.level_classes) {
            int inside = 0;
            for (int x : level)
                if (std::binary_search(branch.begin(), branch.end(), x)) ++inside;
            if (inside != 1) continue;
            std::vector<int> candidate = merged_with(s.members(), branch, view.root);
            if (static_cast<int>(candidate.size()) >= d.node_count()) continue;
            if (measure_of(d, candidate) == k_prime - 1) return candidate;
        }
    }
    return std::nullopt;
}

// Case 2 (eccentricities differ): absorb branches in ascending
// eccentricity until a level class shrinks to exactly k'-1. A class
// jumping below k'-1 stalls this boundary node.
std::optional<std::vector<int>> case_mixed_ecc(const DistanceMatrix& d, const AttackerSet& s,
                                               const RootedView& view, int k_prime) {
    std::vector<std::size_t> order(view.branches.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (view.eccentricities[a] != view.eccentricities[b])
            return view.eccentricities[a] < view.eccentricities[b];
        return view.children[a] < view.children[b];
    });

    std::vector<std::vector<int>> live = view.level_classes;
    std::vector<int> absorbed = s.members();
    for (std::size_t t : order) {
        const auto& branch = view.branches[t];
        absorbed = merged_with(absorbed, branch, view.root);
        bool hit = false;
        bool broken = false;
        bool any_live = false;
        for (auto& cls : live) {
            std::erase_if(cls, [&](int x) {
                return std::binary_search(branch.begin(), branch.end(), x);
            });
            if (cls.empty()) continue;
            any_live = true;
            if (static_cast<int>(cls.size()) <= k_prime - 2) broken = true;
            if (static_cast<int>(cls.size()) == k_prime - 1) hit = true;
        }
        if (broken || !any_live) return std::nullopt;
        if (hit) {
            if (static_cast<int>(absorbed.size()) >= d.node_count()) return std::nullopt;
            if (measure_of(d, absorbed) == k_prime - 1) return absorbed;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

AttackerSet descend_one(const DistanceMatrix& d, const AttackerSet& s, int k_prime) {
    const int n = d.node_count();
    if (!is_tree(d)) throw std::invalid_argument("descend_one: metric does not describe a tree");
    if (k_prime < 2) throw std::invalid_argument("descend_one: k' must be at least 2");
    if (partition_by_representation(d, s).mu != k_prime)
        throw std::invalid_argument("descend_one: mu(s) differs from the stated k'");

    for (int v : s.members()) {
        RootedView view = build_rooted_view(d, v, s);
        if (view.children.empty()) continue;  // not a boundary node

        const bool has_target_class =
            std::any_of(view.level_classes.begin(), view.level_classes.end(),
                        [&](const auto& cls) { return static_cast<int>(cls.size()) == k_prime; });
        if (!has_target_class) continue;  // proof: pick another boundary node

        const bool equal_ecc = std::all_of(view.eccentricities.begin(), view.eccentricities.end(),
                                           [&](int e) { return e == view.eccentricities[0]; });
        auto candidate = equal_ecc ? case_equal_ecc(d, s, view, k_prime)
                                   : case_mixed_ecc(d, s, view, k_prime);
        if (candidate) return AttackerSet(std::move(*candidate), n);
    }

    // Every boundary node stalled. The construction above should not reach
    // this point; fall back to plain enumeration where that is affordable
    // rather than returning anything unverified.
    std::cerr << "adim: descend_one stalled at every boundary node (k'=" << k_prime
              << ", n=" << n << "); falling back to enumeration\n";
    if (n <= 16) {
        GeqSolution exact = oracle_brute_force_geq(d, k_prime - 1, n);
        if (exact.feasible && partition_by_representation(d, *exact.witness).mu == k_prime - 1)
            return std::move(*exact.witness);
    }
    throw std::runtime_error("descend_one: no (k'-1)-antiresolving superset found");
}

namespace {

// Shared walk: witnesses for every level k' down to stop_at (>= 2).
// Level k' carries the minimum witness; each lower level prefers the
// re-minimized set when its measure lands exactly, otherwise keeps the
// constructed one.
std::vector<TreeChainEntry> walk_chain(const DistanceMatrix& d, int stop_at,
                                       const SolverOptions& opt) {
    KoptSolution top = adim_kopt(d, opt);
    std::vector<TreeChainEntry> chain;
    chain.push_back({top.k_opt, top.cardinality, top.witness});
    AttackerSet cur = top.witness;
    for (int level = top.k_opt; level > stop_at; --level) {
        AttackerSet constructed = descend_one(d, cur, level);
        GeqSolution remin = adim_geq_k(d, level - 1, opt);
        if (remin.feasible &&
            partition_by_representation(d, *remin.witness).mu == level - 1) {
            cur = std::move(*remin.witness);
        } else {
            cur = std::move(constructed);
        }
        chain.push_back({level - 1, cur.size(), cur});
    }
    return chain;
}

}  // namespace

AttackerSet antiresolving_chain(const DistanceMatrix& d, int k_target, const SolverOptions& opt) {
    if (!is_tree(d))
        throw std::invalid_argument("antiresolving_chain: metric does not describe a tree");
    if (k_target == 1) return adim_eq1(d, opt).witness;

    const int k_prime = adim_kopt(d, opt).k_opt;
    if (k_target < 1 || k_target > k_prime)
        throw std::invalid_argument("antiresolving_chain: k_target must lie in [1, " +
                                    std::to_string(k_prime) + "], got " +
                                    std::to_string(k_target));

    std::vector<TreeChainEntry> chain = walk_chain(d, k_target, opt);
    AttackerSet result = std::move(chain.back().witness);
    if (partition_by_representation(d, result).mu != k_target)
        throw std::logic_error("antiresolving_chain: descent produced a wrong measure");
    return result;
}

std::vector<TreeChainEntry> full_antiresolving_chain(const DistanceMatrix& d,
                                                     const SolverOptions& opt) {
    if (!is_tree(d))
        throw std::invalid_argument("full_antiresolving_chain: metric does not describe a tree");
    std::vector<TreeChainEntry> down = walk_chain(d, 2, opt);

    std::vector<TreeChainEntry> chain;
    Eq1Solution eq1 = adim_eq1(d, opt);
    chain.push_back({1, eq1.cardinality, std::move(eq1.witness)});
    for (auto it = down.rbegin(); it != down.rend(); ++it) {
        if (it->k == 1) continue;  // k'=1 trees: the walk holds only level 1
        chain.push_back(std::move(*it));
    }
    return chain;
}

}  // namespace adim
