#include "adim/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "adim/errors.hpp"
#include "parallel_for.hpp"

namespace adim {

namespace {

void check_deadline(const SolverOptions& opt) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
        throw TimeoutError("solver exceeded its time budget");
}

// Partition of V \ V' for one growing candidate set V', refined in place.
// Appending members to V' extends every metric vector by the distances to
// the new members, which can only split classes, never merge them; one
// split pass per appended member reproduces the full-vector partition.
class Trajectory {
public:
    Trajectory(const DistanceMatrix& d, int start)
        : d_(d), in_attacker_(d.node_count(), 0), attacker_size_(1) {
        const int n = d_.node_count();
        in_attacker_[start] = 1;
        remaining_ = n - 1;
        std::vector<int> all;
        all.reserve(remaining_);
        for (int v = 0; v < n; ++v)
            if (v != start) all.push_back(v);
        classes_.push_back(std::move(all));
        bucket_at_.assign(d_.diameter() + 1, -1);
        stamp_.assign(d_.diameter() + 1, -1);
        refine_by(start);
    }

    int remaining() const { return remaining_; }
    int attacker_size() const { return attacker_size_; }

    int mu() const {
        int m = remaining_;
        for (const auto& cls : classes_) m = std::min(m, static_cast<int>(cls.size()));
        return m;
    }

    // Step 3.2.4/3.2.5: move every minimum-size class into V', then split
    // the surviving classes by the distances to the absorbed nodes.
    void absorb_min_classes() {
        const int m = mu();
        absorbed_.clear();
        for (std::size_t c = 0; c < classes_.size();) {
            if (static_cast<int>(classes_[c].size()) == m) {
                for (int v : classes_[c]) {
                    in_attacker_[v] = 1;
                    absorbed_.push_back(v);
                }
                classes_[c] = std::move(classes_.back());
                classes_.pop_back();
            } else {
                ++c;
            }
        }
        remaining_ -= static_cast<int>(absorbed_.size());
        attacker_size_ += static_cast<int>(absorbed_.size());
        for (int v : absorbed_) refine_by(v);
    }

    std::vector<int> attacker_members() const {
        std::vector<int> members;
        members.reserve(attacker_size_);
        for (int v = 0; v < d_.node_count(); ++v)
            if (in_attacker_[v]) members.push_back(v);
        return members;
    }

private:
    void refine_by(int member) {
        const std::uint16_t* dist = d_.row(member);
        const std::size_t live = classes_.size();
        for (std::size_t c = 0; c < live; ++c) {
            auto& cls = classes_[c];
            if (cls.size() <= 1) continue;
            ++epoch_;
            buckets_.clear();
            for (int v : cls) {
                const std::uint16_t dv = dist[v];
                if (stamp_[dv] != epoch_) {
                    stamp_[dv] = epoch_;
                    bucket_at_[dv] = static_cast<int>(buckets_.size());
                    buckets_.emplace_back();
                }
                buckets_[bucket_at_[dv]].push_back(v);
            }
            if (buckets_.size() <= 1) continue;
            cls = std::move(buckets_.front());
            for (std::size_t b = 1; b < buckets_.size(); ++b)
                classes_.push_back(std::move(buckets_[b]));
        }
    }

    const DistanceMatrix& d_;
    std::vector<std::vector<int>> classes_;  // member lists stay ascending
    std::vector<char> in_attacker_;
    std::vector<int> absorbed_;
    std::vector<std::vector<int>> buckets_;
    std::vector<int> bucket_at_;  // distance value -> bucket index
    std::vector<long> stamp_;     // distance value -> epoch of bucket_at_
    long epoch_ = 0;
    int remaining_ = 0;
    int attacker_size_ = 0;
};

// Runs one start node to its first recordable state: the smallest |V'|
// along the growth trajectory with measure >= k, or INT_MAX if none.
// `bound` prunes trajectories that can no longer beat the incumbent.
int run_start(const DistanceMatrix& d, int start, int k, const SolverOptions& opt,
              const std::atomic<int>& bound) {
    Trajectory traj(d, start);
    for (;;) {
        if (traj.remaining() == 0) return INT_MAX;
        // strict: a candidate tying the incumbent may still win on start id
        if (traj.attacker_size() > bound.load(std::memory_order_relaxed)) return INT_MAX;
        check_deadline(opt);
        if (traj.mu() >= k) return traj.attacker_size();
        traj.absorb_min_classes();
    }
}

AttackerSet recover_witness(const DistanceMatrix& d, int start, int k, int expected_cardinality) {
    Trajectory traj(d, start);
    while (traj.remaining() > 0 && traj.mu() < k) traj.absorb_min_classes();
    if (traj.attacker_size() != expected_cardinality)
        throw std::logic_error("witness replay diverged from recorded cardinality");
    return AttackerSet(traj.attacker_members(), d.node_count());
}

}  // namespace

GeqSolution adim_geq_k(const DistanceMatrix& d, int k, const SolverOptions& opt) {
    const int n = d.node_count();
    if (n < 2) throw std::invalid_argument("adim_geq_k: graph must have at least 2 nodes");
    if (k < 1) throw std::invalid_argument("adim_geq_k: k must be positive, got " + std::to_string(k));
    if (k > n - 1) {
        // the measure is at most |V \ V'| <= n-1, so no set can reach k
        GeqSolution out;
        out.k = k;
        return out;
    }

    std::vector<int> per_start(n, INT_MAX);
    std::atomic<int> incumbent{INT_MAX};
    std::atomic<bool> stop{false};  // a 1-node set is unbeatable

    detail::parallel_for_ordered(n, opt.workers, &stop, [&](int start) {
        check_deadline(opt);
        const int card = run_start(d, start, k, opt, incumbent);
        per_start[start] = card;
        if (card == INT_MAX) return;
        int cur = incumbent.load(std::memory_order_relaxed);
        while (cur > card &&
               !incumbent.compare_exchange_weak(cur, card, std::memory_order_relaxed)) {
        }
        if (card == 1) stop.store(true, std::memory_order_relaxed);
    });

    int best_start = -1;
    int best_card = INT_MAX;
    for (int i = 0; i < n; ++i) {
        if (per_start[i] < best_card) {
            best_card = per_start[i];
            best_start = i;
        }
    }

    GeqSolution sol;
    sol.k = k;
    if (best_start >= 0) {
        sol.feasible = true;
        sol.cardinality = best_card;
        sol.witness = recover_witness(d, best_start, k, best_card);
    }
    return sol;
}

KoptSolution adim_kopt(const DistanceMatrix& d, const SolverOptions& opt) {
    const int n = d.node_count();
    if (n < 2) throw std::invalid_argument("adim_kopt: graph must have at least 2 nodes");

    // k = 1 is always feasible (every class has at least one member), and
    // no k above n-1 can be: the measure is bounded by |V \ V'| <= n-1.
    int lo = 1;
    int hi = n - 1;
    std::optional<GeqSolution> at_lo;
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        GeqSolution s = adim_geq_k(d, mid, opt);
        if (s.feasible) {
            lo = mid;
            at_lo = std::move(s);
        } else {
            hi = mid - 1;
        }
    }
    if (!at_lo || at_lo->k != lo) at_lo = adim_geq_k(d, lo, opt);

    KoptSolution sol{lo, at_lo->cardinality, std::move(*at_lo->witness),
                     static_cast<double>(lo) / n};
    return sol;
}

namespace {

// Fixed-width bitset over node ids; covers the set-cover instances up to
// any n the distance matrix supports.
struct Bitset {
    std::vector<std::uint64_t> w;

    void reset(int bits) { w.assign((bits + 63) / 64, 0); }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }

    void or_with(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }

    int gain_over(const Bitset& covered) const {
        int c = 0;
        for (std::size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & ~covered.w[i]);
        return c;
    }

    bool covers(const Bitset& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (o.w[i] & ~w[i]) return false;
        return true;
    }
};

struct CoverScratch {
    std::vector<Bitset> sets;
    Bitset covered;
    Bitset universe;
};

// Johnson's greedy set cover for one target node: universe a_j for j != i,
// S_j = {a_j} u {a_l : dist(i,j) != dist(l,j)}. Picks the largest residual
// coverage each round, ties to the smallest node id. Returns the chosen
// node ids, or nullopt if the sets cannot cover the universe.
std::optional<std::vector<int>> cover_target(const DistanceMatrix& d, int target,
                                             CoverScratch& scratch) {
    const int n = d.node_count();
    scratch.sets.resize(n);
    scratch.universe.reset(n);
    for (int j = 0; j < n; ++j) {
        if (j == target) continue;
        scratch.universe.set(j);
        Bitset& sj = scratch.sets[j];
        sj.reset(n);
        const std::uint16_t cij = d.at(target, j);
        const std::uint16_t* rj = d.row(j);
        for (int l = 0; l < n; ++l) {
            if (l == target) continue;
            if (l == j || rj[l] != cij) sj.set(l);
        }
    }

    Bitset& covered = scratch.covered;
    covered.reset(n);
    for (int j = 0; j < n; ++j)
        if (j != target) covered.or_with(scratch.sets[j]);
    if (!covered.covers(scratch.universe)) return std::nullopt;

    covered.reset(n);
    std::vector<int> chosen;
    int covered_count = 0;
    const int needed = n - 1;
    while (covered_count < needed) {
        int best_j = -1;
        int best_gain = 0;
        for (int j = 0; j < n; ++j) {
            if (j == target) continue;
            const int gain = scratch.sets[j].gain_over(covered);
            if (gain > best_gain) {
                best_gain = gain;
                best_j = j;
            }
        }
        if (best_j < 0) return std::nullopt;  // unreachable given the union check
        chosen.push_back(best_j);
        covered.or_with(scratch.sets[best_j]);
        covered_count = covered.count();
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

Eq1Solution adim_eq1(const DistanceMatrix& d, const SolverOptions& opt) {
    const int n = d.node_count();
    if (n < 2) throw std::invalid_argument("adim_eq1: graph must have at least 2 nodes");

    std::vector<int> per_target(n, INT_MAX);
    std::atomic<bool> stop{false};

    detail::parallel_for_ordered(n, opt.workers, &stop, [&](int target) {
        check_deadline(opt);
        thread_local CoverScratch scratch;
        if (auto chosen = cover_target(d, target, scratch)) {
            per_target[target] = static_cast<int>(chosen->size());
            if (per_target[target] == 1) stop.store(true, std::memory_order_relaxed);
        }
    });

    int best_target = -1;
    int best_card = INT_MAX;
    for (int i = 0; i < n; ++i) {
        if (per_target[i] < best_card) {
            best_card = per_target[i];
            best_target = i;
        }
    }
    // A measure-1 set always exists (any n-1 nodes leave a singleton), so
    // an empty result can only mean the reduction above is broken.
    if (best_target < 0)
        throw std::logic_error("adim_eq1: no target admitted a cover; contract violated");

    CoverScratch scratch;
    auto chosen = cover_target(d, best_target, scratch);
    if (!chosen || static_cast<int>(chosen->size()) != best_card)
        throw std::logic_error("adim_eq1: witness replay diverged");
    return Eq1Solution{best_card, AttackerSet(std::move(*chosen), n)};
}

namespace {

// Ascending (size, lexicographic) walk over non-empty proper subsets.
// visit returns true to stop the walk.
template <typename Visit>
void for_each_subset(int n, Visit&& visit) {
    std::vector<int> idx;
    for (int size = 1; size <= n - 1; ++size) {
        idx.resize(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            if (visit(idx)) return;
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
}

void check_oracle_scale(const DistanceMatrix& d, int max_n, const char* who) {
    if (d.node_count() > max_n)
        throw std::invalid_argument(std::string(who) + ": enumeration refused for n=" +
                                    std::to_string(d.node_count()) + " > max_n=" +
                                    std::to_string(max_n));
    if (d.node_count() < 2)
        throw std::invalid_argument(std::string(who) + ": graph must have at least 2 nodes");
}

int subset_measure(const DistanceMatrix& d, const std::vector<int>& members) {
    return partition_by_representation(d, AttackerSet(members, d.node_count())).mu;
}

}  // namespace

GeqSolution oracle_brute_force_geq(const DistanceMatrix& d, int k, int max_n) {
    check_oracle_scale(d, max_n, "oracle_brute_force_geq");
    if (k < 1) throw std::invalid_argument("oracle_brute_force_geq: k must be positive");
    GeqSolution sol;
    sol.k = k;
    for_each_subset(d.node_count(), [&](const std::vector<int>& members) {
        if (subset_measure(d, members) >= k) {
            sol.feasible = true;
            sol.cardinality = static_cast<int>(members.size());
            sol.witness = AttackerSet(members, d.node_count());
            return true;
        }
        return false;
    });
    return sol;
}

KoptSolution oracle_kopt(const DistanceMatrix& d, int max_n) {
    check_oracle_scale(d, max_n, "oracle_kopt");
    int best_mu = 0;
    std::optional<AttackerSet> witness;
    for_each_subset(d.node_count(), [&](const std::vector<int>& members) {
        const int mu = subset_measure(d, members);
        if (mu > best_mu) {
            best_mu = mu;
            witness = AttackerSet(members, d.node_count());
        }
        return false;
    });
    return KoptSolution{best_mu, witness->size(), std::move(*witness),
                        static_cast<double>(best_mu) / d.node_count()};
}

Eq1Solution oracle_eq1(const DistanceMatrix& d, int max_n) {
    check_oracle_scale(d, max_n, "oracle_eq1");
    std::optional<AttackerSet> witness;
    for_each_subset(d.node_count(), [&](const std::vector<int>& members) {
        if (subset_measure(d, members) == 1) {
            witness = AttackerSet(members, d.node_count());
            return true;
        }
        return false;
    });
    // Guaranteed to exist: any n-1 nodes leave one singleton class.
    return Eq1Solution{witness->size(), std::move(*witness)};
}

namespace {

nlohmann::json witness_json(const AttackerSet& s, const std::vector<std::string>* labels) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : s.members()) {
        if (labels && v < static_cast<int>(labels->size()))
            arr.push_back((*labels)[v]);
        else
            arr.push_back(v);
    }
    return arr;
}

}  // namespace

nlohmann::json to_json(const GeqSolution& s, const std::vector<std::string>* labels) {
    nlohmann::json j;
    j["problem"] = "adim-geq-k";
    j["k"] = s.k;
    j["feasible"] = s.feasible;
    j["p"] = 1.0 / s.k;
    if (s.feasible) {
        j["cardinality"] = s.cardinality;
        j["witness"] = witness_json(*s.witness, labels);
    } else {
        j["cardinality"] = nullptr;
        j["witness"] = nlohmann::json::array();
    }
    return j;
}

nlohmann::json to_json(const KoptSolution& s, const std::vector<std::string>* labels) {
    nlohmann::json j;
    j["problem"] = "adim-kopt";
    j["k"] = s.k_opt;
    j["feasible"] = true;
    j["p"] = 1.0 / s.k_opt;
    j["cardinality"] = s.cardinality;
    j["witness"] = witness_json(s.witness, labels);
    j["fraction"] = s.fraction;
    return j;
}

nlohmann::json to_json(const Eq1Solution& s, const std::vector<std::string>* labels) {
    nlohmann::json j;
    j["problem"] = "adim-eq-1";
    j["k"] = 1;
    j["feasible"] = true;
    j["p"] = 1.0;
    j["cardinality"] = s.cardinality;
    j["witness"] = witness_json(s.witness, labels);
    return j;
}

}  // namespace adim
