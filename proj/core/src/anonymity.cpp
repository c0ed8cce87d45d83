#include "adim/anonymity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace adim {

AttackerSet::AttackerSet(std::vector<int> members, int graph_n)
    : members_(std::move(members)), graph_n_(graph_n) {
    if (members_.empty()) throw std::invalid_argument("attacker set must be non-empty");
    std::sort(members_.begin(), members_.end());
    if (members_.front() < 0 || members_.back() >= graph_n_)
        throw std::invalid_argument("attacker set member out of range");
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("attacker set members must be distinct");
    if (static_cast<int>(members_.size()) >= graph_n_)
        throw std::invalid_argument("attacker set must be a proper subset of the node set");
}

bool AttackerSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

MetricVector metric_representation(const DistanceMatrix& d, int v, const AttackerSet& s) {
    if (v < 0 || v >= d.node_count()) throw std::invalid_argument("node id out of range");
    if (s.graph_n() != d.node_count())
        throw std::invalid_argument("attacker set indexes a different graph");
    if (s.contains(v))
        throw std::invalid_argument("metric representation is defined only outside the attacker set");
    MetricVector mv;
    mv.coords.reserve(s.size());
    const std::uint16_t* row = d.row(v);
    for (int member : s.members()) mv.coords.push_back(row[member]);
    return mv;
}

ClassPartition partition_by_representation(const DistanceMatrix& d, const AttackerSet& s) {
    if (s.graph_n() != d.node_count())
        throw std::invalid_argument("attacker set indexes a different graph");
    const int n = d.node_count();

    std::vector<std::pair<MetricVector, int>> keyed;
    keyed.reserve(n - s.size());
    for (int v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        keyed.emplace_back(metric_representation(d, v, s), v);
    }
    std::sort(keyed.begin(), keyed.end());

    ClassPartition p{s, {}, {}, 0};
    for (std::size_t i = 0; i < keyed.size();) {
        std::size_t j = i;
        while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
        std::vector<int> members;
        members.reserve(j - i);
        for (std::size_t t = i; t < j; ++t) members.push_back(keyed[t].second);
        p.reprs.push_back(std::move(keyed[i].first));
        p.classes.push_back(std::move(members));
        i = j;
    }
    p.mu = static_cast<int>(keyed.size());
    for (const auto& cls : p.classes) p.mu = std::min(p.mu, static_cast<int>(cls.size()));
    return p;
}

bool verify_k_antiresolving(const DistanceMatrix& d, const AttackerSet& s, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    return partition_by_representation(d, s).mu == k;
}

std::string to_canonical_text(const ClassPartition& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        out << "repr=(";
        for (std::size_t c = 0; c < p.reprs[i].coords.size(); ++c) {
            if (c) out << ',';
            out << p.reprs[i].coords[c];
        }
        out << ") -> [";
        for (std::size_t c = 0; c < p.classes[i].size(); ++c) {
            if (c) out << ',';
            out << p.classes[i][c];
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace adim
