#include "adim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "adim/errors.hpp"

namespace adim {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("node count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});

    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) continue;
        normalized.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    for (auto [a, b] : normalized) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = static_cast<long long>(normalized.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

ParsedGraph parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;
    ParsedGraph out;

    auto intern = [&](const std::string& label) {
        auto [it, inserted] = ids.emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a)) continue;  // blank line
        if (a[0] == '#' || a[0] == '%') continue;
        if (!(tokens >> b) || (tokens >> extra))
            throw ParseError("expected two whitespace-separated node labels", line_no);
        int u = intern(a);
        int v = intern(b);
        if (u == v) {
            ++out.dropped_loops;
            continue;
        }
        long long key = (static_cast<long long>(std::min(u, v)) << 32) | std::max(u, v);
        if (!seen.insert(key).second) {
            ++out.dropped_duplicates;
            continue;
        }
        edges.emplace_back(u, v);
    }

    out.graph = Graph::from_edges(static_cast<int>(labels.size()), edges);
    out.labels = std::move(labels);
    return out;
}

ParsedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

ParsedGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

void write_label_map(const std::vector<std::string>& labels, std::ostream& out) {
    for (std::size_t id = 0; id < labels.size(); ++id)
        out << labels[id] << ' ' << id << '\n';
}

namespace {

// Component id per node, filled by BFS sweeps in ascending source order.
std::vector<int> component_ids(const Graph& g, int* count_out) {
    const int n = g.node_count();
    std::vector<int> comp(n, -1);
    std::vector<int> queue;
    int count = 0;
    for (int source = 0; source < n; ++source) {
        if (comp[source] != -1) continue;
        comp[source] = count;
        queue.assign(1, source);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (comp[v] == -1) {
                    comp[v] = count;
                    queue.push_back(v);
                }
            }
        }
        ++count;
    }
    if (count_out) *count_out = count;
    return comp;
}

}  // namespace

ComponentExtraction largest_connected_component(const Graph& g) {
    const int n = g.node_count();
    int count = 0;
    std::vector<int> comp = component_ids(g, &count);

    std::vector<int> sizes(count, 0);
    for (int v = 0; v < n; ++v) ++sizes[comp[v]];
    // Components are numbered by discovery order, so the first maximum
    // is also the one with the smallest minimum original id.
    int best = 0;
    for (int c = 1; c < count; ++c)
        if (sizes[c] > sizes[best]) best = c;

    ComponentExtraction out;
    if (count == 0) return out;  // empty graph

    std::vector<int> remap(n, -1);
    for (int v = 0; v < n; ++v) {
        if (comp[v] == best) {
            remap[v] = static_cast<int>(out.original_ids.size());
            out.original_ids.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        if (remap[u] == -1) continue;
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(remap[u], remap[v]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.original_ids.size()), edges);
    return out;
}

bool is_connected(const Graph& g) {
    return !unreachable_pair(g).has_value();
}

std::optional<std::pair<int, int>> unreachable_pair(const Graph& g) {
    const int n = g.node_count();
    if (n <= 1) return std::nullopt;
    std::vector<int> comp = component_ids(g, nullptr);
    for (int v = 0; v < n; ++v)
        if (comp[v] != comp[0]) return std::make_pair(0, v);
    return std::nullopt;
}

}  // namespace adim
