#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adim {

/// Simple undirected graph over node ids 0..n-1 with sorted adjacency
/// lists. Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Self-loops and duplicate edges
    /// are dropped silently; endpoints outside [0, n) throw.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int node_count() const noexcept { return n_; }
    long long edge_count() const noexcept { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Result of parsing a whitespace-separated edge list with arbitrary
/// string labels. Node ids are assigned by rank of first appearance.
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;   // node id -> original label
    long long dropped_loops = 0;       // self-loops seen in the input
    long long dropped_duplicates = 0;  // repeated edges seen in the input
};

/// Lines starting with '#' or '%' are comments; blank lines are skipped;
/// any other line must hold exactly two tokens or a ParseError is thrown.
/// Empty input yields the empty graph.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(const std::string& text);
ParsedGraph load_edge_list_file(const std::string& path);

/// Canonical serialization: one "u v" line per edge, u < v, ascending.
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

/// Two-column "label id" sidecar for graphs parsed from labeled input.
void write_label_map(const std::vector<std::string>& labels, std::ostream& out);

struct ComponentExtraction {
    Graph graph;                    // induced subgraph, relabeled 0..m-1
    std::vector<int> original_ids;  // new id -> id in the input graph
};

/// Induced subgraph on the largest connected component. Size ties go to
/// the component holding the smallest original id; relabeling preserves
/// the relative order of the surviving ids.
ComponentExtraction largest_connected_component(const Graph& g);

bool is_connected(const Graph& g);

/// A witness pair (u, v) with no u-v path, or nullopt when connected.
std::optional<std::pair<int, int>> unreachable_pair(const Graph& g);

}  // namespace adim
