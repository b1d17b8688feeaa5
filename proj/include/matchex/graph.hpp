#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "matchex/face.hpp"

namespace matchex {

// For complete_bipartite(m, n): vertices 1..m are a_1..a_m, m+1..m+n are b_1..b_n.
struct Bipartition {
    int left = 0;
    int right = 0;
};

// Labeled simple graph on vertices 1..n.  Edges are stored as (u, v) pairs
// with u < v, duplicate-free, in lexicographic order; the position of an
// edge in that order is its index, which is also its bit position in every
// Face over this graph.
class Graph {
public:
    static Graph complete(int n);
    static Graph complete_bipartite(int m, int n);
    // Normalizes pairs to u < v, collapses duplicates, sorts lexicographically.
    static Graph from_edge_list(int n, std::vector<std::pair<int, int>> pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::pair<int, int> edge(int index) const;
    int edge_index(int u, int v) const; // throws std::invalid_argument if absent
    bool has_edge(int u, int v) const;

    const std::optional<Bipartition>& bipartition() const { return bip_; }

    // Degree of every vertex in the spanning subgraph ([n], H); entry v-1 is deg(v).
    std::vector<int> subgraph_degrees(const Face& H) const;
    int subgraph_degree(const Face& H, int v) const;

    // Exact minimum dominating set size of the spanning subgraph ([n], H);
    // searches vertex subsets in increasing cardinality.
    int domination_number(const Face& H) const;
    // True iff no dominating set of size < gamma exists.  Cheaper than
    // computing the full domination number when gamma is small.
    bool domination_at_least(const Face& H, int gamma) const;

    Face full_edge_set() const { return Face::full(edge_count()); }

    // Text format: first line "n m", then m lines "u v" (1-based), sorted.
    void write_edge_list(std::ostream& out) const;
    static Graph read_edge_list(std::istream& in);

private:
    Graph() = default;
    void index_edges();

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::optional<Bipartition> bip_;
};

} // namespace matchex
