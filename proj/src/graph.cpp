#include "matchex/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace matchex {

namespace {

void check_vertex_count(int n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

} // namespace

Graph Graph::complete(int n) {
    check_vertex_count(n);
    Graph g;
    g.n_ = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.edges_.emplace_back(u, v);
    g.index_edges();
    return g;
}

Graph Graph::complete_bipartite(int m, int n) {
    check_vertex_count(m);
    check_vertex_count(n);
    Graph g;
    g.n_ = m + n;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) g.edges_.emplace_back(i, m + j);
    g.bip_ = Bipartition{m, n};
    g.index_edges();
    return g;
}

Graph Graph::from_edge_list(int n, std::vector<std::pair<int, int>> pairs) {
    check_vertex_count(n);
    Graph g;
    g.n_ = n;
    for (auto& [u, v] : pairs) {
        if (u == v) throw std::invalid_argument("loop edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range [1," + std::to_string(n) + "]");
        if (u > v) std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    g.edges_ = std::move(pairs);
    g.index_edges();
    return g;
}

void Graph::index_edges() {
    if (edge_count() > Face::max_bits)
        throw CapacityError("graph has " + std::to_string(edges_.size()) +
                            " edges; the cap is " + std::to_string(Face::max_bits));
}

std::pair<int, int> Graph::edge(int index) const {
    if (index < 0 || index >= edge_count())
        throw std::invalid_argument("edge index " + std::to_string(index) + " out of range");
    return edges_[static_cast<std::size_t>(index)];
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v))
        throw std::invalid_argument("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return static_cast<int>(it - edges_.begin());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> Graph::subgraph_degrees(const Face& H) const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (int p = H.lowest(); p >= 0; p = H.next(p + 1)) {
        auto [u, v] = edge(p);
        ++deg[static_cast<std::size_t>(u - 1)];
        ++deg[static_cast<std::size_t>(v - 1)];
    }
    return deg;
}

int Graph::subgraph_degree(const Face& H, int v) const {
    int d = 0;
    for (int p = H.lowest(); p >= 0; p = H.next(p + 1)) {
        auto [a, b] = edge(p);
        if (a == v || b == v) ++d;
    }
    return d;
}

namespace {

// Closed-neighborhood masks over vertices 0..n-1 (Face reused as vertex set).
std::vector<Face> closed_neighborhoods(const Graph& g, const Face& H) {
    std::vector<Face> nbr(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) nbr[static_cast<std::size_t>(v)].set(v);
    for (int p = H.lowest(); p >= 0; p = H.next(p + 1)) {
        auto [u, v] = g.edge(p);
        nbr[static_cast<std::size_t>(u - 1)].set(v - 1);
        nbr[static_cast<std::size_t>(v - 1)].set(u - 1);
    }
    return nbr;
}

// Whether some k-subset of `candidates` (vertex ids), together with `base`,
// dominates `all`.  Plain combination enumeration with early exit.
bool dominating_set_of_size(const std::vector<Face>& nbr, const Face& base_cover,
                            const std::vector<int>& candidates, int k, const Face& all) {
    int m = static_cast<int>(candidates.size());
    if (k > m) return false;
    if (k == 0) return base_cover == all;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Face cover = base_cover;
        for (int i : idx) cover = cover | nbr[static_cast<std::size_t>(candidates[static_cast<std::size_t>(i)])];
        if (cover == all) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

int Graph::domination_number(const Face& H) const {
    const auto nbr = closed_neighborhoods(*this, H);
    const Face all = Face::full(n_);
    // Isolated vertices dominate only themselves, so they belong to every
    // dominating set; search over the rest.
    Face base;
    std::vector<int> active;
    for (int v = 0; v < n_; ++v) {
        if (nbr[static_cast<std::size_t>(v)].cardinality() == 1)
            base.set(v);
        else
            active.push_back(v);
    }
    int forced = base.cardinality();
    for (int k = 0; k <= static_cast<int>(active.size()); ++k)
        if (dominating_set_of_size(nbr, base, active, k, all)) return forced + k;
    return n_; // unreachable: k = |active| always dominates
}

bool Graph::domination_at_least(const Face& H, int gamma) const {
    if (gamma <= 1) return true; // any graph has a dominating set, so dom >= 1
    const auto nbr = closed_neighborhoods(*this, H);
    const Face all = Face::full(n_);
    Face base;
    std::vector<int> active;
    for (int v = 0; v < n_; ++v) {
        if (nbr[static_cast<std::size_t>(v)].cardinality() == 1)
            base.set(v);
        else
            active.push_back(v);
    }
    int forced = base.cardinality();
    if (forced >= gamma) return true;
    for (int k = 0; forced + k < gamma; ++k)
        if (dominating_set_of_size(nbr, base, active, k, all)) return false;
    return true;
}

void Graph::write_edge_list(std::ostream& out) const {
    out << n_ << ' ' << edge_count() << '\n';
    for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
}

Graph Graph::read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
    if (m < 0) throw std::runtime_error("edge list: negative edge count");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        pairs.emplace_back(u, v);
    }
    return from_edge_list(n, std::move(pairs));
}

} // namespace matchex
