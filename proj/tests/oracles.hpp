#pragma once

// Brute-force reference implementations used to compute expected values
// independently of the library's optimized paths.

#include <algorithm>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matchex/complex.hpp"
#include "matchex/face.hpp"
#include "matchex/graph.hpp"
#include "matchex/morse.hpp"
#include "matchex/snf.hpp"

namespace oracles {

using matchex::BigInt;
using matchex::Face;
using matchex::FaceSet;
using matchex::Graph;

// Every edge subset whose degrees respect the bounds; plain 2^m filter,
// no pruning, no shared code with the DFS enumerator.
inline std::vector<Face> bounded_degree_faces(const Graph& g, const std::vector<int>& bounds) {
    std::vector<Face> out;
    const int m = g.edge_count();
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        Face H(mask, 0);
        auto deg = g.subgraph_degrees(H);
        bool ok = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (deg[static_cast<std::size_t>(v)] > bounds[static_cast<std::size_t>(v)]) ok = false;
        if (ok) out.push_back(H);
    }
    return out;
}

// Direct domination check over all vertex subsets in increasing cardinality.
inline int domination_number(const Graph& g, const Face& H) {
    const int n = g.vertex_count();
    auto dominates = [&](std::uint64_t set) {
        for (int v = 0; v < n; ++v) {
            if ((set >> v) & 1) continue;
            bool covered = false;
            for (int p = H.lowest(); p >= 0; p = H.next(p + 1)) {
                auto [a, b] = g.edge(p);
                if ((a - 1 == v && ((set >> (b - 1)) & 1)) ||
                    (b - 1 == v && ((set >> (a - 1)) & 1))) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    };
    for (int k = 0; k <= n; ++k)
        for (std::uint64_t set = 0; set < (1ULL << n); ++set)
            if (__builtin_popcountll(set) == k && dominates(set)) return k;
    return n;
}

// Maximal faces by pairwise containment over the whole face list.
inline std::vector<Face> facets(const matchex::Complex& K) {
    std::vector<Face> all = K.all_faces();
    std::vector<Face> out;
    for (const Face& f : all) {
        bool maximal = true;
        for (const Face& g : all)
            if (!(g == f) && g.contains(f)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

// Element matching straight from its definition: every pair
// (sigma \ x, sigma + x) whose two members both lie in S.
inline std::vector<std::pair<Face, Face>> element_matching(const std::vector<Face>& S, int x) {
    FaceSet members(S.begin(), S.end());
    std::vector<std::pair<Face, Face>> pairs;
    for (const Face& sigma : S) {
        Face low = sigma.without(x);
        Face up = sigma.with(x);
        if (members.count(low) && members.count(up) && low == sigma)
            pairs.emplace_back(low, up);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

// Invariant factors from determinant divisors: d_k = gcd of all k x k
// minors, s_k = d_k / d_{k-1}.  Only sensible for tiny dense matrices.
inline std::vector<BigInt> snf_by_determinant_divisors(const std::vector<std::vector<long long>>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    auto minor_det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        const int k = static_cast<int>(rs.size());
        // Laplace expansion; k <= 5 keeps this cheap.
        std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(k),
                                           std::vector<BigInt>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    m[static_cast<std::size_t>(rs[static_cast<std::size_t>(i)])]
                     [static_cast<std::size_t>(cs[static_cast<std::size_t>(j)])];
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
        BigInt det = 0;
        do {
            int inversions = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                        ++inversions;
            BigInt term = inversions % 2 == 0 ? 1 : -1;
            for (int i = 0; i < k; ++i)
                term *= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            det += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    };

    auto all_subsets = [](int total, int k) {
        std::vector<std::vector<int>> subsets;
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        if (k == 0 || k > total) return subsets;
        while (true) {
            subsets.push_back(idx);
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        return subsets;
    };

    std::vector<BigInt> dets; // determinant divisors d_1, d_2, ...
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        BigInt g = 0;
        for (const auto& rs : all_subsets(rows, k))
            for (const auto& cs : all_subsets(cols, k))
                g = boost::multiprecision::gcd(g, minor_det(rs, cs));
        if (g == 0) break;
        dets.push_back(g);
    }
    std::vector<BigInt> factors;
    for (std::size_t k = 0; k < dets.size(); ++k)
        factors.push_back(k == 0 ? dets[0] : dets[k] / dets[k - 1]);
    return factors;
}

// A witness from is_acyclic must be a genuine alternating cycle.
inline bool valid_alternating_cycle(const matchex::MorseMatching& m,
                                    const std::vector<Face>& witness) {
    if (witness.size() < 4 || witness.size() % 2 != 0) return false;
    const std::size_t t = witness.size() / 2;
    for (std::size_t i = 0; i < t; ++i) {
        const Face& lower = witness[2 * i];
        const Face& upper = witness[2 * i + 1];
        bool is_pair = false;
        for (const auto& p : m.pairs)
            if (p.lower == lower && p.upper == upper) is_pair = true;
        if (!is_pair) return false;
        const Face& next_lower = witness[(2 * i + 2) % witness.size()];
        if (next_lower == lower) return false;
        if (!upper.contains(next_lower)) return false;
        if (next_lower.dimension() + 1 != upper.dimension()) return false;
    }
    return true;
}

// Deterministic random graph for property tests.
inline Graph random_graph(std::mt19937_64& rng, int max_vertices, double edge_prob = 0.5) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int n = nv(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng) < edge_prob) pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

} // namespace oracles
