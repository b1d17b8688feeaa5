#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "matchex/complex.hpp"

namespace matchex {

struct MorsePair {
    Face lower; // |upper| = |lower| + 1 and lower is a subset of upper
    Face upper;
    bool operator==(const MorsePair&) const = default;
};

// An ordered list of poset-vertex labels (edge indices of the parent graph);
// step i applies the element matching with label i to the current residual.
class Schedule {
public:
    Schedule(std::vector<int> labels, int ground_size);
    const std::vector<int>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }

private:
    std::vector<int> labels_;
};

// A partial matching on the face poset together with the unmatched faces.
// pairs and critical jointly cover every face (including the empty one)
// exactly once when produced by run_schedule.
struct MorseMatching {
    std::vector<MorsePair> pairs;
    std::vector<Face> critical; // sorted by (dimension, value)

    bool empty_face_paired() const;
    // One "lower_hex upper_hex" line per pair, then "# critical" and one
    // hex face per line.
    void write(std::ostream& out) const;
};

struct MorseSummary {
    std::map<int, long long> critical_by_dim; // raw counts, may include -1
    bool empty_face_paired = false;

    // Cell counts of the collapsed model: raw critical cells of dimension
    // >= 0, plus one extra 0-cell when the empty face was paired.
    std::map<int, long long> cw_cells() const;
    long long cw_euler() const; // equals the Euler characteristic of the complex

    // Set when the empty face is paired and every critical cell sits in one
    // dimension d >= 0: the complex is then a wedge of wedge_count
    // d-spheres.
    std::optional<int> single_dim;
    std::optional<long long> wedge_count;

    bool contractible() const {
        return empty_face_paired && critical_by_dim.empty();
    }
};

// All pairs (sigma \ {x}, sigma + {x}) with BOTH members in S, plus the
// residual S minus every paired face.  S is a plain face set: membership of
// sigma \ {x} is tested in S itself, not in any ambient complex.
std::pair<std::vector<MorsePair>, std::vector<Face>>
element_matching(const std::vector<Face>& S, int x);

// Applies the element matchings of the schedule to the shrinking residual,
// starting from every face of K (the empty face included).  The union of
// the step matchings is acyclic and its critical set is the final residual.
MorseMatching run_schedule(const Complex& K, const Schedule& schedule);

MorseSummary summarize(const MorseMatching& m);

struct AcyclicityResult {
    bool acyclic = true;
    // On failure: faces a_1, u_1, a_2, u_2, ... with u_i the partner of a_i,
    // a_{i+1} a proper face of u_i distinct from a_i, cyclically closed.
    std::vector<Face> witness;
};

// Checks the matching against the modified Hasse diagram of K layer by
// layer.  Throws std::invalid_argument on malformed matchings (shared
// faces, non-cover pairs, faces outside K).
AcyclicityResult is_acyclic(const Complex& K, const MorseMatching& m);

// The element-matching order on the edges of K_n: steps k = 1..n-1, within
// step k the labels {k,i} for i = k+1..n.
Schedule kn_schedule(int n);

// The element-matching order on the edges of K_{n,n}: steps k = 1..n-1,
// within step k the labels {a_k, b_j} for j = 1..n.
Schedule knn_schedule(int n);

// Closed form for the critical cells left by kn_schedule on the
// (n-2)-matching complex of K_n: for k = 1..n-1 the cell E(K_n) \ F_k with
// F_k = {{i,i+1} : i < k} + {{k,j} : j > k}.
std::vector<Face> predicted_critical_cells_kn(int n);

// Closed form for the single critical cell left by knn_schedule on the
// (n-1)-matching complex of K_{n,n}: all edges {a_i, b_j} with i <= n-1,
// j >= 2.
Face predicted_critical_cell_knn(int n);

} // namespace matchex
