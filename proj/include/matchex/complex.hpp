#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "matchex/face.hpp"
#include "matchex/graph.hpp"

namespace matchex {

struct ComplexStats {
    std::vector<long long> f_vector;       // f_vector[d] = number of d-faces, d >= 0
    long long euler = 0;                   // sum (-1)^d f_d, empty face excluded
    int dim = -1;                          // -1 for {empty}, -2 for the void complex
    std::map<int, long long> facet_dims;   // dimension -> facet count
    bool is_pure = true;
};

// An explicit simplicial complex over up to 128 ground positions: every face
// is stored, grouped by dimension and sorted by bitset value.  The empty
// face is tracked by a flag; the void complex (no faces at all) is distinct
// from {empty}.
class Complex {
public:
    // Budget for explicitly stored faces; construction beyond it throws.
    static constexpr long long max_faces = 1LL << 23;

    static Complex void_complex(int ground_size);
    static Complex empty_complex(int ground_size); // the complex {empty}
    static Complex full_simplex(int ground_size);
    // Downward closure of the given generating faces.
    static Complex closure(int ground_size, const std::vector<Face>& generators);

    int ground_size() const { return ground_; }
    bool includes_empty() const { return has_empty_; }
    bool is_void() const { return !has_empty_; }
    int dim() const;

    const std::vector<Face>& faces(int d) const; // empty list outside 0..dim
    long long face_count() const;                // counts the empty face too
    std::vector<long long> f_vector() const;

    bool contains(const Face& f) const;
    // Position of f among the faces of its dimension; -1 if absent.
    long long face_position(const Face& f) const;

    // Every face including the empty one, ascending by (dimension, value).
    std::vector<Face> all_faces() const;

    Complex skeleton(int s) const;
    Complex link(const Face& sigma) const;
    static Complex join(const Complex& a, const Complex& b);
    // Applies a permutation of ground positions: new position = perm[old].
    Complex relabeled(const std::vector<int>& perm) const;

    std::vector<Face> facets() const;
    ComplexStats stats() const;

    bool operator==(const Complex& other) const {
        return ground_ == other.ground_ && has_empty_ == other.has_empty_ &&
               by_dim_ == other.by_dim_;
    }

    // Deterministic text serialization; load validates and round-trips.
    void save(std::ostream& out) const;
    static Complex load(std::istream& in);

    // True when every subset of every stored face is stored (full scan).
    bool downward_closed() const;

private:
    friend Complex faces_from_filter(const Graph& g, int ground,
                                     const std::vector<Face>& kept);
    friend Complex bounded_degree_complex(const Graph& g, const std::vector<int>& bounds);
    friend Complex domination_complex(int n, int gamma);

    void insert_sorted(std::vector<Face>&& faces); // distributes by dimension
    void sort_dims();
    void check_budget(long long count) const;

    int ground_ = 0;
    bool has_empty_ = false;
    std::vector<std::vector<Face>> by_dim_;
};

// Faces are the edge subsets H of G with deg_H(i) <= bounds[i-1] for all i.
Complex bounded_degree_complex(const Graph& g, const std::vector<int>& bounds);

// bounded_degree_complex with the constant bound r.
Complex matching_complex(const Graph& g, int r);

// Faces are the edge subsets H of K_n whose spanning subgraph has domination
// number >= gamma.  Filters all 2^C(n,2) subsets, so n is capped at 6.
Complex domination_complex(int n, int gamma);

} // namespace matchex
