#pragma once

#include <vector>

#include "matchex/complex.hpp"
#include "matchex/snf.hpp"

namespace matchex {

// The d-th simplicial boundary map C_d -> C_{d-1} in the bases given by the
// complex's sorted face lists, reduced convention: the 0-th map is the
// augmentation onto the empty face.
struct BoundaryMatrix {
    int d = 0;
    long long rows = 0; // number of (d-1)-faces
    long long cols = 0; // number of d-faces
    std::vector<SparseIntMatrix::Triplet> entries; // values are +1/-1

    SparseIntMatrix matrix() const { return SparseIntMatrix(rows, cols, entries); }
};

BoundaryMatrix boundary_matrix(const Complex& K, int d);

struct HomologyProfile {
    std::vector<long long> betti;             // betti[i] for 0 <= i <= dim
    std::vector<std::vector<BigInt>> torsion; // invariant factors > 1 per dimension
    bool reduced = true;

    long long betti_at(int i) const {
        return i >= 0 && i < static_cast<int>(betti.size()) ? betti[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<BigInt>& torsion_at(int i) const {
        static const std::vector<BigInt> none;
        return i >= 0 && i < static_cast<int>(torsion.size()) ? torsion[static_cast<std::size_t>(i)]
                                                              : none;
    }
    bool torsion_free() const {
        for (const auto& t : torsion)
            if (!t.empty()) return false;
        return true;
    }
    // Dimensions with a nonzero group (betti or torsion).
    std::vector<int> nonzero_dims() const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(betti.size()); ++i)
            if (betti_at(i) != 0 || !torsion_at(i).empty()) out.push_back(i);
        return out;
    }
    bool operator==(const HomologyProfile&) const = default;
};

// Exact reduced integral homology: betti_i = f_i - rank d_i - rank d_{i+1},
// torsion_i from the Smith normal form of d_{i+1}.  threads = 0 lets the
// implementation pick; 1 forces sequential.
HomologyProfile reduced_homology(const Complex& K, int threads = 0);

// Reduced Betti numbers via the fraction-free rank route only; an
// independent cross-check of the SNF path.
std::vector<long long> betti_over_rationals(const Complex& K, int threads = 0);

} // namespace matchex
