#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace matchex {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix held as triplets until an elimination routine
// ingests it.  Duplicate (row, col) triplets accumulate.
class SparseIntMatrix {
public:
    struct Triplet {
        long long row;
        long long col;
        long long value;
    };

    SparseIntMatrix(long long rows, long long cols) : rows_(rows), cols_(cols) {}
    SparseIntMatrix(long long rows, long long cols, std::vector<Triplet> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {}

    static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& m);

    void add(long long row, long long col, long long value) {
        entries_.push_back({row, col, value});
    }

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    const std::vector<Triplet>& entries() const { return entries_; }

private:
    long long rows_ = 0;
    long long cols_ = 0;
    std::vector<Triplet> entries_;
};

struct SNFResult {
    // Invariant factors d_1 | d_2 | ... | d_k, all positive.
    std::vector<BigInt> diagonal;
    long long rank() const { return static_cast<long long>(diagonal.size()); }
};

// Exact Smith normal form by sparse integer elimination: pivots are chosen
// in low-fill columns with minimal absolute value, entries stay
// arbitrary-precision throughout, and the diagonal is normalized into a
// divisibility chain afterwards.
SNFResult smith_normal_form(const SparseIntMatrix& m);

// Rank over the rationals via fraction-free row elimination (scaled integer
// row operations only, no column operations and no invariant-factor logic).
// Kept independent of smith_normal_form as a cross-check route.
long long integer_rank(const SparseIntMatrix& m);

} // namespace matchex
