#include <random>

#include "doctest.h"
#include "matchex/snf.hpp"
#include "oracles.hpp"

using matchex::BigInt;
using matchex::integer_rank;
using matchex::smith_normal_form;
using matchex::SparseIntMatrix;

namespace {

std::vector<BigInt> to_bigints(std::initializer_list<long long> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

std::vector<std::vector<long long>> random_matrix(std::mt19937_64& rng, int max_dim) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<long long> entry(-9, 9);
    int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(rows),
                                          std::vector<long long>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
        for (auto& v : row) v = entry(rng);
    return m;
}

// Random unimodular row/column operations leave the invariant factors alone.
std::vector<std::vector<long long>> shuffle_unimodular(std::vector<std::vector<long long>> m,
                                                       std::mt19937_64& rng) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    std::uniform_int_distribution<long long> coeff(-2, 2);
    for (int step = 0; step < 12; ++step) {
        if (rng() % 2 && rows > 1) {
            int a = static_cast<int>(rng() % rows), b = static_cast<int>(rng() % rows);
            if (a == b) continue;
            long long q = coeff(rng);
            for (int c = 0; c < cols; ++c)
                m[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] +=
                    q * m[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        } else if (cols > 1) {
            int a = static_cast<int>(rng() % cols), b = static_cast<int>(rng() % cols);
            if (a == b) continue;
            long long q = coeff(rng);
            for (int r = 0; r < rows; ++r)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] +=
                    q * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)];
        }
    }
    return m;
}

} // namespace

TEST_CASE("snf of simple matrices") {
    // Identity.
    auto id = SparseIntMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(smith_normal_form(id).diagonal == to_bigints({1, 1, 1}));

    // Worked 2x2 example: d1 = gcd of entries = 2, d1*d2 = |det| = 8.
    auto m = SparseIntMatrix::from_dense({{2, 4}, {6, 8}});
    CHECK(smith_normal_form(m).diagonal == to_bigints({2, 4}));
    CHECK(oracles::snf_by_determinant_divisors({{2, 4}, {6, 8}}) == to_bigints({2, 4}));

    // Zero matrix.
    SparseIntMatrix zero(3, 2);
    CHECK(smith_normal_form(zero).diagonal.empty());
    CHECK(smith_normal_form(zero).rank() == 0);
    CHECK(integer_rank(zero) == 0);

    // Empty shapes.
    SparseIntMatrix none(0, 5);
    CHECK(smith_normal_form(none).rank() == 0);
    CHECK(integer_rank(SparseIntMatrix(4, 0)) == 0);

    // A torsion classic: the boundary of the doubled interval.
    auto two = SparseIntMatrix::from_dense({{2}});
    CHECK(smith_normal_form(two).diagonal == to_bigints({2}));
}

TEST_CASE("snf agrees with the determinant-divisor oracle") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        auto dense = random_matrix(rng, 5);
        auto got = smith_normal_form(SparseIntMatrix::from_dense(dense)).diagonal;
        auto want = oracles::snf_by_determinant_divisors(dense);
        CHECK(got == want);
    }
}

TEST_CASE("snf divisibility chain and unimodular invariance") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        auto dense = random_matrix(rng, 5);
        auto result = smith_normal_form(SparseIntMatrix::from_dense(dense));
        for (std::size_t i = 0; i + 1 < result.diagonal.size(); ++i) {
            CHECK(result.diagonal[i] > 0);
            CHECK(result.diagonal[i + 1] % result.diagonal[i] == 0);
        }
        auto shuffled = shuffle_unimodular(dense, rng);
        CHECK(smith_normal_form(SparseIntMatrix::from_dense(shuffled)).diagonal == result.diagonal);
    }
}

TEST_CASE("integer rank agrees with snf rank") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 80; ++trial) {
        auto dense = random_matrix(rng, 6);
        auto m = SparseIntMatrix::from_dense(dense);
        CHECK(integer_rank(m) == smith_normal_form(m).rank());
    }

    // Known rank: two proportional rows.
    auto m = SparseIntMatrix::from_dense({{2, 4, 6}, {3, 6, 9}});
    CHECK(integer_rank(m) == 1);
}

TEST_CASE("duplicate triplets accumulate") {
    SparseIntMatrix m(2, 2);
    m.add(0, 0, 1);
    m.add(0, 0, 2);
    m.add(1, 1, 5);
    m.add(0, 1, 3);
    m.add(0, 1, -3); // cancels
    auto d = smith_normal_form(m).diagonal;
    CHECK(d == to_bigints({1, 15})); // diag(3, 5) normalizes to 1 | 15
}
