#include "matchex/homology.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace matchex {

BoundaryMatrix boundary_matrix(const Complex& K, int d) {
    if (d < 0) throw std::invalid_argument("boundary dimension must be >= 0");
    BoundaryMatrix b;
    b.d = d;
    if (d == 0) {
        b.rows = K.includes_empty() ? 1 : 0;
        b.cols = static_cast<long long>(K.faces(0).size());
        for (long long j = 0; j < b.cols; ++j) b.entries.push_back({0, j, 1});
        return b;
    }
    const auto& cols = K.faces(d);
    const auto& rows = K.faces(d - 1);
    b.rows = static_cast<long long>(rows.size());
    b.cols = static_cast<long long>(cols.size());
    b.entries.reserve(cols.size() * static_cast<std::size_t>(d + 1));
    for (long long j = 0; j < b.cols; ++j) {
        const Face& sigma = cols[static_cast<std::size_t>(j)];
        long long sign = 1;
        for (int p = sigma.lowest(); p >= 0; p = sigma.next(p + 1)) {
            long long i = K.face_position(sigma.without(p));
            if (i < 0) throw std::logic_error("complex is not downward closed");
            b.entries.push_back({i, j, sign});
            sign = -sign;
        }
    }
    return b;
}

namespace {

// Run fn(d) for d = 0..count-1 on a small pool; results must land in
// pre-sized slots so the outcome is independent of scheduling.
void parallel_dims(int count, int threads, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    int pool = threads > 0 ? threads : static_cast<int>(hw ? hw : 1);
    pool = std::min(pool, count);
    if (pool <= 1) {
        for (int d = 0; d < count; ++d) fn(d);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) {
        workers.emplace_back([&] {
            while (true) {
                int d = next.fetch_add(1);
                if (d >= count) return;
                try {
                    fn(d);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

HomologyProfile reduced_homology(const Complex& K, int threads) {
    if (K.is_void()) throw std::invalid_argument("homology of the void complex");
    HomologyProfile p;
    int dim = K.dim();
    if (dim < 0) return p; // the complex {empty}: trivial reduced homology
    // Smith normal forms of d_0 .. d_dim; d_{dim+1} is the zero map.
    std::vector<SNFResult> snf(static_cast<std::size_t>(dim) + 1);
    parallel_dims(dim + 1, threads,
                  [&](int d) { snf[static_cast<std::size_t>(d)] = smith_normal_form(boundary_matrix(K, d).matrix()); });
    auto rank_of = [&](int d) -> long long {
        if (d < 0 || d > dim) return 0;
        return snf[static_cast<std::size_t>(d)].rank();
    };
    p.betti.resize(static_cast<std::size_t>(dim) + 1);
    p.torsion.resize(static_cast<std::size_t>(dim) + 1);
    for (int i = 0; i <= dim; ++i) {
        long long fi = static_cast<long long>(K.faces(i).size());
        p.betti[static_cast<std::size_t>(i)] = fi - rank_of(i) - rank_of(i + 1);
        if (i + 1 <= dim) {
            for (const BigInt& v : snf[static_cast<std::size_t>(i + 1)].diagonal)
                if (v > 1) p.torsion[static_cast<std::size_t>(i)].push_back(v);
        }
    }
    return p;
}

std::vector<long long> betti_over_rationals(const Complex& K, int threads) {
    if (K.is_void()) throw std::invalid_argument("homology of the void complex");
    int dim = K.dim();
    if (dim < 0) return {};
    std::vector<long long> rank(static_cast<std::size_t>(dim) + 1, 0);
    parallel_dims(dim + 1, threads,
                  [&](int d) { rank[static_cast<std::size_t>(d)] = integer_rank(boundary_matrix(K, d).matrix()); });
    auto rank_of = [&](int d) -> long long {
        if (d < 0 || d > dim) return 0;
        return rank[static_cast<std::size_t>(d)];
    };
    std::vector<long long> betti(static_cast<std::size_t>(dim) + 1);
    for (int i = 0; i <= dim; ++i) {
        long long fi = static_cast<long long>(K.faces(i).size());
        betti[static_cast<std::size_t>(i)] = fi - rank_of(i) - rank_of(i + 1);
    }
    return betti;
}

} // namespace matchex
