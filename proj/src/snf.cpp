#include "matchex/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace matchex {

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& m) {
    long long rows = static_cast<long long>(m.size());
    long long cols = rows == 0 ? 0 : static_cast<long long>(m[0].size());
    SparseIntMatrix out(rows, cols);
    for (long long r = 0; r < rows; ++r) {
        if (static_cast<long long>(m[static_cast<std::size_t>(r)].size()) != cols)
            throw std::invalid_argument("ragged dense matrix");
        for (long long c = 0; c < cols; ++c) {
            long long v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v != 0) out.add(r, c, v);
        }
    }
    return out;
}

namespace {

using Entry = std::pair<int, BigInt>; // (column, value), rows sorted by column

// Shared sparse elimination state.  Rows are sorted column/value vectors;
// per-column row lists are append-only with lazy cleanup, while the nnz
// counters are exact.
struct Workspace {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::vector<Entry>> rows;
    std::vector<std::vector<int>> col_rows;
    std::vector<int> col_nnz;
    std::vector<char> row_active;
    std::vector<char> col_active;

    explicit Workspace(const SparseIntMatrix& m) {
        if (m.rows() > std::numeric_limits<int>::max() || m.cols() > std::numeric_limits<int>::max())
            throw std::invalid_argument("matrix too large for elimination workspace");
        nrows = static_cast<int>(m.rows());
        ncols = static_cast<int>(m.cols());
        rows.assign(static_cast<std::size_t>(nrows), {});
        col_rows.assign(static_cast<std::size_t>(ncols), {});
        col_nnz.assign(static_cast<std::size_t>(ncols), 0);
        row_active.assign(static_cast<std::size_t>(nrows), 1);
        col_active.assign(static_cast<std::size_t>(ncols), 1);

        std::vector<SparseIntMatrix::Triplet> ts = m.entries();
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (std::size_t i = 0; i < ts.size();) {
            std::size_t j = i;
            BigInt sum = 0;
            while (j < ts.size() && ts[j].row == ts[i].row && ts[j].col == ts[i].col) {
                sum += ts[j].value;
                ++j;
            }
            if (sum != 0) {
                int r = static_cast<int>(ts[i].row);
                int c = static_cast<int>(ts[i].col);
                if (r < 0 || r >= nrows || c < 0 || c >= ncols)
                    throw std::invalid_argument("triplet out of the matrix shape");
                rows[static_cast<std::size_t>(r)].emplace_back(c, std::move(sum));
                col_rows[static_cast<std::size_t>(c)].push_back(r);
                ++col_nnz[static_cast<std::size_t>(c)];
            }
            i = j;
        }
    }

    const BigInt* find(int r, int c) const {
        const auto& row = rows[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != c) return nullptr;
        return &it->second;
    }

    void note_insert(int r, int c) {
        col_rows[static_cast<std::size_t>(c)].push_back(r);
        ++col_nnz[static_cast<std::size_t>(c)];
    }

    void note_erase(int c) { --col_nnz[static_cast<std::size_t>(c)]; }

    // rows[dst] += q * rows[src]
    void row_axpy(int dst, int src, const BigInt& q) {
        if (q == 0) return;
        const auto& a = rows[static_cast<std::size_t>(dst)];
        const auto& b = rows[static_cast<std::size_t>(src)];
        std::vector<Entry> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i]);
                ++i;
            } else if (i == a.size() || b[j].first < a[i].first) {
                BigInt v = q * b[j].second;
                note_insert(dst, b[j].first);
                out.emplace_back(b[j].first, std::move(v));
                ++j;
            } else {
                BigInt v = a[i].second + q * b[j].second;
                if (v == 0)
                    note_erase(a[i].first);
                else
                    out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        rows[static_cast<std::size_t>(dst)] = std::move(out);
    }

    // rows[dst] = p * rows[dst] + q * rows[src]; p must be nonzero.
    void row_scale_axpy(int dst, const BigInt& p, int src, const BigInt& q) {
        const auto& a = rows[static_cast<std::size_t>(dst)];
        const auto& b = rows[static_cast<std::size_t>(src)];
        std::vector<Entry> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.emplace_back(a[i].first, p * a[i].second);
                ++i;
            } else if (i == a.size() || b[j].first < a[i].first) {
                note_insert(dst, b[j].first);
                out.emplace_back(b[j].first, q * b[j].second);
                ++j;
            } else {
                BigInt v = p * a[i].second + q * b[j].second;
                if (v == 0)
                    note_erase(a[i].first);
                else
                    out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        rows[static_cast<std::size_t>(dst)] = std::move(out);
    }

    // Divide a row by the gcd of its entries (rank-only routes may rescale rows).
    void row_reduce_content(int r) {
        auto& row = rows[static_cast<std::size_t>(r)];
        if (row.empty()) return;
        BigInt g = 0;
        for (const auto& e : row) {
            g = boost::multiprecision::gcd(g, e.second);
            if (g == 1) return;
        }
        for (auto& e : row) e.second /= g;
    }

    void set_entry(int r, int c, const BigInt& v) {
        auto& row = rows[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, int col) { return e.first < col; });
        bool present = it != row.end() && it->first == c;
        if (v == 0) {
            if (present) {
                row.erase(it);
                note_erase(c);
            }
        } else if (present) {
            it->second = v;
        } else {
            row.insert(it, Entry(c, v));
            note_insert(r, c);
        }
    }

    void deactivate_row(int r) {
        for (const auto& e : rows[static_cast<std::size_t>(r)]) note_erase(e.first);
        rows[static_cast<std::size_t>(r)].clear();
        rows[static_cast<std::size_t>(r)].shrink_to_fit();
        row_active[static_cast<std::size_t>(r)] = 0;
    }

    void deactivate_col(int c) { col_active[static_cast<std::size_t>(c)] = 0; }

    // Active column with the fewest nonzeros; -1 when the matrix is exhausted.
    int pick_column() const {
        int best = -1;
        int best_nnz = std::numeric_limits<int>::max();
        for (int c = 0; c < ncols; ++c) {
            if (!col_active[static_cast<std::size_t>(c)]) continue;
            int n = col_nnz[static_cast<std::size_t>(c)];
            if (n > 0 && n < best_nnz) {
                best_nnz = n;
                best = c;
                if (n == 1) break;
            }
        }
        return best;
    }

    // Rows with a live entry in column c, deduplicated.
    std::vector<int> column_rows(int c) {
        auto& cand = col_rows[static_cast<std::size_t>(c)];
        std::vector<int> live;
        live.reserve(cand.size());
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (int r : cand) {
            if (!row_active[static_cast<std::size_t>(r)]) continue;
            if (find(r, c)) live.push_back(r);
        }
        cand = live; // drop stale ids
        return live;
    }

    // Row in column c holding the smallest |value|, ties broken by row length.
    int pick_row(int c) {
        int best = -1;
        BigInt best_abs;
        std::size_t best_len = 0;
        for (int r : column_rows(c)) {
            const BigInt* v = find(r, c);
            BigInt a = boost::multiprecision::abs(*v);
            std::size_t len = rows[static_cast<std::size_t>(r)].size();
            if (best < 0 || a < best_abs || (a == best_abs && len < best_len)) {
                best = r;
                best_abs = a;
                best_len = len;
            }
        }
        return best;
    }
};

// After the matrix is diagonalized to arbitrary diagonal entries, pairwise
// gcd/lcm replacement yields the invariant factors.
void normalize_divisibility(std::vector<BigInt>& diag) {
    for (auto& d : diag)
        if (d < 0) d = -d;
    std::size_t k = diag.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (diag[j] % diag[i] != 0) {
                BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
                BigInt l = (diag[i] / g) * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
}

} // namespace

SNFResult smith_normal_form(const SparseIntMatrix& m) {
    Workspace w(m);
    std::vector<BigInt> diag;

    while (true) {
        int c = w.pick_column();
        if (c < 0) break;
        int r = w.pick_row(c);
        if (r < 0) continue; // column was stale only

        // Pivot dance: clear the pivot column with row operations, then the
        // pivot row with column operations.  A nonzero remainder strictly
        // shrinks |pivot| and restarts the dance, so it terminates.
        while (true) {
            BigInt v = *w.find(r, c);
            bool moved = false;
            for (int r2 : w.column_rows(c)) {
                if (r2 == r) continue;
                BigInt a = *w.find(r2, c);
                BigInt q = a / v; // C++ truncation; |a - q*v| < |v|
                if (q != 0) w.row_axpy(r2, r, -q);
                const BigInt* rem = w.find(r2, c);
                if (rem) { // remainder smaller than the pivot
                    r = r2;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            // Column c now holds only the pivot, so a column operation
            // col c2 -= q * col c touches row r alone.
            v = *w.find(r, c);
            const auto row_copy = w.rows[static_cast<std::size_t>(r)];
            for (const auto& [c2, a] : row_copy) {
                if (c2 == c) continue;
                BigInt q = a / v;
                BigInt rem = a - q * v;
                w.set_entry(r, c2, rem);
                if (rem != 0) {
                    c = c2;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            break;
        }

        diag.push_back(boost::multiprecision::abs(*w.find(r, c)));
        w.deactivate_row(r);
        w.deactivate_col(c);
    }

    normalize_divisibility(diag);
    return SNFResult{std::move(diag)};
}

long long integer_rank(const SparseIntMatrix& m) {
    Workspace w(m);
    long long rank = 0;
    while (true) {
        int c = w.pick_column();
        if (c < 0) break;
        int r = w.pick_row(c);
        if (r < 0) continue;
        const BigInt v = *w.find(r, c);
        for (int r2 : w.column_rows(c)) {
            if (r2 == r) continue;
            const BigInt a = *w.find(r2, c);
            BigInt g = boost::multiprecision::gcd(v, a);
            // (v/g) * row2 - (a/g) * row zeroes column c in row2; row
            // rescaling is harmless for rank.
            w.row_scale_axpy(r2, v / g, r, -(a / g));
            w.row_reduce_content(r2);
        }
        w.deactivate_row(r);
        w.deactivate_col(c);
        ++rank;
    }
    return rank;
}

} // namespace matchex
