#include "matchex/morse.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace matchex {

Schedule::Schedule(std::vector<int> labels, int ground_size) : labels_(std::move(labels)) {
    std::vector<char> seen(static_cast<std::size_t>(ground_size), 0);
    for (int x : labels_) {
        if (x < 0 || x >= ground_size)
            throw std::invalid_argument("schedule label " + std::to_string(x) + " out of range");
        if (seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("schedule repeats label " + std::to_string(x));
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

bool MorseMatching::empty_face_paired() const {
    for (const auto& p : pairs)
        if (p.lower.is_empty()) return true;
    return false;
}

void MorseMatching::write(std::ostream& out) const {
    for (const auto& p : pairs) out << p.lower.to_hex() << ' ' << p.upper.to_hex() << '\n';
    out << "# critical\n";
    for (const Face& f : critical) out << f.to_hex() << '\n';
}

namespace {

bool dim_value_less(const Face& a, const Face& b) {
    int da = a.dimension(), db = b.dimension();
    return da != db ? da < db : a < b;
}

} // namespace

std::pair<std::vector<MorsePair>, std::vector<Face>>
element_matching(const std::vector<Face>& S, int x) {
    if (x < 0 || x >= Face::max_bits)
        throw std::invalid_argument("element-matching label out of range");
    FaceSet members(S.begin(), S.end());
    std::vector<Face> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end(), dim_value_less);

    std::vector<MorsePair> pairs;
    FaceSet paired;
    for (const Face& f : sorted) {
        if (f.test(x)) continue;
        Face up = f.with(x);
        if (members.count(up)) {
            pairs.push_back({f, up});
            paired.insert(f);
            paired.insert(up);
        }
    }
    std::vector<Face> residual;
    residual.reserve(sorted.size() - 2 * pairs.size());
    for (const Face& f : sorted)
        if (!paired.count(f)) residual.push_back(f);
    return {std::move(pairs), std::move(residual)};
}

MorseMatching run_schedule(const Complex& K, const Schedule& schedule) {
    for (int x : schedule.labels())
        if (x >= K.ground_size())
            throw std::invalid_argument("schedule label beyond the complex's ground set");

    std::vector<Face> residual = K.all_faces();
    FaceSet live(residual.begin(), residual.end());

    MorseMatching out;
    for (int x : schedule.labels()) {
        std::vector<Face> next;
        next.reserve(residual.size());
        std::vector<MorsePair> step;
        for (const Face& f : residual) {
            if (f.test(x)) continue;
            Face up = f.with(x);
            if (live.count(up)) step.push_back({f, up});
        }
        for (const auto& p : step) {
            live.erase(p.lower);
            live.erase(p.upper);
        }
        for (const Face& f : residual)
            if (live.count(f)) next.push_back(f);
        residual = std::move(next);
        out.pairs.insert(out.pairs.end(), step.begin(), step.end());
    }
    out.critical = std::move(residual);
    std::sort(out.critical.begin(), out.critical.end(), dim_value_less);
    return out;
}

MorseSummary summarize(const MorseMatching& m) {
    MorseSummary s;
    s.empty_face_paired = m.empty_face_paired();
    for (const Face& f : m.critical) ++s.critical_by_dim[f.dimension()];
    if (s.empty_face_paired && s.critical_by_dim.size() == 1) {
        auto [d, count] = *s.critical_by_dim.begin();
        if (d >= 0) {
            s.single_dim = d;
            s.wedge_count = count;
        }
    }
    return s;
}

std::map<int, long long> MorseSummary::cw_cells() const {
    std::map<int, long long> cells;
    for (const auto& [d, c] : critical_by_dim)
        if (d >= 0) cells[d] = c;
    if (empty_face_paired) ++cells[0];
    return cells;
}

long long MorseSummary::cw_euler() const {
    long long e = 0;
    for (const auto& [d, c] : cw_cells()) e += (d % 2 == 0 ? c : -c);
    return e;
}

AcyclicityResult is_acyclic(const Complex& K, const MorseMatching& m) {
    // Validate: pairs are cover relations inside K and no face is shared.
    FaceSet used;
    for (const auto& p : m.pairs) {
        if (!p.upper.contains(p.lower) || p.upper.dimension() != p.lower.dimension() + 1)
            throw std::invalid_argument("matching pair is not a cover relation");
        if (!K.contains(p.lower) || !K.contains(p.upper))
            throw std::invalid_argument("matching pair outside the complex");
        if (!used.insert(p.lower).second || !used.insert(p.upper).second)
            throw std::invalid_argument("face shared between matching pairs");
    }

    // Alternating cycles live in one (d, d+1) layer of the Hasse diagram:
    // nodes are matched pairs, with an arc p -> q when lower(q) is a face of
    // upper(p) other than lower(p).
    std::map<int, std::vector<int>> layers; // lower dimension -> pair indices
    for (std::size_t i = 0; i < m.pairs.size(); ++i)
        layers[m.pairs[i].lower.dimension()].push_back(static_cast<int>(i));

    for (const auto& [d, members] : layers) {
        std::unordered_map<Face, int, FaceHash> by_lower;
        by_lower.reserve(members.size());
        for (int i : members) by_lower[m.pairs[static_cast<std::size_t>(i)].lower] = i;

        std::vector<std::vector<int>> arcs(members.size());
        std::unordered_map<int, int> local; // pair index -> node id
        for (std::size_t n = 0; n < members.size(); ++n) local[members[n]] = static_cast<int>(n);
        for (std::size_t n = 0; n < members.size(); ++n) {
            const MorsePair& p = m.pairs[static_cast<std::size_t>(members[n])];
            for (int pos = p.upper.lowest(); pos >= 0; pos = p.upper.next(pos + 1)) {
                Face sub = p.upper.without(pos);
                if (sub == p.lower) continue;
                auto it = by_lower.find(sub);
                if (it != by_lower.end()) arcs[n].push_back(local[it->second]);
            }
        }

        // Iterative DFS, colors 0/1/2; a back arc closes an alternating cycle.
        std::vector<char> color(members.size(), 0);
        std::vector<int> parent(members.size(), -1);
        for (std::size_t start = 0; start < members.size(); ++start) {
            if (color[start]) continue;
            std::vector<std::pair<int, std::size_t>> stack; // (node, next arc)
            stack.emplace_back(static_cast<int>(start), 0);
            color[start] = 1;
            while (!stack.empty()) {
                auto& [node, next_arc] = stack.back();
                if (next_arc < arcs[static_cast<std::size_t>(node)].size()) {
                    int to = arcs[static_cast<std::size_t>(node)][next_arc++];
                    if (color[static_cast<std::size_t>(to)] == 1) {
                        // Recover the cycle to .. node .. to from the stack.
                        std::vector<int> cycle;
                        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                            cycle.push_back(it->first);
                            if (it->first == to) break;
                        }
                        std::reverse(cycle.begin(), cycle.end());
                        AcyclicityResult res;
                        res.acyclic = false;
                        for (int n : cycle) {
                            const MorsePair& p = m.pairs[static_cast<std::size_t>(members[static_cast<std::size_t>(n)])];
                            res.witness.push_back(p.lower);
                            res.witness.push_back(p.upper);
                        }
                        return res;
                    }
                    if (color[static_cast<std::size_t>(to)] == 0) {
                        color[static_cast<std::size_t>(to)] = 1;
                        stack.emplace_back(to, 0);
                    }
                } else {
                    color[static_cast<std::size_t>(node)] = 2;
                    stack.pop_back();
                }
            }
        }
    }
    return AcyclicityResult{};
}

Schedule kn_schedule(int n) {
    if (n < 3) throw std::invalid_argument("kn schedule needs n >= 3");
    const Graph g = Graph::complete(n);
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int k = 1; k <= n - 1; ++k)
        for (int i = k + 1; i <= n; ++i) labels.push_back(g.edge_index(k, i));
    return Schedule(std::move(labels), g.edge_count());
}

Schedule knn_schedule(int n) {
    if (n < 2) throw std::invalid_argument("knn schedule needs n >= 2");
    const Graph g = Graph::complete_bipartite(n, n);
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>((n - 1) * n));
    for (int k = 1; k <= n - 1; ++k)
        for (int j = 1; j <= n; ++j) labels.push_back(g.edge_index(k, n + j));
    return Schedule(std::move(labels), g.edge_count());
}

std::vector<Face> predicted_critical_cells_kn(int n) {
    if (n < 3) throw std::invalid_argument("predicted kn cells need n >= 3");
    const Graph g = Graph::complete(n);
    std::vector<Face> cells;
    cells.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        Face removed;
        for (int i = 1; i <= k - 1; ++i) removed.set(g.edge_index(i, i + 1));
        for (int j = k + 1; j <= n; ++j) removed.set(g.edge_index(k, j));
        cells.push_back(g.full_edge_set().minus(removed));
    }
    return cells;
}

Face predicted_critical_cell_knn(int n) {
    if (n < 2) throw std::invalid_argument("predicted knn cell needs n >= 2");
    const Graph g = Graph::complete_bipartite(n, n);
    Face cell;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 2; j <= n; ++j) cell.set(g.edge_index(i, n + j));
    return cell;
}

} // namespace matchex
