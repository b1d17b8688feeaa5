#include "matchex/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace matchex {

Complex Complex::void_complex(int ground_size) {
    Complex k;
    k.ground_ = ground_size;
    k.has_empty_ = false;
    return k;
}

Complex Complex::empty_complex(int ground_size) {
    Complex k;
    k.ground_ = ground_size;
    k.has_empty_ = true;
    return k;
}

Complex Complex::full_simplex(int ground_size) {
    if (ground_size < 0 || ground_size > Face::max_bits)
        throw CapacityError("ground size out of range");
    if (ground_size >= 23) // 2^23 faces is the storage budget
        throw CapacityError("full simplex on " + std::to_string(ground_size) +
                            " vertices exceeds the face budget");
    Complex k = empty_complex(ground_size);
    std::vector<Face> all;
    all.reserve((1ULL << ground_size) - 1);
    for (std::uint64_t mask = 1; mask < (1ULL << ground_size); ++mask)
        all.emplace_back(mask, 0);
    k.insert_sorted(std::move(all));
    return k;
}

Complex Complex::closure(int ground_size, const std::vector<Face>& generators) {
    if (ground_size < 0 || ground_size > Face::max_bits)
        throw CapacityError("ground size out of range");
    Complex k = empty_complex(ground_size);
    FaceSet seen;
    std::vector<Face> stack;
    for (const Face& g : generators) {
        if (g.highest() >= ground_size)
            throw std::invalid_argument("generator uses a position beyond the ground set");
        if (!g.is_empty() && seen.insert(g).second) stack.push_back(g);
    }
    std::vector<Face> out;
    while (!stack.empty()) {
        Face f = stack.back();
        stack.pop_back();
        out.push_back(f);
        k.check_budget(static_cast<long long>(out.size()));
        for (int p = f.lowest(); p >= 0; p = f.next(p + 1)) {
            Face sub = f.without(p);
            if (!sub.is_empty() && seen.insert(sub).second) stack.push_back(sub);
        }
    }
    k.insert_sorted(std::move(out));
    return k;
}

void Complex::insert_sorted(std::vector<Face>&& faces) {
    for (Face& f : faces) {
        int d = f.dimension();
        if (d < 0) continue; // empty face tracked by the flag
        if (static_cast<int>(by_dim_.size()) <= d) by_dim_.resize(static_cast<std::size_t>(d) + 1);
        by_dim_[static_cast<std::size_t>(d)].push_back(f);
    }
    sort_dims();
}

void Complex::sort_dims() {
    for (auto& v : by_dim_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
}

void Complex::check_budget(long long count) const {
    if (count > max_faces)
        throw CapacityError("complex exceeds the face budget of " + std::to_string(max_faces));
}

int Complex::dim() const {
    if (is_void()) return -2;
    return static_cast<int>(by_dim_.size()) - 1;
}

const std::vector<Face>& Complex::faces(int d) const {
    static const std::vector<Face> none;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

long long Complex::face_count() const {
    long long total = has_empty_ ? 1 : 0;
    for (const auto& v : by_dim_) total += static_cast<long long>(v.size());
    return total;
}

std::vector<long long> Complex::f_vector() const {
    std::vector<long long> f;
    f.reserve(by_dim_.size());
    for (const auto& v : by_dim_) f.push_back(static_cast<long long>(v.size()));
    return f;
}

bool Complex::contains(const Face& f) const {
    if (f.is_empty()) return has_empty_;
    return face_position(f) >= 0;
}

long long Complex::face_position(const Face& f) const {
    int d = f.dimension();
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return -1;
    const auto& v = by_dim_[static_cast<std::size_t>(d)];
    auto it = std::lower_bound(v.begin(), v.end(), f);
    if (it == v.end() || !(*it == f)) return -1;
    return it - v.begin();
}

std::vector<Face> Complex::all_faces() const {
    std::vector<Face> out;
    out.reserve(static_cast<std::size_t>(face_count()));
    if (has_empty_) out.push_back(Face());
    for (const auto& v : by_dim_) out.insert(out.end(), v.begin(), v.end());
    return out;
}

Complex Complex::skeleton(int s) const {
    if (s < 0) throw std::invalid_argument("skeleton dimension must be >= 0");
    Complex k;
    k.ground_ = ground_;
    k.has_empty_ = has_empty_;
    int top = std::min(s, dim());
    for (int d = 0; d <= top; ++d) k.by_dim_.push_back(by_dim_[static_cast<std::size_t>(d)]);
    return k;
}

Complex Complex::link(const Face& sigma) const {
    if (!contains(sigma))
        throw std::invalid_argument("link of a face that is not in the complex");
    Complex k;
    k.ground_ = ground_;
    std::vector<Face> out;
    if (sigma.is_empty()) return *this;
    for (const auto& v : by_dim_)
        for (const Face& rho : v)
            if (rho.contains(sigma)) out.push_back(rho.minus(sigma));
    // rho = sigma contributes the empty face
    k.has_empty_ = true;
    out.erase(std::remove_if(out.begin(), out.end(), [](const Face& f) { return f.is_empty(); }),
              out.end());
    k.insert_sorted(std::move(out));
    return k;
}

Complex Complex::join(const Complex& a, const Complex& b) {
    if (a.ground_ + b.ground_ > Face::max_bits)
        throw CapacityError("join exceeds 128 ground positions");
    Complex k;
    k.ground_ = a.ground_ + b.ground_;
    if (a.is_void() || b.is_void()) {
        k.has_empty_ = false;
        return k;
    }
    k.has_empty_ = true;
    const auto af = a.all_faces();
    const auto bf = b.all_faces();
    k.check_budget(static_cast<long long>(af.size()) * static_cast<long long>(bf.size()));
    std::vector<Face> out;
    out.reserve(af.size() * bf.size());
    for (const Face& sa : af) {
        for (const Face& sb : bf) {
            Face f = sa | sb.shifted_up(a.ground_);
            if (!f.is_empty()) out.push_back(f);
        }
    }
    k.insert_sorted(std::move(out));
    return k;
}

Complex Complex::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != ground_)
        throw std::invalid_argument("permutation length must equal the ground size");
    std::vector<char> hit(static_cast<std::size_t>(ground_), 0);
    for (int p : perm) {
        if (p < 0 || p >= ground_ || hit[static_cast<std::size_t>(p)])
            throw std::invalid_argument("not a permutation of ground positions");
        hit[static_cast<std::size_t>(p)] = 1;
    }
    Complex k;
    k.ground_ = ground_;
    k.has_empty_ = has_empty_;
    std::vector<Face> out;
    out.reserve(static_cast<std::size_t>(face_count()));
    for (const auto& v : by_dim_) {
        for (const Face& f : v) {
            Face g;
            for (int p = f.lowest(); p >= 0; p = f.next(p + 1))
                g.set(perm[static_cast<std::size_t>(p)]);
            out.push_back(g);
        }
    }
    k.insert_sorted(std::move(out));
    return k;
}

std::vector<Face> Complex::facets() const {
    std::vector<Face> out;
    if (is_void()) return out;
    if (dim() < 0) {
        out.push_back(Face());
        return out;
    }
    for (int d = 0; d <= dim(); ++d) {
        const auto& here = faces(d);
        const auto& above = faces(d + 1);
        if (above.empty()) {
            out.insert(out.end(), here.begin(), here.end());
            continue;
        }
        FaceSet covered;
        covered.reserve(above.size() * static_cast<std::size_t>(d + 2));
        for (const Face& u : above)
            for (int p = u.lowest(); p >= 0; p = u.next(p + 1)) covered.insert(u.without(p));
        for (const Face& f : here)
            if (!covered.count(f)) out.push_back(f);
    }
    return out;
}

ComplexStats Complex::stats() const {
    ComplexStats s;
    s.f_vector = f_vector();
    s.dim = dim();
    long long sign = 1;
    for (long long fd : s.f_vector) {
        s.euler += sign * fd;
        sign = -sign;
    }
    for (const Face& f : facets()) ++s.facet_dims[f.dimension()];
    s.is_pure = s.facet_dims.size() <= 1;
    return s;
}

void Complex::save(std::ostream& out) const {
    out << "matchex-complex 1\n";
    out << "ground " << ground_ << '\n';
    out << "empty " << (has_empty_ ? 1 : 0) << '\n';
    auto f = f_vector();
    out << "fvec";
    for (long long c : f) out << ' ' << c;
    out << '\n';
    for (int d = 0; d < static_cast<int>(by_dim_.size()); ++d) {
        out << "dim " << d << '\n';
        for (const Face& face : by_dim_[static_cast<std::size_t>(d)]) out << face.to_hex() << '\n';
    }
    out << "end\n";
}

Complex Complex::load(std::istream& in) {
    auto fail = [](const std::string& why) -> Complex {
        throw std::runtime_error("complex load: " + why);
    };
    std::string word;
    int version = 0;
    if (!(in >> word >> version) || word != "matchex-complex" || version != 1)
        return fail("bad header");
    int ground = 0, empty_flag = 0;
    if (!(in >> word >> ground) || word != "ground" || ground < 0 || ground > Face::max_bits)
        return fail("bad ground line");
    if (!(in >> word >> empty_flag) || word != "empty") return fail("bad empty line");

    if (!(in >> word) || word != "fvec") return fail("bad fvec line");
    std::vector<long long> fvec;
    std::string rest;
    std::getline(in, rest);
    std::istringstream fs(rest);
    long long c = 0;
    while (fs >> c) fvec.push_back(c);

    Complex k = empty_flag ? empty_complex(ground) : void_complex(ground);
    k.by_dim_.resize(fvec.size());
    for (int d = 0; d < static_cast<int>(fvec.size()); ++d) {
        int dd = -1;
        if (!(in >> word >> dd) || word != "dim" || dd != d) return fail("bad dim header");
        auto& v = k.by_dim_[static_cast<std::size_t>(d)];
        v.reserve(static_cast<std::size_t>(fvec[static_cast<std::size_t>(d)]));
        for (long long i = 0; i < fvec[static_cast<std::size_t>(d)]; ++i) {
            if (!(in >> word)) return fail("truncated face list");
            Face f = Face::from_hex(word);
            if (f.dimension() != d) return fail("face listed under the wrong dimension");
            if (f.highest() >= ground) return fail("face beyond the ground set");
            if (!v.empty() && !(v.back() < f)) return fail("faces not sorted");
            v.push_back(f);
        }
    }
    if (!(in >> word) || word != "end") return fail("missing end marker");
    if (!k.by_dim_.empty() && k.by_dim_.back().empty()) return fail("empty top dimension");
    if (!k.by_dim_.empty() && !k.has_empty_) return fail("faces present without the empty face");
    return k;
}

bool Complex::downward_closed() const {
    for (const auto& v : by_dim_) {
        for (const Face& f : v) {
            for (int p = f.lowest(); p >= 0; p = f.next(p + 1)) {
                if (!contains(f.without(p))) return false;
            }
        }
    }
    if (!by_dim_.empty() && !has_empty_) return false;
    return true;
}

namespace {

void enumerate_bounded(const Graph& g, const std::vector<int>& bounds, std::vector<Face>& out) {
    const int m = g.edge_count();
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    long long count = 0;
    // DFS adding edges in increasing index; prefix pruning is valid because
    // the degree constraint is hereditary.
    auto rec = [&](auto&& self, const Face& face, int from) -> void {
        for (int e = from; e < m; ++e) {
            auto [u, v] = g.edge(e);
            int ui = u - 1, vi = v - 1;
            if (deg[static_cast<std::size_t>(ui)] + 1 > bounds[static_cast<std::size_t>(ui)]) continue;
            if (deg[static_cast<std::size_t>(vi)] + 1 > bounds[static_cast<std::size_t>(vi)]) continue;
            Face next = face.with(e);
            out.push_back(next);
            if (++count > Complex::max_faces)
                throw CapacityError("bounded-degree complex exceeds the face budget");
            ++deg[static_cast<std::size_t>(ui)];
            ++deg[static_cast<std::size_t>(vi)];
            self(self, next, e + 1);
            --deg[static_cast<std::size_t>(ui)];
            --deg[static_cast<std::size_t>(vi)];
        }
    };
    rec(rec, Face(), 0);
}

} // namespace

Complex bounded_degree_complex(const Graph& g, const std::vector<int>& bounds) {
    if (static_cast<int>(bounds.size()) != g.vertex_count())
        throw std::invalid_argument("need one degree bound per vertex");
    for (int b : bounds)
        if (b < 0) throw std::invalid_argument("degree bounds must be non-negative");
    Complex k = Complex::empty_complex(g.edge_count());
    std::vector<Face> out;
    enumerate_bounded(g, bounds, out);
    k.insert_sorted(std::move(out));
    return k;
}

Complex matching_complex(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("matching complex needs r >= 1");
    return bounded_degree_complex(g, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), r));
}

Complex domination_complex(int n, int gamma) {
    if (n < 1) throw std::invalid_argument("domination complex needs n >= 1");
    if (gamma < 1 || gamma > n) throw std::invalid_argument("need 1 <= gamma <= n");
    const Graph g = Graph::complete(n);
    const int m = g.edge_count();
    if (m > 20)
        throw CapacityError("domination complex filters all 2^" + std::to_string(m) +
                            " subsets; the cap is 2^20 (n <= 6)");
    Complex k = Complex::empty_complex(m);
    std::vector<Face> out;
    for (std::uint64_t mask = 1; mask < (1ULL << m); ++mask) {
        Face H(mask, 0);
        if (g.domination_at_least(H, gamma)) out.push_back(H);
    }
    // dom is antitone in the edge set, so the kept faces are downward closed.
    k.insert_sorted(std::move(out));
    return k;
}

} // namespace matchex
