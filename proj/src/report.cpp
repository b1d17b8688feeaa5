#include "matchex/report.hpp"

#include <limits>
#include <sstream>

namespace matchex {

Json json_bigint(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Json homology_to_json(const HomologyProfile& p) {
    Json out = Json::array();
    for (int i = 0; i < static_cast<int>(p.betti.size()); ++i) {
        Json row;
        row["dim"] = i;
        row["betti"] = p.betti_at(i);
        Json t = Json::array();
        for (const BigInt& v : p.torsion_at(i)) t.push_back(json_bigint(v));
        row["torsion"] = t;
        out.push_back(row);
    }
    return out;
}

std::string homology_to_csv(const HomologyProfile& p) {
    std::ostringstream os;
    os << "dim,betti,torsion\n";
    for (int i : p.nonzero_dims()) {
        os << i << ',' << p.betti_at(i) << ',';
        const auto& t = p.torsion_at(i);
        for (std::size_t j = 0; j < t.size(); ++j) os << (j ? " " : "") << t[j];
        os << '\n';
    }
    return os.str();
}

std::string homology_to_text(const HomologyProfile& p) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < static_cast<int>(p.betti.size()); ++i) {
        if (p.betti_at(i) == 0 && p.torsion_at(i).empty()) continue;
        any = true;
        os << "H~_" << i << " = ";
        bool first = true;
        if (p.betti_at(i) > 0) {
            os << "Z";
            if (p.betti_at(i) > 1) os << "^" << p.betti_at(i);
            first = false;
        }
        for (const BigInt& v : p.torsion_at(i)) {
            os << (first ? "" : " + ") << "Z/" << v;
            first = false;
        }
        os << '\n';
    }
    if (!any) os << "trivial reduced homology\n";
    return os.str();
}

Json stats_to_json(const ComplexStats& s) {
    Json out;
    out["dim"] = s.dim;
    out["f_vector"] = s.f_vector;
    out["euler"] = s.euler;
    Json fd = Json::object();
    for (const auto& [d, c] : s.facet_dims) fd[std::to_string(d)] = c;
    out["facet_dims"] = fd;
    out["is_pure"] = s.is_pure;
    return out;
}

std::string stats_to_csv(const ComplexStats& s) {
    std::ostringstream os;
    os << "dim,f,facets\n";
    for (int d = 0; d < static_cast<int>(s.f_vector.size()); ++d) {
        auto it = s.facet_dims.find(d);
        os << d << ',' << s.f_vector[static_cast<std::size_t>(d)] << ','
           << (it == s.facet_dims.end() ? 0LL : it->second) << '\n';
    }
    return os.str();
}

std::string stats_to_text(const ComplexStats& s) {
    std::ostringstream os;
    os << "dim " << s.dim << ", euler " << s.euler << (s.is_pure ? ", pure" : ", not pure")
       << "\nf-vector:";
    for (long long f : s.f_vector) os << ' ' << f;
    os << "\nfacets:";
    for (const auto& [d, c] : s.facet_dims) os << ' ' << c << "x(dim " << d << ')';
    os << '\n';
    return os.str();
}

Json morse_summary_to_json(const MorseSummary& s, long long pair_count, bool acyclic) {
    Json out;
    out["pairs"] = pair_count;
    Json crit = Json::object();
    for (const auto& [d, c] : s.critical_by_dim) crit[std::to_string(d)] = c;
    out["critical_by_dim"] = crit;
    out["empty_face_paired"] = s.empty_face_paired;
    out["contractible"] = s.contractible();
    if (s.single_dim)
        out["single_dim"] = *s.single_dim;
    else
        out["single_dim"] = nullptr;
    if (s.wedge_count)
        out["wedge_count"] = *s.wedge_count;
    else
        out["wedge_count"] = nullptr;
    out["acyclic"] = acyclic;
    return out;
}

std::string morse_summary_to_text(const MorseSummary& s, long long pair_count, bool acyclic) {
    std::ostringstream os;
    os << pair_count << " pairs, " << (acyclic ? "acyclic" : "NOT ACYCLIC") << '\n';
    os << "critical cells:";
    if (s.critical_by_dim.empty()) os << " none";
    for (const auto& [d, c] : s.critical_by_dim) os << ' ' << c << "x(dim " << d << ')';
    os << '\n';
    if (s.contractible())
        os << "collapsed model: a point\n";
    else if (s.single_dim)
        os << "collapsed model: wedge of " << *s.wedge_count << " sphere(s) of dimension "
           << *s.single_dim << '\n';
    return os.str();
}

Json bound_to_json(const ConnectivityBound& b) {
    Json out;
    out["n"] = b.n;
    out["d"] = b.d;
    out["k"] = b.k;
    out["r"] = b.r;
    out["epsilon"] = b.epsilon.str();
    out["nu"] = b.nu.str();
    out["ceil_nu"] = json_bigint(b.shifted_bound);
    out["connected_through"] = json_bigint(b.shifted_bound - 1);
    return out;
}

std::string bound_to_text(const ConnectivityBound& b) {
    std::ostringstream os;
    os << "n=" << b.n << " d=" << b.d << " -> n=(d+4)k+r with k=" << b.k << " r=" << b.r << '\n'
       << "epsilon = " << b.epsilon << ", nu = " << b.nu << ", ceil(nu) = " << b.shifted_bound
       << '\n'
       << "M_" << b.d << "(K_" << b.n << ") is (" << (b.shifted_bound - 1) << ")-connected\n";
    return os.str();
}

} // namespace matchex
