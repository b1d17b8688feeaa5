#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "matchex/bounds.hpp"
#include "matchex/complex.hpp"
#include "matchex/homology.hpp"
#include "matchex/morse.hpp"

namespace matchex {

using Json = nlohmann::ordered_json;

// One executable check: parameters, the expected values, what was computed,
// and whether they agree exactly.  Exploratory entries report evidence for
// open questions and never gate an exit code.
struct VerificationReport {
    std::string theorem; // content-based check id, e.g. "kn-wedge"
    Json params = Json::object();
    Json expected = Json::object();
    Json observed = Json::object();
    bool pass = false;
    bool exploratory = false;
    double millis = 0.0;
};

// Desk-scale caps: complexes over K_n are built up to n = 6 (15 edge bits)
// and over K_{n,n} up to n = 4 (16 edge bits); formula-only checks are
// unlimited.
inline constexpr int kn_verify_cap = 6;
inline constexpr int knn_verify_cap = 4;

// M_{n-2}(K_n) is a wedge of n-1 spheres of dimension C(n-1,2)-1: checks the
// schedule route (critical cells match the closed forms) and the homology
// route (matching Betti numbers, no torsion).
VerificationReport verify_theorem_kn(int n, int threads = 0);

// M_{n-1}(K_{n,n}) is a sphere of dimension (n-1)^2-1: single predicted
// critical cell and the matching homology profile.
VerificationReport verify_theorem_knn(int n, int threads = 0);

// nu_n^{n-2} = C(n-1,2)-1 and homology of M_{n-2}(K_n) vanishes strictly
// below that dimension and is nonzero at it (the homology-level necessary
// condition for the bound being sharp).  For n above the build cap only the
// formula half runs.  A precomputed profile for M_{n-2}(K_n) may be passed
// to avoid recomputation.
VerificationReport verify_sharpness(int n, const HomologyProfile* precomputed = nullptr,
                                    int threads = 0);

// Exact rational identities: nu_n^{n-2} = C(n-1,2)-1 for n = 4..30 and
// nu_5^3 = 5.
VerificationReport verify_jonsson_formula();

// Reduced homology of D_{6,3} equals Z^115 in dimension 4 and Z^24 in
// dimension 5, zero elsewhere, torsion-free; plus the small companion facts
// (D_{5,4} is 10 points, D_{4,2} has the homology of M_2(K_4)).
VerificationReport verify_domination_table(int threads = 0);

// The filtration facts at a fixed n: D_{n,1} is the full simplex,
// D_{n,n-1} is C(n,2) isolated points, D_{n,n} is {empty}, consecutive
// complexes nest, and D_{n,2} equals M_{n-2}(K_n) as a face set.
VerificationReport verify_domination_filtration(int n);

// Facet lower bounds: every facet of M_{n-2}(K_n) has at least C(n-1,2)
// edges (attained), every facet of M_{n-1}(K_{n,n}) at least (n-1)^2 edges;
// skeleton purity at those dimensions; the counting identity behind the
// bipartite bound on sampled facets.  The observed minima are reported
// either way.
VerificationReport verify_facet_bounds(int n);

// M_r(K_{m,n}) for m > r >= n equals the n-fold join of the (r-1)-skeleton
// of the (m-1)-simplex after relabeling, for the four standard tuples.
VerificationReport verify_join_construction();

// Homology-level proxy for "every link in the k-skeleton is
// (dim link - 1)-connected": checks reduced homology of every link
// vanishes below its top dimension, plus skeleton purity.  Evidence only --
// connectivity itself is not computable from homology.
VerificationReport cm_proxy_check(const Complex& K, int k, const std::string& label,
                                  int threads = 0);

// The full battery in a fixed deterministic order.
std::vector<VerificationReport> verify_all(int kn_max = kn_verify_cap,
                                           int knn_max = knn_verify_cap,
                                           bool exploratory = true, int threads = 0);

// True when every non-exploratory report passed.
bool all_passed(const std::vector<VerificationReport>& reports);

Json report_to_json(const VerificationReport& r, bool with_timings = false);
Json reports_to_json(const std::vector<VerificationReport>& rs, bool with_timings = false);
std::string reports_to_csv(const std::vector<VerificationReport>& rs, bool with_timings = false);
std::string reports_to_text(const std::vector<VerificationReport>& rs, bool with_timings = true);

} // namespace matchex
