#include "doctest.h"
#include "matchex/bounds.hpp"
#include "matchex/verify.hpp"
#include "oracles.hpp"

using matchex::BigInt;
using matchex::Complex;
using matchex::Graph;
using matchex::jonsson_epsilon;
using matchex::jonsson_nu;
using matchex::matching_complex;
using matchex::Rational;
using matchex::rational_ceil;

TEST_CASE("rational ceiling") {
    CHECK(rational_ceil(Rational(7, 2)) == 4);
    CHECK(rational_ceil(Rational(-3, 2)) == -1);
    CHECK(rational_ceil(Rational(6, 3)) == 2);
    CHECK(rational_ceil(Rational(0)) == 0);
}

TEST_CASE("epsilon cases") {
    CHECK(jonsson_epsilon(3, 5) == Rational(1, 7));  // middle window
    CHECK(jonsson_epsilon(2, 3) == Rational(1, 2));  // r = d+1
    CHECK(jonsson_epsilon(2, 8) == Rational(0));     // r = 2d+4
    CHECK_THROWS_AS(jonsson_epsilon(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(jonsson_epsilon(2, 9), std::invalid_argument);
    CHECK_THROWS_AS(jonsson_epsilon(1, 3), std::invalid_argument);
}

TEST_CASE("nu values") {
    auto b53 = jonsson_nu(5, 3);
    CHECK(b53.k == 0);
    CHECK(b53.r == 5);
    CHECK(b53.nu == Rational(5));
    CHECK(b53.shifted_bound == 5);

    // nu_n^{n-2} = C(n-1,2) - 1 exactly.
    for (int n = 4; n <= 30; ++n) {
        auto b = jonsson_nu(n, n - 2);
        CHECK(b.nu == Rational(static_cast<long long>(n - 1) * (n - 2) / 2 - 1));
    }

    // Direct evaluation at (3,2): r = 3 = d+1, so
    // nu = 9*3/12 - (1/2)/2 - 1 = 1; M_2(K_3) is a full simplex, so any
    // non-negative connectivity bound is consistent.
    auto b32 = jonsson_nu(3, 2);
    CHECK(b32.r == 3);
    CHECK(b32.nu == Rational(1));
    CHECK(b32.shifted_bound == 1);

    CHECK_THROWS_AS(jonsson_nu(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(jonsson_nu(2, 2), std::invalid_argument);
}

TEST_CASE("theorem checks at small n") {
    for (int n = 3; n <= 5; ++n) {
        auto rep = matchex::verify_theorem_kn(n);
        CHECK(rep.pass);
        CHECK(rep.theorem == "kn-wedge");
    }
    for (int n = 2; n <= 3; ++n) {
        auto rep = matchex::verify_theorem_knn(n);
        CHECK(rep.pass);
    }
    CHECK_THROWS_AS(matchex::verify_theorem_kn(2), std::invalid_argument);
    CHECK_THROWS_AS(matchex::verify_theorem_kn(7), std::invalid_argument);
    CHECK_THROWS_AS(matchex::verify_theorem_knn(5), std::invalid_argument);
}

TEST_CASE("sharpness checks") {
    for (int n : {4, 5}) {
        auto rep = matchex::verify_sharpness(n);
        CHECK(rep.pass);
        CHECK(rep.params["mode"] == "full");
    }
    auto rep30 = matchex::verify_sharpness(30);
    CHECK(rep30.pass);
    CHECK(rep30.params["mode"] == "formula-only");
    CHECK(rep30.observed["nu"] == "405");

    CHECK(matchex::verify_jonsson_formula().pass);
}

TEST_CASE("domination filtration checks") {
    for (int n = 3; n <= 6; ++n) CHECK(matchex::verify_domination_filtration(n).pass);
    CHECK_THROWS_AS(matchex::verify_domination_filtration(7), std::invalid_argument);
}

TEST_CASE("facet bounds") {
    // K_n route: the minimum facet size matches the bound and the critical
    // cells realize it.
    auto rep4 = matchex::verify_facet_bounds(4);
    CHECK(rep4.pass);
    CHECK(rep4.observed["kn"]["min_facet_edges"] == 3);
    // Minimum facet of M_3(K_{4,4}): the complete K_{3,3} block plus the
    // edge {a_4, b_4} is maximal with 10 = (n-1)^2 + 1 edges, and the
    // counting bound rules out anything smaller.
    CHECK(rep4.observed["knn"]["min_facet_edges"] == 10);
    CHECK(rep4.observed["knn"]["bound_attained"] == false);

    auto rep5 = matchex::verify_facet_bounds(5);
    CHECK(rep5.pass);
    CHECK(rep5.observed["kn"]["min_facet_edges"] == 6);

    // Bipartite route at n = 2, 3: the lower bound holds but is not
    // attained; the true minima are one above it.
    auto rep2 = matchex::verify_facet_bounds(2);
    CHECK(rep2.pass);
    CHECK(rep2.observed["knn"]["min_facet_edges"] == 2);
    CHECK(rep2.observed["knn"]["bound_attained"] == false);

    auto rep3 = matchex::verify_facet_bounds(3);
    CHECK(rep3.pass);
    CHECK(rep3.observed["kn"]["min_facet_edges"] == 1);
    CHECK(rep3.observed["knn"]["min_facet_edges"] == 5); // frozen from the facet oracle

    // Cross-check the observed minima against the brute-force facet oracle:
    // the bipartite minimum sits one edge above the (n-1)^2 lower bound.
    for (int n : {2, 3}) {
        Complex k = matching_complex(Graph::complete_bipartite(n, n), n - 1);
        long long min_edges = -1;
        for (const auto& f : oracles::facets(k)) {
            long long c = f.cardinality();
            if (min_edges < 0 || c < min_edges) min_edges = c;
        }
        CHECK(min_edges == (n == 2 ? 2 : 5));
    }
}

TEST_CASE("join construction report") {
    CHECK(matchex::verify_join_construction().pass);
}

TEST_CASE("cm proxy") {
    // Skeleta of a full simplex pass at every k: links are again simplices
    // or their skeleta.
    Complex full = Complex::full_simplex(4);
    for (int k = 0; k <= full.dim(); ++k) {
        auto rep = matchex::cm_proxy_check(full, k, "simplex");
        CHECK(rep.exploratory);
        CHECK(rep.pass);
    }

    // Points: links are {empty}, vacuously fine.
    Complex pts = matching_complex(Graph::complete(3), 1);
    CHECK(matchex::cm_proxy_check(pts, 0, "M_1(K_3)").pass);

    // Exploratory verdict for M_2(K_4) at its wedge dimension; recorded, not
    // asserted against any closed-form value.
    Complex m2k4 = matching_complex(Graph::complete(4), 2);
    auto rep = matchex::cm_proxy_check(m2k4, 2, "M_2(K_4)");
    CHECK(rep.exploratory);
    CHECK(rep.observed.contains("links_vanish_below_top"));

    CHECK_THROWS_AS(matchex::cm_proxy_check(m2k4, 9, "M_2(K_4)"), std::invalid_argument);
}

TEST_CASE("report emission") {
    CHECK(matchex::reports_to_json({}, false).dump() == "[]");

    std::vector<matchex::VerificationReport> reports = {matchex::verify_jonsson_formula()};
    auto j = matchex::reports_to_json(reports, false);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"theorem", "params", "expected", "observed", "pass",
                                           "exploratory", "millis"});
    CHECK(j[0]["millis"] == 0.0);

    auto j_timed = matchex::reports_to_json(reports, true);
    CHECK(j_timed[0]["millis"].get<double>() >= 0.0);

    auto csv = matchex::reports_to_csv(reports, false);
    CHECK(csv.rfind("theorem,params,pass,exploratory,millis\n", 0) == 0);
    auto text = matchex::reports_to_text(reports, false);
    CHECK(text.find("PASS") != std::string::npos);

    // Round-trip: the JSON parses back to the same structure.
    auto parsed = matchex::Json::parse(j.dump());
    CHECK(parsed == j);

    CHECK(matchex::all_passed(reports));
    matchex::VerificationReport failing;
    failing.pass = false;
    CHECK(!matchex::all_passed({failing}));
    failing.exploratory = true;
    CHECK(matchex::all_passed({failing}));
}

TEST_CASE("small verify-all run is deterministic") {
    auto a = matchex::verify_all(4, 2, false);
    auto b = matchex::verify_all(4, 2, false);
    CHECK(matchex::reports_to_json(a, false) == matchex::reports_to_json(b, false));
    CHECK(matchex::all_passed(a));
}
