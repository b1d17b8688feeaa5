#pragma once

#include <string>

#include "json.hpp"
#include "matchex/bounds.hpp"
#include "matchex/complex.hpp"
#include "matchex/homology.hpp"
#include "matchex/morse.hpp"

namespace matchex {

using Json = nlohmann::ordered_json;

// Renders a BigInt as a JSON number when it fits in 64 bits, else a string.
Json json_bigint(const BigInt& v);

// Array of {"dim": i, "betti": b, "torsion": [...]} objects, one per dimension.
Json homology_to_json(const HomologyProfile& p);
// One row per dimension with a nonzero group: dim,betti,torsion.
std::string homology_to_csv(const HomologyProfile& p);
std::string homology_to_text(const HomologyProfile& p);

Json stats_to_json(const ComplexStats& s);
std::string stats_to_csv(const ComplexStats& s);
std::string stats_to_text(const ComplexStats& s);

Json morse_summary_to_json(const MorseSummary& s, long long pair_count, bool acyclic);
std::string morse_summary_to_text(const MorseSummary& s, long long pair_count, bool acyclic);

Json bound_to_json(const ConnectivityBound& b);
std::string bound_to_text(const ConnectivityBound& b);

} // namespace matchex
