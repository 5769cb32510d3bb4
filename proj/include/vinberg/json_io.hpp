#pragma once

// JSON forms shared by the CLI and the search output:
//   VVector, HMatrix      -> array of 5 numbers
//   VPrimeVector          -> array of 2 numbers
//   6x6 matrices          -> row-major array of 36 numbers
//   TripleFactors         -> {"v": [5], "L": [5], "u": [2]}
//   TubePoint             -> {"re": [5], "im": [5]}

#include <string>

#include <json.hpp>

#include "vinberg/group.hpp"
#include "vinberg/search.hpp"
#include "vinberg/semigroup.hpp"

namespace vinberg {

using nlohmann::json;

json to_json(const VVector& x);
json to_json(const HMatrix& a);
json to_json(const VPrimeVector& u);
json to_json(const Mat6& m);
json to_json(const TripleFactors& f);
json to_json(const TubePoint& z);
json to_json(const GammaFactors& f);
json to_json(const PolarFactors& p);
json to_json(const ContractionRecord& r);
json summary_json(const SearchResult& r);

// Parsers throw DomainError on malformed input.
VVector vvector_from_json(const json& j);
HMatrix hmatrix_from_json(const json& j);
VPrimeVector vprime_from_json(const json& j);
/// Accepts a flat array of 36 numbers or a nested 6x6 array.
Mat6 mat6_from_json(const json& j);
TripleFactors triple_from_json(const json& j);
TubePoint tube_point_from_json(const json& j);

/// CSV with header seed_index,ratio,violated,g_json,x_json,v_json; JSON
/// columns are double-quoted.
std::string violations_csv(const SearchResult& r);

}  // namespace vinberg
