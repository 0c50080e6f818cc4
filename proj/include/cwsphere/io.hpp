#pragma once

#include <string>

#include <json.hpp>

#include "cwsphere/complex.hpp"
#include "cwsphere/enriched.hpp"
#include "cwsphere/geometry.hpp"
#include "cwsphere/poset.hpp"
#include "cwsphere/qsym.hpp"
#include "cwsphere/sphere.hpp"

namespace cwsphere {

using Json = nlohmann::ordered_json;

/// Geometry documents:
///   {"n": 3, "kind": "points1d", "points": ["0", "1/2", "1"]}
///   {"n": 4, "kind": "points2d", "points": [["0","0"], ["1","0"], ...]}
///   {"n": 3, "kind": "poset", "relations": [[1, 2]], "direction": "lower"}
///   {"n": 2, "kind": "family", "sets": [[], [1], [1, 2]]}
/// with an optional "labels" array. Unknown keys are rejected. Throws ParseError
/// (with line and column for malformed JSON).
ConvexGeometry parse_geometry(const std::string& text);
Json geometry_to_json(const ConvexGeometry& g);

/// {"elements": ["a", "b"], "covers": [["a", "b"]]}; ranks are derived.
GradedPoset parse_poset(const std::string& text);
Json poset_to_json(const GradedPoset& p);
/// Rank-layered Hasse diagram.
std::string poset_to_dot(const GradedPoset& p, const std::string& name = "P");

/// Upper-ideal geometry on the elements of p (element i becomes i + 1), labels kept.
ConvexGeometry upper_ideal_geometry(const GradedPoset& p);

/// True when the document has "kind" (a geometry) rather than "elements" (a poset).
bool is_geometry_document(const std::string& text);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

Json complex_to_json(const SimplicialComplex& c);
/// OFF file of +-Delta with crosspolytope coordinates: (A, eps) sits at the mean
/// of eps(a) e_a over a in ext(A). Requires n <= 3.
std::string complex_to_off(const SimplicialComplex& pm_delta, const QPoset& q);

Json q_poset_to_json(const QPoset& q);
Json cell_to_json(const QPoset& q, const Cell& c);

Json qsym_to_json(const FlagQSym& f);
FlagQSym qsym_from_json(const Json& j, int degree);
Json polynomial_to_json(const RationalPolynomial& p);
Json int_vector_to_json(const std::vector<std::int64_t>& v);
Json subset_to_json(Subset s);

}  // namespace cwsphere
