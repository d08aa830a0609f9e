#pragma once

#include <string>

#include "json.hpp"

#include "bnloci/brill_noether.hpp"
#include "bnloci/curve.hpp"
#include "bnloci/multidegree.hpp"

namespace bnloci {

/// Curve file schema:
///   {"vertices":[{"label":"C1","genus":2},...],
///    "edges":[["C1","C2"],...]}
/// A repeated edge pair raises the node multiplicity.  The order of the
/// vertices array is the canonical vertex order.  Throws
/// std::invalid_argument on schema or invariant violations (duplicate
/// labels, unknown labels in edges, self-loops, disconnected graph).
NodalCurve curve_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const NodalCurve& curve);

/// Reads and parses a curve file.  Throws std::invalid_argument with a
/// diagnostic on I/O or parse failure.
NodalCurve load_curve(const std::string& path);

/// Decomposition report:
///   {"curve":..., "multidegree":[...], "semistable":bool, "stable":bool,
///    "components":[{"Z":[labels],"e_Z":[...],"global_e":[...]|null,
///                   "twisted_abel":bool,"dimension":int}]}
/// "components" is null when d is not semistable (the locus is the whole
/// Jacobian).
nlohmann::json decomposition_to_json(const NodalCurve& curve, const Multidegree& d,
                                     const Decomposition& decomposition);

/// Comma-separated integer list, e.g. "0,2,0,2".  Throws
/// std::invalid_argument on malformed input or, if expected_size >= 0, on a
/// length mismatch.
std::vector<long long> parse_int_list(const std::string& text, int expected_size = -1);

std::string format_int_list(const std::vector<long long>& values);

/// Subcurve rendered with vertex labels, e.g. "{C1,C3}".
std::string format_subcurve(const NodalCurve& curve, const Subcurve& z);

}  // namespace bnloci
