#pragma once

#include "tropsa/abundancy.hpp"
#include "tropsa/classify.hpp"
#include "tropsa/curve.hpp"
#include "tropsa/smoothing.hpp"
#include "tropsa/transforms.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace tropsa::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Curve document:
//   { "schema_version": 1, "ambient_dim": r,
//     "vertices": [{"id": "A", "position": ["0", "1/2"]}, ...],
//     "edges": [{"id": "e0", "tail": "A", "head": "B", "direction": [1, 0], "length": "3/2"}, ...],
//     "legs": [{"id": "l0", "vertex": "A", "direction": [-1, 0]}, ...],
//     "base_vertex": "A", "subcurve": false, "metadata": {...} }
//
// Rationals are strings "p/q" or integers; directions are integer arrays.
// Positions are optional; the base vertex position fixes the translation and
// any other position given must agree with the edge displacements.
// Errors name the JSON pointer of the offending value.
TropicalCurve parse(std::string_view text);
TropicalCurve from_json(const Json& doc);
Json to_json(const TropicalCurve& c);
std::string serialize(const TropicalCurve& c);

// {"matrix": [["1", "0"], ["0", "1"]], "offset": ["0", "0"]}; offset optional.
AffineMap parse_affine(std::string_view text);
Json to_json(const AffineMap& m);

Json to_json(const ValidationReport& v, const TropicalCurve& c);
Json to_json(const AbundancyReport& r);
Json to_json(const PlanarWitness& w);
Json to_json(const IrreducibilityResult& r);
Json to_json(const IndecomposabilityResult& r);
Json to_json(const SuperabundanceClass& s);
Json to_json(const SegmentDecomposition& s, const TropicalCurve& core);
Json to_json(const Genus2Classification& g);
Json to_json(const VerdictReport& v);
Json to_json(const DilationRecord& d, const TropicalCurve& source);

} // namespace tropsa::io
