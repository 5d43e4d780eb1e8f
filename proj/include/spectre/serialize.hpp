#pragma once

#include <json.hpp>
#include <string>

#include "spectre/decomposition.hpp"
#include "spectre/variance.hpp"

namespace spectre {

using json = nlohmann::json; // keys come out sorted

// decimal < 0 leaves out the display-only "decimal" fields.
json to_json(const Rat& x);
json to_json(const PairBag& b, int decimal = -1);
json to_json(const SpecBag& b, int decimal = -1);
json to_json(const Diagram& d);
json to_json(const Polygon& P);
json to_json(const PolygonCombination& c);
json to_json(const DefectReport& r, int decimal = -1);

Diagram diagram_from_json(const json& j);
// {"faces": [[p,q,k],...]}, {"vertices": [[m,n],...]} or a bare face array.
Polygon polygon_from_json(const json& j);
BrickSpec brick_from_json(const json& j);

// Any of the three input shapes, as a diagram.
Diagram diagram_from_any(const json& j);

// "a(2,3)[1,1]-b(5,1)[2]": nodes of a chain, top to bottom, each with its
// two non-unit weights and the multiplicities of its weight-1 arrows.  The
// name may be left out.  The first node gets a p-leaf, the last a q-leaf.
Diagram parse_chain(const std::string& text);

} // namespace spectre
