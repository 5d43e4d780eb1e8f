#pragma once

#include <map>
#include <vector>

#include "spectre/polygon.hpp"

namespace spectre {

// One splice component: a vertical chain of nodes read as a Newton polygon.
struct Component {
    std::vector<int> nodes;       // diagram vertices, p-side end first
    std::vector<Face> faces;      // k counts real arrows plus children's l-
    std::vector<Int> arrows;      // real arrows per node
    std::vector<int> chain_edges; // diagram edge between nodes i and i+1
    std::vector<std::vector<int>> children; // component indices, per node
    int parent = -1;              // component index
    int attach = -1;              // node position in the parent
    int horizontal_edge = -1;     // diagram edge to the parent
    Int ell_plus = 0;             // multiplicity of the cut arrow on the child side
    Int ell_minus = 0;            // q_1 k_1 + ... + q_r k_r
    Face parent_face;             // (p, q, k) of the attaching node
};

// A diagram read as a tree of vertical chains.  comps[0] is the root polygon.
struct SpliceStructure {
    std::vector<Component> comps;

    Polygon root_polygon() const;
    Polygon plus(int w) const;  // (1,1,l+) followed by the component faces
    Polygon minus(int w) const; // (1,1,l+), (PQ,1,l-)
};

// Reads the diagram with the root chain passing through `anchor`
// (the diagram root when anchor < 0).  Throws ValidationError when the
// diagram cannot be read this way from that anchor.
SpliceStructure splice_structure(const Diagram& d, int anchor = -1);

// Drops k = 0 faces and merges neighbours with equal (p, q).
std::vector<Face> merge_faces(std::vector<Face> faces);

class PolygonCombination {
public:
    void add(const Polygon& P, long coef);
    const std::map<Polygon, long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    friend bool operator==(const PolygonCombination&, const PolygonCombination&) = default;

private:
    std::map<Polygon, long> terms_;
};

PolygonCombination decompose(const Diagram& d);
PolygonCombination decompose(const SpliceStructure& s);

PairBag sppa(const PolygonCombination& c);

} // namespace spectre
