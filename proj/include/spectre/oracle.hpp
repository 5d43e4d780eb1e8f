#pragma once

#include <cstdint>

#include "spectre/polygon.hpp"

namespace spectre {

// {i/p + j/q - 1 : 0 < i < p, 0 < j < q}
SpecBag brieskorn_spectrum(Int p, Int q);

// Single node with leaves of weight p and q and one arrow.
Diagram brieskorn_diagram(Int p, Int q);

// 6 S - mu max, read straight off spectrum(d).
Rat naive_defect(const Diagram& d);

Polygon random_polygon(std::uint64_t seed, int max_faces, Int max_entry);

struct DiagramBounds {
    int max_faces = 2;     // faces per component
    Int max_entry = 4;     // bound on p, q inside a component
    int max_children = 2;  // child components per node
    Int max_mult = 2000;   // rejection bound on vertex multiplicities
};

// Root polygon with child components hung from its nodes,
// up to `depth` levels below the root.  Children satisfy p_1 > P Q q_1, so
// every edge determinant is positive.
Diagram random_diagram(std::uint64_t seed, int depth, const DiagramBounds& b = {});

// Two polygon diagrams, each with one extra arrow of weight coprime to its
// node, whose multiplicities are the linking numbers with the other side:
// the pieces of a consistent splice.  The joining edge never has
// determinant zero.
struct SplicePair {
    Diagram d1, d2;
    int a1 = -1, a2 = -1;
};
SplicePair random_splice(std::uint64_t seed, int max_faces = 3, Int max_entry = 5);

} // namespace spectre
