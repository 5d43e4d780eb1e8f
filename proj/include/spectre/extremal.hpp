#pragma once

#include <vector>

#include "spectre/polygon.hpp"

namespace spectre {

// 1 - (p + q)/m_v with p, q the non-unit weights at v (1 when absent).
Rat virtual_value(const Diagram& d, int v);

// Endpoint of e in whose direction the virtual value does not decrease.
// Horizontal edges (weight 1 at an end with two non-unit weights) point to
// that end; otherwise the end on the side of the larger cut multiplicity,
// the root-distal end on a tie.
int walk_direction(const Diagram& d, int e);

struct MaxSpectral {
    Rat alpha;
    int witness = -1;     // vertex of the diagram the walk ran on
    std::string name;     // its name
    std::vector<int> path; // visited vertices, start first
};

// Walk of the extremal search on normalize_h1(d).  witness and path refer to
// the normalized diagram; names are preserved by normalization.
MaxSpectral max_spectral(const Diagram& d);

// Face whose half-open parallelogram 0 <= l0, l1 < 1 over X_{i-1}, X_i
// contains (1, 1).
int i0_of_polygon(const Polygon& P);
// 1 - phi_{i0}(1, 1)
Rat alpha_of_polygon(const Polygon& P);

} // namespace spectre
