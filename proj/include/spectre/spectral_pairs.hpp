#pragma once

#include "spectre/bags.hpp"
#include "spectre/diagram.hpp"

namespace spectre {

struct VertexTerms {
    PairBag a, b, c; // c is empty at the root
};

VertexTerms vertex_terms(const Diagram& d, int v);

// d_a for an arrow: gcd(mult, linking of the arrow with the rest of the link).
Int arrow_d(const Diagram& d, int a);
PairBag arrow_term(const Diagram& d, int a);

// The full assembly.  Requires a valid diagram rooted at a rupture vertex;
// on algebraic diagrams a negative final multiplicity is an InconsistencyError.
PairBag spectral_pairs(const Diagram& d);
SpecBag spectrum(const Diagram& d);

// -(0,1) + sum_{0<s<d} [(s/d,0) - (-s/d,2)], d = gcd(m1, m2)
PairBag splice_correction(Int m1, Int m2);

} // namespace spectre
