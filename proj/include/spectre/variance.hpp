#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectre/decomposition.hpp"

namespace spectre {

struct EdgeTerm {
    std::string label;    // "i" for polygon edges, "w<c>:<t>" for components
    int edge = -1;        // diagram edge, -1 when there is none
    Rat E;                // coefficient; the defect is -sum E * delta
    Int delta = 0;
    std::optional<Int> F; // polygon edges only
    std::optional<Rat> C;
};

struct DefectReport {
    Rat defect;        // -sum E delta
    Rat direct_defect; // 6 S - mu alpha_max from the spectrum
    std::vector<EdgeTerm> edge_terms;
    Rat S;
    Int mu = 0;
    Rat alpha_max, alpha_min;
    Rat variance, bound;
    std::string verdict; // "strict" or "equality"
    bool consistent = false;
};

// moment 2 over moment 0.  Throws on an empty bag.
Rat variance(const SpecBag& sp);

// Edge data of a face list that may contain k = 0 faces; the i-th entry is
// edge i (between faces i and i+1).  E is absent when its denominator is 0.
struct RawEdge {
    Int F = 0;
    std::optional<Rat> C, E;
    Int delta = 0;
};
std::vector<RawEdge> edge_data(const std::vector<Face>& faces, int i0);

DefectReport nd_defect(const Polygon& P);

// Coefficients of Delta_0 .. Delta_{r-1} for component w (w >= 1).
std::vector<EdgeTerm> component_defect(const SpliceStructure& s, int w, const Rat& alpha0);

struct ComponentIdentities {
    Int mu_plus = 0, mu_minus = 0;
    Rat milnor_gap_rhs; // sum_t n_t (n_t - 1) / (q_t q_{t+1}) Delta_t
    Rat alpha_plus, alpha_minus;
    Rat alpha_gap_rhs; // C_0^+ (l+ - l-)
};
ComponentIdentities component_identities(const SpliceStructure& s, int w);

// Reads the diagram from a vertex carrying the maximal virtual value and
// sums the root polygon terms and every component contribution.
DefectReport global_defect(const Diagram& d);

// Variance, bound and verdict.  A violation of V <= bound, or a global
// defect that disagrees with the spectrum, raises InconsistencyError.
DefectReport hertling_verdict(const Diagram& d);

} // namespace spectre
