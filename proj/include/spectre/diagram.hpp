#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectre/integer.hpp"

namespace spectre {

struct Edge {
    int a = -1, b = -1;
    Int wa = 1, wb = 1; // weight at the a-end and at the b-end
};

struct Arrow {
    int at = -1;
    Int w = 1;
    Int mult = 1;
};

// One edge-end or arrow stub seen from a vertex.
struct Incidence {
    enum Kind { EdgeEnd, ArrowStub };
    Kind kind = EdgeEnd;
    int index = -1;  // edge or arrow index
    int target = -1; // neighbour vertex, -1 for arrows
    Int weight = 1;  // weight at this vertex
};

// Rooted Eisenbud-Neumann splice diagram.  Built incrementally, then
// treated as immutable.
class Diagram {
public:
    int add_vertex(std::string name = {});
    int add_edge(int a, int b, Int wa, Int wb);
    int add_arrow(int at, Int w, Int mult);
    void set_root(int v) { root_ = v; }

    int root() const { return root_; }
    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_.at(static_cast<size_t>(v)); }
    int find(const std::string& name) const; // -1 when absent
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Incidence>& incidences(int v) const { return inc_.at(static_cast<size_t>(v)); }

    int valence(int v) const { return static_cast<int>(incidences(v).size()); }
    bool is_leaf(int v) const;
    Int weight_product(int v) const;

    // Position of edge e (or arrow a) in the incidence list of v.
    int edge_slot(int v, int e) const;
    int arrow_slot(int a) const;

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<Incidence>> inc_;
    int root_ = -1;
};

struct Violation {
    std::string code; // not-a-tree, bad-weight, zero-determinant, ...
    std::string detail;
};

struct Validation {
    std::vector<Violation> violations;
    bool algebraic = false; // every node-to-node determinant is positive
    bool ok() const { return violations.empty(); }
};

Validation validate(const Diagram& d);
// Throws ValidationError listing the violations.
void require_valid(const Diagram& d);

// Product over the path from v to the attachment of arrow a of the weights
// not lying on the path.
Int linking_factor(const Diagram& d, int v, int a);

Int multiplicity(const Diagram& d, int v);

// 1 - chi of the Milnor fibre, chi = sum over vertices of m_v (2 - valence).
Int milnor_number(const Diagram& d);

// Multiplicity carried by incidence `slot` of v: what an arrow replacing
// that branch must have so that m_v is unchanged.
Int branch_multiplicity(const Diagram& d, int v, int slot);

struct IncidenceData {
    Incidence inc;
    Int alpha = 1, m = 0, beta = 0, s = 0;
};

struct LocalData {
    int vertex = -1;
    Int m_v = 0;
    std::vector<IncidenceData> items; // same order as d.incidences(v)
    std::optional<Int> d_v;          // absent at the root
    Int r_v = 0;
};

LocalData local_data(const Diagram& d, int v);

// Slot of v's incidence pointing towards the root, -1 at the root.
int parent_slot(const Diagram& d, int v);

Int edge_determinant(const Diagram& d, int e);
// True when neither end of e is a leaf.
bool is_node_edge(const Diagram& d, int e);

// Vertices with at least three incidences, root first.
std::vector<int> rupture_vertices(const Diagram& d);

Diagram splice(const Diagram& d1, int a1, const Diagram& d2, int a2);

// Inverse of splice: cut edge e, replacing each half by an arrow.
struct CutResult {
    Diagram near, far; // near holds the root of the input
    int near_arrow = -1, far_arrow = -1;
    Int near_mult = 0, far_mult = 0;
};
CutResult cut_edge(const Diagram& d, int e);

Diagram normalize_h1(const Diagram& d);

// Copy of d with some vertices, edges and arrows dropped.  Dropped
// vertices must not be endpoints of kept edges or arrows.
Diagram filtered(const Diagram& d, const std::vector<bool>& keep_vertex, const std::vector<bool>& keep_edge,
                 const std::vector<bool>& keep_arrow);

} // namespace spectre
