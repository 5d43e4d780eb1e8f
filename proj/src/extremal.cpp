#include "spectre/extremal.hpp"

#include <queue>

#include "spectre/decomposition.hpp"

namespace spectre {

namespace {

std::vector<Int> non_unit_weights(const Diagram& d, int v)
{
    std::vector<Int> w;
    for (const Incidence& i : d.incidences(v))
        if (i.weight > 1)
            w.push_back(i.weight);
    if (w.size() > 2)
        throw ValidationError("more than two non-unit weights at " + d.name(v));
    return w;
}

std::vector<int> depths(const Diagram& d)
{
    std::vector<int> depth(static_cast<size_t>(d.vertex_count()), -1);
    std::queue<int> q;
    depth[static_cast<size_t>(d.root())] = 0;
    q.push(d.root());
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const Incidence& i : d.incidences(v))
            if (i.kind == Incidence::EdgeEnd && depth[static_cast<size_t>(i.target)] < 0) {
                depth[static_cast<size_t>(i.target)] = depth[static_cast<size_t>(v)] + 1;
                q.push(i.target);
            }
    }
    return depth;
}

} // namespace

Rat virtual_value(const Diagram& d, int v)
{
    if (v < 0 || v >= d.vertex_count() || d.valence(v) < 3)
        throw ValidationError("virtual_value: not a rupture vertex");
    std::vector<Int> w = non_unit_weights(d, v);
    Int p = w.size() > 0 ? w[0] : 1, q = w.size() > 1 ? w[1] : 1;
    return Rat(1) - Rat(p + q, multiplicity(d, v));
}

int walk_direction(const Diagram& d, int e)
{
    const Edge& ed = d.edges().at(static_cast<size_t>(e));
    if (ed.wa == 1 && d.valence(ed.a) >= 3 && non_unit_weights(d, ed.a).size() == 2)
        return ed.a;
    if (ed.wb == 1 && d.valence(ed.b) >= 3 && non_unit_weights(d, ed.b).size() == 2)
        return ed.b;
    // arrow left at a when the b side is cut away, and vice versa
    Int toward_b = branch_multiplicity(d, ed.a, d.edge_slot(ed.a, e));
    Int toward_a = branch_multiplicity(d, ed.b, d.edge_slot(ed.b, e));
    if (toward_b != toward_a)
        return toward_b > toward_a ? ed.b : ed.a;
    std::vector<int> depth = depths(d);
    return depth[static_cast<size_t>(ed.b)] > depth[static_cast<size_t>(ed.a)] ? ed.b : ed.a;
}

int i0_of_polygon(const Polygon& P)
{
    for (int i = 1; i <= P.r(); ++i) {
        Point a = P.X(i - 1), b = P.X(i);
        Int D = P.A(i - 1, i);
        Rat l0(b.n - b.m, D), l1(a.m - a.n, D);
        if (l0.sign() >= 0 && l0 < Rat(1) && l1.sign() >= 0 && l1 < Rat(1))
            return i;
    }
    // (1,1) is a vertex of the polygon: alpha_mu = 0
    for (int i = 1; i <= P.r(); ++i)
        if (P.X(i) == Point{1, 1})
            return i;
    throw ValidationError("no face parallelogram contains (1,1)");
}

Rat alpha_of_polygon(const Polygon& P) { return Rat(1) - P.phi(i0_of_polygon(P), 1, 1); }

MaxSpectral max_spectral(const Diagram& d0)
{
    Diagram d = normalize_h1(d0);
    require_valid(d);
    int start = d.root();
    try {
        SpliceStructure s = splice_structure(d);
        const Component& root = s.comps.front();
        start = root.nodes[static_cast<size_t>(i0_of_polygon(s.root_polygon()) - 1)];
    } catch (const ValidationError&) {
        // not in normal form from the root: walk from the root itself
    }
    MaxSpectral out;
    std::vector<bool> seen(static_cast<size_t>(d.vertex_count()), false);
    int v = start;
    Rat best = virtual_value(d, v);
    out.path.push_back(v);
    seen[static_cast<size_t>(v)] = true;
    for (;;) {
        int next = -1;
        Rat next_value;
        for (const Incidence& i : d.incidences(v)) {
            if (i.kind != Incidence::EdgeEnd || d.valence(i.target) < 3 || seen[static_cast<size_t>(i.target)])
                continue;
            if (walk_direction(d, i.index) != i.target)
                continue;
            Rat val = virtual_value(d, i.target);
            if (val < best)
                continue;
            if (next < 0 || next_value < val) {
                next = i.target;
                next_value = val;
            }
        }
        if (next < 0)
            break;
        v = next;
        best = next_value;
        seen[static_cast<size_t>(v)] = true;
        out.path.push_back(v);
    }
    out.alpha = best;
    out.witness = v;
    out.name = d.name(v);
    return out;
}

} // namespace spectre
