#include "spectre/oracle.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "spectre/spectral_pairs.hpp"

namespace spectre {

SpecBag brieskorn_spectrum(Int p, Int q)
{
    if (p < 2 || q < 2 || gcd(p, q) != 1)
        throw ValidationError("brieskorn_spectrum needs coprime p, q >= 2");
    SpecBag out;
    for (Int i = 1; i < p; ++i)
        for (Int j = 1; j < q; ++j)
            out.add(Rat(i, p) + Rat(j, q) - Rat(1));
    return out;
}

Diagram brieskorn_diagram(Int p, Int q)
{
    Diagram d;
    int v = d.add_vertex("node");
    int a = d.add_vertex("lp");
    int b = d.add_vertex("lq");
    d.add_edge(v, a, p, 1);
    d.add_edge(v, b, q, 1);
    d.add_arrow(v, 1, 1);
    d.set_root(v);
    return d;
}

Rat naive_defect(const Diagram& d)
{
    SpecBag sp = spectrum(d);
    if (sp.empty())
        return Rat(0);
    return Rat(6) * moment(sp, 2) - moment(sp, 0) * max_value(sp);
}

namespace {

using Rng = std::mt19937_64;

Int uniform(Rng& g, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(g); }

// Distinct primitive (p, q) sorted by decreasing q/p.  With P > 0 every face
// has p > P q.
std::vector<Face> random_faces(Rng& g, int r, Int max_entry, Int P)
{
    for (;;) {
        std::vector<Face> f;
        for (int i = 0; i < r; ++i) {
            Int q = uniform(g, 1, max_entry);
            Int p = P > 0 ? uniform(g, P * q + 1, P * q + max_entry) : uniform(g, 1, max_entry);
            if (gcd(p, q) != 1)
                continue;
            if (std::none_of(f.begin(), f.end(), [&](const Face& x) { return x.p == p && x.q == q; }))
                f.push_back({p, q, 1});
        }
        if (f.empty())
            continue;
        std::sort(f.begin(), f.end(), [](const Face& a, const Face& b) { return a.q * b.p > b.q * a.p; });
        return f;
    }
}

struct Comp {
    std::vector<Face> faces; // k unused here
    std::vector<Int> arrows;
    std::vector<std::vector<std::unique_ptr<Comp>>> children;
};

std::unique_ptr<Comp> random_comp(Rng& g, int depth, Int PQ, const DiagramBounds& b)
{
    auto c = std::make_unique<Comp>();
    c->faces = random_faces(g, static_cast<int>(uniform(g, 1, b.max_faces)), b.max_entry, PQ);
    c->children.resize(c->faces.size());
    for (size_t j = 0; j < c->faces.size(); ++j) {
        c->arrows.push_back(uniform(g, 0, 2));
        if (depth > 0) {
            Int n = uniform(g, 0, 2 * b.max_children) / 2;
            for (Int i = 0; i < n; ++i)
                c->children[j].push_back(random_comp(g, depth - 1, c->faces[j].p * c->faces[j].q, b));
        }
        if (c->arrows[j] == 0 && c->children[j].empty())
            c->arrows[j] = 1;
    }
    return c;
}

void emit(Diagram& d, const Comp& c, int parent_node, int& counter)
{
    std::vector<int> nodes;
    for (size_t j = 0; j < c.faces.size(); ++j)
        nodes.push_back(d.add_vertex("n" + std::to_string(++counter)));
    if (parent_node < 0)
        d.add_edge(nodes.front(), d.add_vertex("l" + std::to_string(++counter)), c.faces.front().p, 1);
    else
        d.add_edge(parent_node, nodes.front(), 1, c.faces.front().p);
    for (size_t j = 0; j + 1 < c.faces.size(); ++j)
        d.add_edge(nodes[j], nodes[j + 1], c.faces[j].q, c.faces[j + 1].p);
    d.add_edge(nodes.back(), d.add_vertex("l" + std::to_string(++counter)), c.faces.back().q, 1);
    for (size_t j = 0; j < c.faces.size(); ++j) {
        for (Int a = 0; a < c.arrows[j]; ++a)
            d.add_arrow(nodes[j], 1, 1);
        for (const auto& ch : c.children[j])
            emit(d, *ch, nodes[j], counter);
    }
    if (parent_node < 0)
        d.set_root(nodes.front());
}

} // namespace

Polygon random_polygon(std::uint64_t seed, int max_faces, Int max_entry)
{
    if (max_faces < 1 || max_entry < 1)
        throw std::invalid_argument("random_polygon: bounds must be >= 1");
    Rng g(seed);
    std::vector<Face> f = random_faces(g, static_cast<int>(uniform(g, 1, max_faces)), max_entry, 0);
    for (Face& x : f)
        x.k = uniform(g, 1, max_entry);
    return Polygon(std::move(f));
}

Diagram random_diagram(std::uint64_t seed, int depth, const DiagramBounds& b)
{
    if (b.max_faces < 1 || b.max_entry < 1 || b.max_mult < 1)
        throw std::invalid_argument("random_diagram: bounds must be >= 1");
    Rng g(seed);
    for (;;) {
        std::unique_ptr<Comp> root = random_comp(g, depth, 0, b);
        Diagram d;
        int counter = 0;
        emit(d, *root, -1, counter);
        // keep the diagram minimal: a node must stay a node without its
        // weight-1 leaves
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (d.valence(v) < 3)
                continue;
            int real = 0;
            for (const Incidence& i : d.incidences(v))
                if (!(i.kind == Incidence::EdgeEnd && i.weight == 1 && d.is_leaf(i.target)))
                    ++real;
            if (real < 3)
                d.add_arrow(v, 1, 1);
        }
        bool small = true;
        try {
            if (milnor_number(d) < 1)
                continue;
            for (int v : rupture_vertices(d))
                if (multiplicity(d, v) > b.max_mult) {
                    small = false;
                    break;
                }
        } catch (const std::overflow_error&) {
            small = false;
        }
        if (small)
            return d;
    }
}

namespace {

Diagram prefixed(const Diagram& d, const std::string& pre)
{
    Diagram out;
    for (int v = 0; v < d.vertex_count(); ++v)
        out.add_vertex(pre + d.name(v));
    for (const Edge& e : d.edges())
        out.add_edge(e.a, e.b, e.wa, e.wb);
    for (const Arrow& a : d.arrows())
        out.add_arrow(a.at, a.w, a.mult);
    out.set_root(d.root());
    return out;
}

// linking number of the arrow's component with the rest of the link
Int arrow_linking(const Diagram& d, int a)
{
    const Arrow& ar = d.arrows()[static_cast<size_t>(a)];
    Int others = 1;
    const auto& inc = d.incidences(ar.at);
    for (size_t j = 0; j < inc.size(); ++j)
        if (static_cast<int>(j) != d.arrow_slot(a))
            others = mul(others, inc[j].weight);
    return (multiplicity(d, ar.at) - mul(ar.mult, others)) / ar.w;
}

} // namespace

SplicePair random_splice(std::uint64_t seed, int max_faces, Int max_entry)
{
    Rng g(seed);
    for (;;) {
        Polygon P1 = random_polygon(g(), max_faces, max_entry);
        Polygon P2 = random_polygon(g(), max_faces, max_entry);
        int i = static_cast<int>(uniform(g, 1, P1.r())), j = static_cast<int>(uniform(g, 1, P2.r()));
        Int pq1 = mul(P1.face(i).p, P1.face(i).q), pq2 = mul(P2.face(j).p, P2.face(j).q);
        Int w1, w2;
        do {
            w1 = uniform(g, 1, 40);
            w2 = uniform(g, 1, 40);
        } while (gcd(w1, pq1) != 1 || gcd(w2, pq2) != 1);
        if (mul(w1, w2) == mul(pq1, pq2))
            continue;
        SplicePair s{prefixed(to_diagram(P1), "A"), prefixed(to_diagram(P2), "B"), -1, -1};
        s.a1 = s.d1.add_arrow(s.d1.find("An" + std::to_string(i)), w1, 1);
        s.a2 = s.d2.add_arrow(s.d2.find("Bn" + std::to_string(j)), w2, 1);
        Int m1 = arrow_linking(s.d2, s.a2), m2 = arrow_linking(s.d1, s.a1);
        // rebuild with the linking multiplicities
        auto reset = [](const Diagram& d, int a, Int m) {
            Diagram out;
            for (int v = 0; v < d.vertex_count(); ++v)
                out.add_vertex(d.name(v));
            for (const Edge& e : d.edges())
                out.add_edge(e.a, e.b, e.wa, e.wb);
            for (size_t k = 0; k < d.arrows().size(); ++k) {
                const Arrow& ar = d.arrows()[k];
                out.add_arrow(ar.at, ar.w, static_cast<int>(k) == a ? m : ar.mult);
            }
            out.set_root(d.root());
            return out;
        };
        s.d1 = reset(s.d1, s.a1, m1);
        s.d2 = reset(s.d2, s.a2, m2);
        // a heavy arrow changes the determinants of the node's edges
        if (!validate(s.d1).ok() || !validate(s.d2).ok())
            continue;
        return s;
    }
}

} // namespace spectre
