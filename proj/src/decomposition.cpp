#include "spectre/decomposition.hpp"

#include <algorithm>

#include "spectre/spectral_pairs.hpp"

namespace spectre {

namespace {

struct ChainNode {
    int v;
    int left = -1, right = -1; // incidence slots; -1 is an implicit weight-1 end
};

class Reader {
public:
    explicit Reader(const Diagram& d) : d_(d) {}

    SpliceStructure read(int anchor)
    {
        if (anchor < 0 || anchor >= d_.vertex_count() || d_.valence(anchor) < 3)
            throw ValidationError("anchor must be a rupture vertex");
        std::vector<ChainNode> chain = root_chain(anchor);
        SpliceStructure s;
        build(s, chain, -1, -1, -1);
        finish(s, 0);
        return s;
    }

private:
    const Diagram& d_;

    Int weight(int v, int slot) const { return slot < 0 ? 1 : d_.incidences(v)[static_cast<size_t>(slot)].weight; }

    std::vector<int> non_unit(int v) const
    {
        std::vector<int> out;
        const auto& inc = d_.incidences(v);
        for (size_t j = 0; j < inc.size(); ++j)
            if (inc[j].weight > 1) {
                if (inc[j].kind == Incidence::ArrowStub)
                    throw ValidationError("arrow of weight > 1 at " + d_.name(v) + ": not a plane curve diagram");
                out.push_back(static_cast<int>(j));
            }
        if (out.size() > 2)
            throw ValidationError("more than two non-unit weights at " + d_.name(v));
        return out;
    }

    bool leads_to_leaf(int v, int slot) const
    {
        const Incidence& i = d_.incidences(v)[static_cast<size_t>(slot)];
        return i.kind == Incidence::EdgeEnd && d_.is_leaf(i.target);
    }

    // Outgoing chain side of v when the chain arrives through `in`.
    int next_side(int v, int in, int taken = -1) const
    {
        std::vector<int> nu = non_unit(v);
        if (in >= 0 && weight(v, in) == 1 && nu.size() == 2)
            throw ValidationError("chain cannot pass " + d_.name(v) + " through a weight-1 edge");
        nu.erase(std::remove_if(nu.begin(), nu.end(), [&](int s) { return s == in || s == taken; }), nu.end());
        if (nu.size() > 1)
            throw ValidationError("ambiguous chain direction at " + d_.name(v));
        if (nu.size() == 1)
            return nu.front();
        return free_side(v, in, taken);
    }

    // A side without decoration: a weight-1 leaf if there is one, otherwise
    // continue through the weight-1 branch of largest multiplicity, otherwise
    // an implicit end.
    int free_side(int v, int in, int taken) const
    {
        const auto& inc = d_.incidences(v);
        int best = -1;
        Int best_mult = -1;
        for (size_t j = 0; j < inc.size(); ++j) {
            int s = static_cast<int>(j);
            if (s == in || s == taken || inc[j].weight != 1 || inc[j].kind != Incidence::EdgeEnd)
                continue;
            if (d_.is_leaf(inc[j].target))
                return s;
        }
        for (size_t j = 0; j < inc.size(); ++j) {
            int s = static_cast<int>(j);
            if (s == in || s == taken || inc[j].weight != 1 || inc[j].kind != Incidence::EdgeEnd)
                continue;
            Int m = branch_multiplicity(d_, v, s);
            if (m > best_mult) {
                best_mult = m;
                best = s;
            }
        }
        return best;
    }

    // Nodes met leaving v through `slot`, each oriented as (entry, exit).
    std::vector<ChainNode> extend(int v, int slot) const
    {
        std::vector<ChainNode> out;
        while (slot >= 0 && !leads_to_leaf(v, slot)) {
            const Incidence& i = d_.incidences(v)[static_cast<size_t>(slot)];
            int u = i.target;
            if (d_.valence(u) < 3)
                throw ValidationError("vertex " + d_.name(u) + " of valence 2: diagram not minimal");
            int in = d_.edge_slot(u, i.index);
            int next = next_side(u, in);
            out.push_back({u, in, next});
            v = u;
            slot = next;
        }
        return out;
    }

    std::vector<ChainNode> root_chain(int a) const
    {
        std::vector<int> nu = non_unit(a);
        int s1, s2;
        if (nu.size() == 2) {
            s1 = nu[0];
            s2 = nu[1];
        } else if (nu.size() == 1) {
            s1 = nu[0];
            s2 = free_side(a, -1, s1);
        } else {
            s1 = free_side(a, -1, -1);
            s2 = free_side(a, -1, s1);
        }
        // lower incidence position is the p-side; implicit ends go last
        auto key = [](int s) { return s < 0 ? 1 << 30 : s; };
        if (key(s2) < key(s1))
            std::swap(s1, s2);
        std::vector<ChainNode> left = extend(a, s1), right = extend(a, s2);
        std::vector<ChainNode> chain;
        for (auto it = left.rbegin(); it != left.rend(); ++it)
            chain.push_back({it->v, it->right, it->left});
        chain.push_back({a, s1, s2});
        chain.insert(chain.end(), right.begin(), right.end());
        return chain;
    }

    int build(SpliceStructure& s, const std::vector<ChainNode>& chain, int parent, int attach, int hedge)
    {
        int id = static_cast<int>(s.comps.size());
        s.comps.emplace_back();
        {
            Component& c = s.comps.back();
            c.parent = parent;
            c.attach = attach;
            c.horizontal_edge = hedge;
            c.children.resize(chain.size());
            for (const ChainNode& x : chain) {
                c.nodes.push_back(x.v);
                c.faces.push_back({weight(x.v, x.left), weight(x.v, x.right), 0});
                c.arrows.push_back(0);
            }
            for (size_t i = 0; i + 1 < chain.size(); ++i)
                c.chain_edges.push_back(d_.incidences(chain[i].v)[static_cast<size_t>(chain[i].right)].index);
        }
        for (size_t i = 0; i < chain.size(); ++i) {
            int v = chain[i].v;
            const auto& inc = d_.incidences(v);
            for (size_t j = 0; j < inc.size(); ++j) {
                int slot = static_cast<int>(j);
                if (slot == chain[i].left || slot == chain[i].right)
                    continue;
                if (inc[j].weight != 1)
                    throw ValidationError("stray non-unit weight at " + d_.name(v));
                if (inc[j].kind == Incidence::ArrowStub) {
                    if (d_.arrows()[static_cast<size_t>(inc[j].index)].mult != 1)
                        throw ValidationError("arrow of multiplicity > 1 at " + d_.name(v) +
                                              ": not the diagram of a reduced curve");
                    s.comps[static_cast<size_t>(id)].arrows[i] += 1;
                    continue;
                }
                if (d_.is_leaf(inc[j].target))
                    continue; // weight-1 leaf carries nothing
                int u = inc[j].target;
                int in = d_.edge_slot(u, inc[j].index);
                std::vector<ChainNode> child{{u, in, next_side(u, in)}};
                std::vector<ChainNode> rest = extend(u, child.front().right);
                child.insert(child.end(), rest.begin(), rest.end());
                int cid = build(s, child, id, static_cast<int>(i), inc[j].index);
                s.comps[static_cast<size_t>(id)].children[i].push_back(cid);
            }
        }
        return id;
    }

    // Fill k, l-, l+ bottom-up.
    void finish(SpliceStructure& s, int id)
    {
        for (size_t i = 0; i < s.comps[static_cast<size_t>(id)].nodes.size(); ++i)
            for (int ch : s.comps[static_cast<size_t>(id)].children[i])
                finish(s, ch);
        Component& c = s.comps[static_cast<size_t>(id)];
        c.ell_minus = 0;
        for (size_t i = 0; i < c.nodes.size(); ++i) {
            Int k = c.arrows[i];
            for (int ch : c.children[i])
                k = add(k, s.comps[static_cast<size_t>(ch)].ell_minus);
            if (k == 0)
                throw ValidationError("node " + d_.name(c.nodes[i]) + " carries no branches");
            c.faces[i].k = k;
            c.ell_minus = add(c.ell_minus, mul(c.faces[i].q, k));
        }
        for (size_t i = 0; i < c.nodes.size(); ++i)
            for (int ch : c.children[i])
                s.comps[static_cast<size_t>(ch)].parent_face = c.faces[i];
        if (c.parent < 0)
            return;
        const Component& par = s.comps[static_cast<size_t>(c.parent)];
        int pv = par.nodes[static_cast<size_t>(c.attach)];
        int u = c.nodes.front();
        Int seen = branch_multiplicity(d_, pv, d_.edge_slot(pv, c.horizontal_edge));
        if (seen != c.ell_minus)
            throw InconsistencyError("component multiplicity mismatch below " + d_.name(pv));
        c.ell_plus = branch_multiplicity(d_, u, d_.edge_slot(u, c.horizontal_edge));
    }
};

} // namespace

SpliceStructure splice_structure(const Diagram& d, int anchor)
{
    require_valid(d);
    return Reader(d).read(anchor < 0 ? d.root() : anchor);
}

std::vector<Face> merge_faces(std::vector<Face> faces)
{
    std::vector<Face> out;
    for (const Face& f : faces) {
        if (f.k == 0)
            continue;
        if (!out.empty() && out.back().p == f.p && out.back().q == f.q)
            out.back().k += f.k;
        else
            out.push_back(f);
    }
    return out;
}

Polygon SpliceStructure::root_polygon() const { return Polygon(comps.at(0).faces); }

Polygon SpliceStructure::plus(int w) const
{
    const Component& c = comps.at(static_cast<size_t>(w));
    std::vector<Face> f{{1, 1, c.ell_plus}};
    f.insert(f.end(), c.faces.begin(), c.faces.end());
    return Polygon(merge_faces(f));
}

Polygon SpliceStructure::minus(int w) const
{
    const Component& c = comps.at(static_cast<size_t>(w));
    Int PQ = mul(c.parent_face.p, c.parent_face.q);
    return Polygon(merge_faces({{1, 1, c.ell_plus}, {PQ, 1, c.ell_minus}}));
}

void PolygonCombination::add(const Polygon& P, long coef)
{
    if (coef == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(P, coef);
    if (!fresh) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

PolygonCombination decompose(const SpliceStructure& s)
{
    PolygonCombination out;
    out.add(s.root_polygon(), 1);
    for (size_t w = 1; w < s.comps.size(); ++w) {
        out.add(s.plus(static_cast<int>(w)), 1);
        out.add(s.minus(static_cast<int>(w)), -1);
    }
    return out;
}

PolygonCombination decompose(const Diagram& d)
{
    Diagram n = normalize_h1(d);
    return decompose(splice_structure(n));
}

PairBag sppa(const PolygonCombination& c)
{
    PairBag out;
    for (const auto& [P, coef] : c.terms())
        out += spectral_pairs(to_diagram(P)).scaled(coef);
    return out;
}

} // namespace spectre
