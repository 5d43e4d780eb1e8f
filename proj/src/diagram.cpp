#include "spectre/diagram.hpp"

#include <algorithm>
#include <functional>

namespace spectre {

int Diagram::add_vertex(std::string name)
{
    int id = vertex_count();
    if (name.empty())
        name = "v" + std::to_string(id);
    names_.push_back(std::move(name));
    inc_.emplace_back();
    return id;
}

int Diagram::add_edge(int a, int b, Int wa, Int wb)
{
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
        throw ValidationError("edge endpoint out of range");
    int id = static_cast<int>(edges_.size());
    edges_.push_back({a, b, wa, wb});
    inc_[static_cast<size_t>(a)].push_back({Incidence::EdgeEnd, id, b, wa});
    if (a != b)
        inc_[static_cast<size_t>(b)].push_back({Incidence::EdgeEnd, id, a, wb});
    return id;
}

int Diagram::add_arrow(int at, Int w, Int mult)
{
    if (at < 0 || at >= vertex_count())
        throw ValidationError("arrow attached to unknown vertex");
    int id = static_cast<int>(arrows_.size());
    arrows_.push_back({at, w, mult});
    inc_[static_cast<size_t>(at)].push_back({Incidence::ArrowStub, id, -1, w});
    return id;
}

int Diagram::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool Diagram::is_leaf(int v) const
{
    const auto& inc = incidences(v);
    return inc.size() == 1 && inc[0].kind == Incidence::EdgeEnd;
}

Int Diagram::weight_product(int v) const
{
    Int p = 1;
    for (const auto& i : incidences(v))
        p = mul(p, i.weight);
    return p;
}

int Diagram::edge_slot(int v, int e) const
{
    const auto& inc = incidences(v);
    for (size_t j = 0; j < inc.size(); ++j)
        if (inc[j].kind == Incidence::EdgeEnd && inc[j].index == e)
            return static_cast<int>(j);
    return -1;
}

int Diagram::arrow_slot(int a) const
{
    const auto& inc = incidences(arrows_.at(static_cast<size_t>(a)).at);
    for (size_t j = 0; j < inc.size(); ++j)
        if (inc[j].kind == Incidence::ArrowStub && inc[j].index == a)
            return static_cast<int>(j);
    return -1;
}

namespace {

// product of weights at v, skipping up to two slots
Int product_except(const Diagram& d, int v, int skip1, int skip2 = -1)
{
    Int p = 1;
    const auto& inc = d.incidences(v);
    for (size_t j = 0; j < inc.size(); ++j)
        if (static_cast<int>(j) != skip1 && static_cast<int>(j) != skip2)
            p = mul(p, inc[j].weight);
    return p;
}

bool is_tree(const Diagram& d)
{
    int n = d.vertex_count();
    if (n == 0 || static_cast<int>(d.edges().size()) != n - 1)
        return false;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& i : d.incidences(x))
            if (i.kind == Incidence::EdgeEnd && !seen[static_cast<size_t>(i.target)]) {
                seen[static_cast<size_t>(i.target)] = true;
                ++count;
                stack.push_back(i.target);
            }
    }
    return count == n;
}

} // namespace

bool is_node_edge(const Diagram& d, int e)
{
    const Edge& ed = d.edges().at(static_cast<size_t>(e));
    return !d.is_leaf(ed.a) && !d.is_leaf(ed.b);
}

Int edge_determinant(const Diagram& d, int e)
{
    const Edge& ed = d.edges().at(static_cast<size_t>(e));
    Int others_a = product_except(d, ed.a, d.edge_slot(ed.a, e));
    Int others_b = product_except(d, ed.b, d.edge_slot(ed.b, e));
    return checked(static_cast<__int128>(ed.wa) * ed.wb - static_cast<__int128>(others_a) * others_b);
}

Validation validate(const Diagram& d)
{
    Validation out;
    auto flag = [&](std::string code, std::string detail) { out.violations.push_back({std::move(code), std::move(detail)}); };

    if (d.vertex_count() == 0) {
        flag("empty", "diagram has no vertices");
        return out;
    }
    if (d.root() < 0 || d.root() >= d.vertex_count())
        flag("bad-root", "root is not a vertex of the diagram");
    for (size_t e = 0; e < d.edges().size(); ++e) {
        const Edge& ed = d.edges()[e];
        if (ed.a == ed.b)
            flag("not-a-tree", "edge " + std::to_string(e) + " is a loop at " + d.name(ed.a));
        if (ed.wa < 1 || ed.wb < 1)
            flag("bad-weight", "edge " + std::to_string(e) + " has a weight below 1");
    }
    if (!is_tree(d))
        flag("not-a-tree", "vertices and edges do not form a tree");
    if (d.arrows().empty())
        flag("no-arrows", "the multilink has no components");
    for (size_t a = 0; a < d.arrows().size(); ++a) {
        const Arrow& ar = d.arrows()[a];
        if (ar.w < 1)
            flag("bad-weight", "arrow " + std::to_string(a) + " has weight below 1");
        if (ar.mult < 1)
            flag("bad-multiplicity", "arrow " + std::to_string(a) + " has multiplicity below 1");
    }
    if (!out.ok())
        return out;

    for (int v = 0; v < d.vertex_count(); ++v) {
        const auto& inc = d.incidences(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (gcd(inc[i].weight, inc[j].weight) != 1)
                    flag("non-coprime", "weights " + std::to_string(inc[i].weight) + " and " +
                                            std::to_string(inc[j].weight) + " at " + d.name(v));
    }
    out.algebraic = true;
    for (size_t e = 0; e < d.edges().size(); ++e) {
        if (!is_node_edge(d, static_cast<int>(e)))
            continue;
        Int det = edge_determinant(d, static_cast<int>(e));
        const Edge& ed = d.edges()[e];
        if (det == 0)
            flag("zero-determinant", "edge " + d.name(ed.a) + "-" + d.name(ed.b));
        if (det <= 0)
            out.algebraic = false;
    }
    if (!out.ok())
        out.algebraic = false;
    return out;
}

void require_valid(const Diagram& d)
{
    Validation v = validate(d);
    if (v.ok())
        return;
    std::string msg = "invalid diagram:";
    for (const auto& x : v.violations)
        msg += " [" + x.code + ": " + x.detail + "]";
    throw ValidationError(msg);
}

namespace {

void check_vertex(const Diagram& d, int v)
{
    if (v < 0 || v >= d.vertex_count())
        throw ValidationError("unknown vertex id " + std::to_string(v));
}

// Sum over arrows reached by leaving v through `slot` of
// mult * (product of off-path weights at the vertices beyond v).
Int reach(const Diagram& d, int v, int slot)
{
    const Incidence& first = d.incidences(v).at(static_cast<size_t>(slot));
    if (first.kind == Incidence::ArrowStub)
        return d.arrows()[static_cast<size_t>(first.index)].mult;
    struct Frame {
        int x, in;
        Int factor;
    };
    Int total = 0;
    std::vector<Frame> stack{{first.target, d.edge_slot(first.target, first.index), 1}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const auto& inc = d.incidences(f.x);
        for (size_t k = 0; k < inc.size(); ++k) {
            if (static_cast<int>(k) == f.in)
                continue;
            Int factor = mul(f.factor, product_except(d, f.x, f.in, static_cast<int>(k)));
            if (inc[k].kind == Incidence::ArrowStub)
                total = add(total, mul(factor, d.arrows()[static_cast<size_t>(inc[k].index)].mult));
            else
                stack.push_back({inc[k].target, d.edge_slot(inc[k].target, inc[k].index), factor});
        }
    }
    return total;
}

} // namespace

Int branch_multiplicity(const Diagram& d, int v, int slot)
{
    check_vertex(d, v);
    if (slot < 0 || slot >= d.valence(v))
        throw ValidationError("incidence slot out of range");
    return reach(d, v, slot);
}

Int multiplicity(const Diagram& d, int v)
{
    check_vertex(d, v);
    Int m = 0;
    for (int j = 0; j < d.valence(v); ++j)
        m = add(m, mul(reach(d, v, j), product_except(d, v, j)));
    return m;
}

Int milnor_number(const Diagram& d)
{
    __int128 chi = 0;
    for (int v = 0; v < d.vertex_count(); ++v)
        chi += static_cast<__int128>(multiplicity(d, v)) * (2 - d.valence(v));
    return checked(1 - chi);
}

Int linking_factor(const Diagram& d, int v, int a)
{
    check_vertex(d, v);
    if (a < 0 || a >= static_cast<int>(d.arrows().size()))
        throw ValidationError("unknown arrow id " + std::to_string(a));
    int target = d.arrows()[static_cast<size_t>(a)].at;
    // path from v to target as (vertex, slot towards next) pairs
    std::vector<int> prev(static_cast<size_t>(d.vertex_count()), -2), via(static_cast<size_t>(d.vertex_count()), -1);
    prev[static_cast<size_t>(v)] = -1;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& i : d.incidences(x))
            if (i.kind == Incidence::EdgeEnd && prev[static_cast<size_t>(i.target)] == -2) {
                prev[static_cast<size_t>(i.target)] = x;
                via[static_cast<size_t>(i.target)] = i.index;
                stack.push_back(i.target);
            }
    }
    if (prev[static_cast<size_t>(target)] == -2)
        throw ValidationError("arrow not reachable from vertex");
    Int factor = product_except(d, target, d.arrow_slot(a), via[static_cast<size_t>(target)] < 0
                                                                 ? -1
                                                                 : d.edge_slot(target, via[static_cast<size_t>(target)]));
    int x = target;
    while (prev[static_cast<size_t>(x)] != -1) {
        int e = via[static_cast<size_t>(x)];
        int p = prev[static_cast<size_t>(x)];
        int out_slot = d.edge_slot(p, e);
        int in_slot = via[static_cast<size_t>(p)] < 0 ? -1 : d.edge_slot(p, via[static_cast<size_t>(p)]);
        factor = mul(factor, product_except(d, p, out_slot, in_slot));
        x = p;
    }
    return factor;
}

int parent_slot(const Diagram& d, int v)
{
    check_vertex(d, v);
    if (v == d.root())
        return -1;
    // walk from the root, remember the edge used to enter each vertex
    std::vector<int> via(static_cast<size_t>(d.vertex_count()), -2);
    via[static_cast<size_t>(d.root())] = -1;
    std::vector<int> stack{d.root()};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& i : d.incidences(x))
            if (i.kind == Incidence::EdgeEnd && via[static_cast<size_t>(i.target)] == -2) {
                via[static_cast<size_t>(i.target)] = i.index;
                stack.push_back(i.target);
            }
    }
    if (via[static_cast<size_t>(v)] < 0)
        throw ValidationError("vertex not connected to the root");
    return d.edge_slot(v, via[static_cast<size_t>(v)]);
}

LocalData local_data(const Diagram& d, int v)
{
    check_vertex(d, v);
    LocalData out;
    out.vertex = v;
    const auto& inc = d.incidences(v);
    std::vector<Int> branch(inc.size());
    Int mv = 0;
    for (size_t j = 0; j < inc.size(); ++j) {
        branch[j] = reach(d, v, static_cast<int>(j));
        mv = add(mv, mul(branch[j], product_except(d, v, static_cast<int>(j))));
    }
    out.m_v = mv;
    Int r = mv;
    for (size_t j = 0; j < inc.size(); ++j) {
        IncidenceData x;
        x.inc = inc[j];
        x.alpha = inc[j].weight;
        x.m = branch[j];
        Int others = product_except(d, v, static_cast<int>(j));
        x.beta = x.alpha == 1 ? 0 : modinv(mod(others, x.alpha), x.alpha);
        __int128 num = static_cast<__int128>(x.m) - static_cast<__int128>(x.beta) * mv;
        if (num % x.alpha != 0)
            throw InconsistencyError("branch multiplicity fails the congruence at " + d.name(v));
        x.s = checked(num / x.alpha);
        r = gcd(r, x.s);
        out.items.push_back(x);
    }
    out.r_v = r;
    int ps = parent_slot(d, v);
    if (ps >= 0)
        out.d_v = gcd(mv, out.items[static_cast<size_t>(ps)].s);
    return out;
}

std::vector<int> rupture_vertices(const Diagram& d)
{
    std::vector<int> out;
    int root = d.root();
    if (root >= 0 && root < d.vertex_count() && d.valence(root) >= 3)
        out.push_back(root);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (v != root && d.valence(v) >= 3)
            out.push_back(v);
    return out;
}

Diagram filtered(const Diagram& d, const std::vector<bool>& keep_vertex, const std::vector<bool>& keep_edge,
                 const std::vector<bool>& keep_arrow)
{
    Diagram out;
    std::vector<int> id(static_cast<size_t>(d.vertex_count()), -1);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (keep_vertex[static_cast<size_t>(v)])
            id[static_cast<size_t>(v)] = out.add_vertex(d.name(v));
    for (size_t e = 0; e < d.edges().size(); ++e)
        if (keep_edge[e]) {
            const Edge& ed = d.edges()[e];
            out.add_edge(id[static_cast<size_t>(ed.a)], id[static_cast<size_t>(ed.b)], ed.wa, ed.wb);
        }
    for (size_t a = 0; a < d.arrows().size(); ++a)
        if (keep_arrow[a]) {
            const Arrow& ar = d.arrows()[a];
            out.add_arrow(id[static_cast<size_t>(ar.at)], ar.w, ar.mult);
        }
    if (d.root() >= 0)
        out.set_root(id[static_cast<size_t>(d.root())]);
    return out;
}

Diagram splice(const Diagram& d1, int a1, const Diagram& d2, int a2)
{
    if (a1 < 0 || a1 >= static_cast<int>(d1.arrows().size()) || a2 < 0 || a2 >= static_cast<int>(d2.arrows().size()))
        throw ValidationError("splice: unknown arrow");
    if (d1.arrows().size() + d2.arrows().size() <= 2)
        throw ValidationError("splice: the result would have no arrows");
    Diagram out;
    std::vector<int> id1, id2;
    for (int v = 0; v < d1.vertex_count(); ++v)
        id1.push_back(out.add_vertex(d1.name(v)));
    for (int v = 0; v < d2.vertex_count(); ++v) {
        std::string n = d2.name(v);
        while (out.find(n) >= 0)
            n += "'";
        id2.push_back(out.add_vertex(n));
    }
    for (const Edge& e : d1.edges())
        out.add_edge(id1[static_cast<size_t>(e.a)], id1[static_cast<size_t>(e.b)], e.wa, e.wb);
    for (const Edge& e : d2.edges())
        out.add_edge(id2[static_cast<size_t>(e.a)], id2[static_cast<size_t>(e.b)], e.wa, e.wb);
    const Arrow& x1 = d1.arrows()[static_cast<size_t>(a1)];
    const Arrow& x2 = d2.arrows()[static_cast<size_t>(a2)];
    int joint = out.add_edge(id1[static_cast<size_t>(x1.at)], id2[static_cast<size_t>(x2.at)], x1.w, x2.w);
    for (size_t a = 0; a < d1.arrows().size(); ++a)
        if (static_cast<int>(a) != a1)
            out.add_arrow(id1[static_cast<size_t>(d1.arrows()[a].at)], d1.arrows()[a].w, d1.arrows()[a].mult);
    for (size_t a = 0; a < d2.arrows().size(); ++a)
        if (static_cast<int>(a) != a2)
            out.add_arrow(id2[static_cast<size_t>(d2.arrows()[a].at)], d2.arrows()[a].w, d2.arrows()[a].mult);
    out.set_root(id1[static_cast<size_t>(d1.root())]);
    if (is_node_edge(out, joint) && edge_determinant(out, joint) == 0)
        throw ValidationError("splice: the new edge has zero determinant");
    return out;
}

CutResult cut_edge(const Diagram& d, int e)
{
    const Edge& ed = d.edges().at(static_cast<size_t>(e));
    // vertices on the root side
    std::vector<bool> near(static_cast<size_t>(d.vertex_count()), false);
    std::vector<int> stack{d.root()};
    near[static_cast<size_t>(d.root())] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& i : d.incidences(x))
            if (i.kind == Incidence::EdgeEnd && i.index != e && !near[static_cast<size_t>(i.target)]) {
                near[static_cast<size_t>(i.target)] = true;
                stack.push_back(i.target);
            }
    }
    int u = near[static_cast<size_t>(ed.a)] ? ed.a : ed.b; // near endpoint
    int w = u == ed.a ? ed.b : ed.a;
    Int wu = u == ed.a ? ed.wa : ed.wb;
    Int ww = u == ed.a ? ed.wb : ed.wa;

    CutResult out;
    out.near_mult = branch_multiplicity(d, u, d.edge_slot(u, e));
    out.far_mult = branch_multiplicity(d, w, d.edge_slot(w, e));
    if (out.near_mult < 1 || out.far_mult < 1)
        throw ValidationError("cut_edge: one side carries no arrows");

    auto half = [&](bool side, int attach, Int weight, Int mult, int root, int& arrow) {
        std::vector<bool> kv(static_cast<size_t>(d.vertex_count())), ke(d.edges().size()), ka(d.arrows().size());
        for (int v = 0; v < d.vertex_count(); ++v)
            kv[static_cast<size_t>(v)] = near[static_cast<size_t>(v)] == side;
        for (size_t k = 0; k < d.edges().size(); ++k)
            ke[k] = static_cast<int>(k) != e && near[static_cast<size_t>(d.edges()[k].a)] == side;
        for (size_t k = 0; k < d.arrows().size(); ++k)
            ka[k] = near[static_cast<size_t>(d.arrows()[k].at)] == side;
        Diagram h = filtered(d, kv, ke, ka);
        int at = h.find(d.name(attach));
        arrow = h.add_arrow(at, weight, mult);
        h.set_root(h.find(d.name(root)));
        return h;
    };
    out.near = half(true, u, wu, out.far_mult, d.root(), out.near_arrow);
    out.far = half(false, w, ww, out.near_mult, w, out.far_arrow);
    return out;
}

Diagram normalize_h1(const Diagram& d)
{
    // A vertex all of whose weights are 1, flanked by two weight-1 leaves
    // and carrying at least two edges to further nodes: drop the two
    // leaves, so those edges become the vertical chain through it.
    std::vector<bool> kv(static_cast<size_t>(d.vertex_count()), true), ke(d.edges().size(), true),
        ka(d.arrows().size(), true);
    bool changed = false;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const auto& inc = d.incidences(v);
        if (inc.size() < 3)
            continue;
        bool unit = std::all_of(inc.begin(), inc.end(), [](const Incidence& i) { return i.weight == 1; });
        if (!unit)
            continue;
        std::vector<int> leaves, inner;
        for (const auto& i : inc)
            if (i.kind == Incidence::EdgeEnd) {
                if (d.is_leaf(i.target) && d.edges()[static_cast<size_t>(i.index)].wa *
                                                   d.edges()[static_cast<size_t>(i.index)].wb ==
                                               1)
                    leaves.push_back(i.index);
                else if (!d.is_leaf(i.target))
                    inner.push_back(i.index);
            }
        if (leaves.size() != 2 || inner.size() < 2)
            continue;
        for (int e : leaves) {
            ke[static_cast<size_t>(e)] = false;
            const Edge& ed = d.edges()[static_cast<size_t>(e)];
            kv[static_cast<size_t>(ed.a == v ? ed.b : ed.a)] = false;
        }
        changed = true;
    }
    if (!changed)
        return d;
    Diagram out = filtered(d, kv, ke, ka);
    // a vertex left with two unit-weight edges is smoothed away
    for (bool again = true; again;) {
        again = false;
        for (int v = 0; v < out.vertex_count(); ++v) {
            const auto& inc = out.incidences(v);
            if (inc.size() != 2 || inc[0].kind != Incidence::EdgeEnd || inc[1].kind != Incidence::EdgeEnd ||
                inc[0].weight != 1 || inc[1].weight != 1)
                continue;
            const Edge& e0 = out.edges()[static_cast<size_t>(inc[0].index)];
            const Edge& e1 = out.edges()[static_cast<size_t>(inc[1].index)];
            std::string u0 = out.name(inc[0].target), u1 = out.name(inc[1].target);
            Int w0 = e0.a == v ? e0.wb : e0.wa, w1 = e1.a == v ? e1.wb : e1.wa;
            std::string root = out.name(out.root() == v ? inc[0].target : out.root());
            std::vector<bool> kv2(static_cast<size_t>(out.vertex_count()), true), ke2(out.edges().size(), true),
                ka2(out.arrows().size(), true);
            kv2[static_cast<size_t>(v)] = false;
            ke2[static_cast<size_t>(inc[0].index)] = false;
            ke2[static_cast<size_t>(inc[1].index)] = false;
            Diagram next = filtered(out, kv2, ke2, ka2);
            next.add_edge(next.find(u0), next.find(u1), w0, w1);
            next.set_root(next.find(root));
            out = std::move(next);
            again = true;
            break;
        }
    }
    if (out.valence(out.root()) < 3) {
        auto r = rupture_vertices(out);
        if (!r.empty())
            out.set_root(r.front());
    }
    return out;
}

} // namespace spectre
