#include "spectre/spectral_pairs.hpp"

#include <algorithm>

namespace spectre {

namespace {

// sum_{0<s<n} [(-s/n, 2) + (s/n, 0)]
PairBag cyclic_pairs(Int n)
{
    PairBag out;
    for (Int s = 1; s < n; ++s) {
        out.add({Rat(-s, n), 2});
        out.add({Rat(s, n), 0});
    }
    return out;
}

} // namespace

VertexTerms vertex_terms(const Diagram& d, int v)
{
    if (v < 0 || v >= d.vertex_count() || d.valence(v) < 3)
        throw ValidationError("vertex_terms: not a rupture vertex");
    LocalData ld = local_data(d, v);
    VertexTerms t;
    const Int mv = ld.m_v;
    const Int r = ld.r_v;
    for (Int s = 1; s < mv; ++s) {
        if (mod(static_cast<__int128>(s) * r, mv) == 0)
            continue;
        // -1 + sum_i {s s_i / m_v}; the fractional parts add up to an integer
        __int128 residues = 0;
        for (const auto& x : ld.items)
            residues += mod(static_cast<__int128>(s) * x.s, mv);
        if (residues % mv != 0)
            throw InconsistencyError("fractional parts do not sum to an integer at " + d.name(v));
        long coef = static_cast<long>(residues / mv) - 1;
        if (coef != 0) {
            t.a.add({Rat(s, mv) - Rat(1), 1}, coef);
            t.a.add({Rat(1) - Rat(s, mv), 1}, coef);
        }
    }
    t.b = cyclic_pairs(r);
    if (ld.d_v)
        t.c = cyclic_pairs(*ld.d_v);
    return t;
}

Int arrow_d(const Diagram& d, int a)
{
    if (a < 0 || a >= static_cast<int>(d.arrows().size()))
        throw ValidationError("unknown arrow id " + std::to_string(a));
    const Arrow& ar = d.arrows()[static_cast<size_t>(a)];
    // linking number of this component with the rest of the link
    Int others = 1;
    int slot = d.arrow_slot(a);
    const auto& inc = d.incidences(ar.at);
    for (size_t j = 0; j < inc.size(); ++j)
        if (static_cast<int>(j) != slot)
            others = mul(others, inc[j].weight);
    Int rest = checked(static_cast<__int128>(multiplicity(d, ar.at)) - static_cast<__int128>(ar.mult) * others);
    if (rest % ar.w != 0)
        throw InconsistencyError("arrow linking number is not an integer");
    return gcd(ar.mult, rest / ar.w);
}

PairBag arrow_term(const Diagram& d, int a)
{
    Int da = arrow_d(d, a);
    PairBag out;
    for (Int s = 1; s < da; ++s)
        out.add({Rat(-s, da), 2});
    return out;
}

PairBag spectral_pairs(const Diagram& d)
{
    Validation val = validate(d);
    if (!val.ok())
        require_valid(d);
    if (d.valence(d.root()) < 3)
        throw ValidationError("the root must be a rupture vertex");
    PairBag out;
    for (int v : rupture_vertices(d)) {
        VertexTerms t = vertex_terms(d, v);
        out += t.a;
        out -= t.b;
        out += t.c;
    }
    for (size_t a = 0; a < d.arrows().size(); ++a)
        out += arrow_term(d, static_cast<int>(a));
    out.add({Rat(0), 1}, static_cast<long>(d.arrows().size()) - 1);
    if (val.algebraic && !out.all_nonnegative())
        throw InconsistencyError("spectral pairs with a negative multiplicity on an algebraic diagram");
    return out;
}

SpecBag spectrum(const Diagram& d) { return project(spectral_pairs(d)); }

PairBag splice_correction(Int m1, Int m2)
{
    if (m1 < 1 || m2 < 1)
        throw ValidationError("splice_correction: multiplicities must be positive");
    Int g = gcd(m1, m2);
    PairBag out;
    out.add({Rat(0), 1}, -1);
    for (Int s = 1; s < g; ++s) {
        out.add({Rat(s, g), 0});
        out.add({Rat(-s, g), 2}, -1);
    }
    return out;
}

} // namespace spectre
