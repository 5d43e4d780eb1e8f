#include <gtest/gtest.h>

#include "spectre/decomposition.hpp"
#include "spectre/oracle.hpp"
#include "spectre/spectral_pairs.hpp"

using namespace spectre;

TEST(Decompose, PolygonDiagramIsItsOwnTerm)
{
    Polygon P({{1, 2, 2}, {3, 1, 1}});
    PolygonCombination c = decompose(to_diagram(P));
    ASSERT_EQ(c.terms().size(), 1u);
    EXPECT_EQ(c.terms().begin()->first, P);
    EXPECT_EQ(c.terms().begin()->second, 1);
}

TEST(Decompose, LinearityOfSppa)
{
    Polygon P({{2, 3, 1}});
    PolygonCombination one;
    one.add(P, 1);
    EXPECT_EQ(sppa(one), spectral_pairs(to_diagram(P)));
    one.add(P, -1);
    EXPECT_TRUE(one.empty());
    EXPECT_TRUE(sppa(one).empty());
}

TEST(Decompose, OneHorizontalEdgeGivesThreeTerms)
{
    int seen = 0;
    for (std::uint64_t s = 1; s <= 200 && seen < 10; ++s) {
        Diagram d = random_diagram(s, 1);
        SpliceStructure st = splice_structure(normalize_h1(d));
        if (st.comps.size() != 2)
            continue;
        ++seen;
        PolygonCombination c = decompose(st);
        long sum = 0;
        for (const auto& [P, k] : c.terms())
            sum += k;
        EXPECT_EQ(sum, 1);
        EXPECT_LE(c.terms().size(), 3u);
    }
    EXPECT_GT(seen, 0);
}

TEST(Decompose, StructureBookkeeping)
{
    for (std::uint64_t s = 1; s <= 100; ++s) {
        Diagram d = normalize_h1(random_diagram(s, 3));
        SpliceStructure st = splice_structure(d);
        ASSERT_EQ(st.comps[0].parent, -1);
        for (size_t w = 1; w < st.comps.size(); ++w) {
            const Component& c = st.comps[w];
            const Component& par = st.comps[static_cast<size_t>(c.parent)];
            Int lm = 0;
            for (const Face& f : c.faces)
                lm += f.q * f.k;
            EXPECT_EQ(c.ell_minus, lm);
            EXPECT_EQ(c.parent_face, par.faces[static_cast<size_t>(c.attach)]);
            EXPECT_GE(c.ell_plus, 0);
            // p_1 > P Q q_1 keeps the horizontal determinant positive
            EXPECT_GT(edge_determinant(d, c.horizontal_edge), 0);
        }
    }
}

TEST(Decompose, FactorizationAtSpectrumLevel)
{
    for (std::uint64_t s = 1; s <= 150; ++s) {
        Diagram d = random_diagram(s, 1 + static_cast<int>(s % 3));
        PairBag psi = sppa(decompose(d));
        EXPECT_EQ(project(psi), spectrum(d)) << "seed " << s;
        EXPECT_EQ(psi.total(), spectral_pairs(d).total());
    }
}

TEST(Decompose, PairsDiscrepancyIsWeightOnly)
{
    // where the pair-level reading fails, it moves mass between weights of
    // one value and never between values
    for (std::uint64_t s = 1; s <= 100; ++s) {
        Diagram d = random_diagram(s, 2);
        PairBag diff = sppa(decompose(d)) - spectral_pairs(d);
        EXPECT_TRUE(project(diff).empty()) << "seed " << s;
    }
}

TEST(Decompose, MergeFaces)
{
    std::vector<Face> f = merge_faces({{1, 1, 2}, {1, 1, 3}, {2, 1, 0}, {3, 1, 1}});
    EXPECT_EQ(f, (std::vector<Face>{{1, 1, 5}, {3, 1, 1}}));
}

TEST(Decompose, AnchorMustBeRupture)
{
    Diagram d = brieskorn_diagram(2, 3);
    EXPECT_THROW(splice_structure(d, d.find("lp")), ValidationError);
}
