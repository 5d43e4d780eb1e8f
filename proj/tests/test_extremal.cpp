#include <gtest/gtest.h>

#include "spectre/decomposition.hpp"
#include "spectre/extremal.hpp"
#include "spectre/oracle.hpp"
#include "spectre/spectral_pairs.hpp"
#include "support/oracles.hpp"

using namespace spectre;
namespace to = testing_oracles;

TEST(VirtualValue, HandValues)
{
    Diagram b = brieskorn_diagram(2, 3);
    EXPECT_EQ(virtual_value(b, b.root()), Rat(1, 6));

    Diagram d = to_diagram(Polygon({{1, 2, 2}, {2, 1, 2}}));
    EXPECT_EQ(virtual_value(d, d.find("n1")), Rat(1, 2));
    EXPECT_EQ(virtual_value(d, d.find("n2")), Rat(1, 2));

    Diagram z = to_diagram(Polygon({{1, 1, 2}}));
    EXPECT_EQ(virtual_value(z, z.find("n1")), Rat(0));
}

TEST(MaxSpectral, HandValues)
{
    MaxSpectral b = max_spectral(brieskorn_diagram(2, 3));
    EXPECT_EQ(b.alpha, Rat(1, 6));
    EXPECT_EQ(b.name, "node");

    MaxSpectral t = max_spectral(to_diagram(Polygon({{1, 2, 2}, {2, 1, 2}})));
    EXPECT_EQ(t.alpha, Rat(1, 2));
    EXPECT_TRUE(t.name == "n1" || t.name == "n2");

    MaxSpectral u = max_spectral(to_diagram(Polygon({{1, 2, 2}, {3, 1, 1}})));
    EXPECT_EQ(u.alpha, Rat(2, 5));
    EXPECT_EQ(u.name, "n1");
}

TEST(I0, HalfOpenTest)
{
    EXPECT_EQ(i0_of_polygon(Polygon({{2, 3, 1}})), 1);
    EXPECT_EQ(alpha_of_polygon(Polygon({{2, 3, 1}})), Rat(1, 6));
    // (1,1) lies on the ray through X_1 = (2,2)
    EXPECT_EQ(i0_of_polygon(Polygon({{1, 2, 2}, {2, 1, 2}})), 1);
    EXPECT_EQ(alpha_of_polygon(Polygon({{1, 2, 2}, {2, 1, 2}})), Rat(1, 2));
    // (1,1) = X_0/10 + X_1/2, inside the parallelogram over the first face
    EXPECT_EQ(i0_of_polygon(Polygon({{1, 2, 2}, {3, 1, 1}})), 1);
    EXPECT_EQ(alpha_of_polygon(Polygon({{1, 2, 2}, {3, 1, 1}})), Rat(2, 5));
}

TEST(WalkDirection, HorizontalEdgePointsToParent)
{
    int checked = 0;
    for (std::uint64_t s = 1; s <= 200; ++s) {
        Diagram d = normalize_h1(random_diagram(s, 1));
        SpliceStructure st = splice_structure(d);
        for (size_t w = 1; w < st.comps.size(); ++w) {
            const Component& c = st.comps[w];
            if (c.parent_face.p == 1 || c.parent_face.q == 1)
                continue;
            int parent = st.comps[static_cast<size_t>(c.parent)].nodes[static_cast<size_t>(c.attach)];
            EXPECT_EQ(walk_direction(d, c.horizontal_edge), parent);
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(WalkDirection, ValueDoesNotDrop)
{
    for (std::uint64_t s = 1; s <= 100; ++s) {
        Diagram d = normalize_h1(random_diagram(s, 2));
        for (size_t e = 0; e < d.edges().size(); ++e) {
            if (!is_node_edge(d, static_cast<int>(e)))
                continue;
            const Edge& ed = d.edges()[e];
            int head = walk_direction(d, static_cast<int>(e));
            int tail = head == ed.a ? ed.b : ed.a;
            EXPECT_GE(virtual_value(d, head), virtual_value(d, tail)) << "seed " << s << " edge " << e;
        }
    }
}

TEST(MaxSpectral, AgreesWithSpectrumOnCorpus)
{
    for (std::uint64_t s = 1; s <= 150; ++s) {
        Diagram d = random_diagram(s, static_cast<int>(s % 4));
        SpecBag sp = spectrum(d);
        MaxSpectral m = max_spectral(d);
        EXPECT_EQ(m.alpha, to::top(sp)) << "seed " << s;
        EXPECT_EQ(sp.count(m.alpha), 1);
        EXPECT_EQ(sp.count(-m.alpha), 1);
        EXPECT_FALSE(m.path.empty());
        EXPECT_NE(std::find(m.path.begin(), m.path.end(), m.witness), m.path.end());
    }
}
