#include <gtest/gtest.h>

#include <random>

#include "spectre/decomposition.hpp"
#include "spectre/oracle.hpp"
#include "spectre/spectral_pairs.hpp"

using namespace spectre;

namespace {

Diagram corpus(std::uint64_t s) { return s % 2 ? to_diagram(random_polygon(s, 4, 6)) : random_diagram(s, static_cast<int>(s % 4)); }

} // namespace

TEST(Properties, SymmetricAndInsideOpenInterval)
{
    for (std::uint64_t s = 1; s <= 400; ++s) {
        Diagram d = corpus(s);
        PairBag pp = spectral_pairs(d);
        ASSERT_TRUE(pp.all_nonnegative()) << "seed " << s;
        SpecBag sp = project(pp);
        for (const auto& [a, c] : sp) {
            EXPECT_GT(a, Rat(-1));
            EXPECT_LT(a, Rat(1));
            EXPECT_EQ(sp.count(-a), c) << "seed " << s;
        }
        EXPECT_EQ(moment(sp, 0), Rat(milnor_number(d)));
    }
}

TEST(Properties, PairWeightsMirror)
{
    // (a, w) and (-a, 2 - w) come together
    for (std::uint64_t s = 1; s <= 200; ++s) {
        PairBag pp = spectral_pairs(corpus(s));
        for (const auto& [k, c] : pp) {
            EXPECT_GE(k.weight, 0);
            EXPECT_LE(k.weight, 2);
            EXPECT_EQ(pp.count({-k.alpha, 2 - k.weight}), c) << "seed " << s;
        }
    }
}

TEST(Properties, RootChoiceInvariance)
{
    for (std::uint64_t s = 1; s <= 200; ++s) {
        Diagram d = corpus(s);
        SpecBag base = spectrum(d);
        for (int v : rupture_vertices(d)) {
            Diagram e = d;
            e.set_root(v);
            ASSERT_EQ(spectrum(e), base) << "seed " << s << " root " << d.name(v);
        }
    }
}

TEST(Properties, OpenSegmentClosedForm)
{
    std::mt19937_64 g(31);
    std::uniform_int_distribution<Int> num(-200, 200), den(1, 17);
    int n = 0;
    while (n < 1000) {
        Rat x(num(g), den(g)), y(num(g), den(g));
        if (!(x < y) || x.is_integer() || y.is_integer())
            continue;
        ++n;
        Int brute = 0;
        for (Int k = -201; k <= 201; ++k)
            brute += Rat(k) > x && Rat(k) < y;
        ASSERT_EQ(count_open_segment(x, y), brute);
        ASSERT_EQ(open_segment_closed_form(x, y), Rat(brute));
    }
}

TEST(Properties, ConeFiberClosedForm)
{
    std::mt19937_64 g(32);
    int n = 0;
    while (n < 1000) {
        Polygon P = random_polygon(g(), 4, 6);
        int i = 1 + static_cast<int>(g() % static_cast<std::uint64_t>(P.r()));
        const Face& F = P.face(i);
        Int s = 1 + static_cast<Int>(g() % 60);
        if (cone_fiber_degenerate(P.X(i - 1), P.X(i), F.p, F.q, s))
            continue;
        ++n;
        ASSERT_EQ(cone_fiber_closed_form(P.X(i - 1), P.X(i), F.p, F.q, s),
                  Rat(count_cone_fiber(P.X(i - 1), P.X(i), F.p, F.q, s)));
    }
}

TEST(Properties, SpliceCorrectionShape)
{
    for (Int a = 1; a <= 30; ++a)
        for (Int b = 1; b <= 30; ++b) {
            PairBag c = splice_correction(a, b);
            Int d = gcd(a, b);
            EXPECT_EQ(c.count({Rat(0), 1}), -1);
            EXPECT_EQ(static_cast<Int>(c.size()), 1 + 2 * (d - 1));
            EXPECT_EQ(c.total(), -1);
        }
}
