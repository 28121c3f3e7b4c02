#include <gtest/gtest.h>

#include "jacquet/rep_lattice.hpp"
#include "support/builders.hpp"

using namespace jacquet;
using namespace jacquet::testing;

namespace {

void expect_canonical(const VirtualGRep& v) {
    for (const auto& [lbl, c] : v) EXPECT_TRUE(is_canonical(lbl));
}

}  // namespace

TEST(RepLattice, NegativeCenterIsDualized) {
    const auto core = unit_so();
    EXPECT_EQ(ind({cs("-1/2", 3)}, core), ind({cs("1/2", 3)}, core));
    expect_canonical(ind({cs("-1/2", 3)}, core));
}

TEST(RepLattice, CenterZeroGoodParityIsAbsorbed) {
    // S_2 already occurs in phi, so St_2 |x pi+(2) stays irreducible.
    const VirtualGRep v = ind({cs("0", 2)}, so({2}, {1}));
    EXPECT_EQ(v, so({2, 2, 2}, {1, 1, 1}));
    // St_2 |x 1 has two constituents.
    EXPECT_EQ(ind({cs("0", 2)}, unit_so()), so({2, 2}, {1, 1}) + so({2, 2}, {-1, -1}));
}

TEST(RepLattice, CenterZeroBadParityIsASatellite) {
    const VirtualGRep v = ind({cs("0", 3)}, so({2}, {1}));
    ASSERT_EQ(v.size(), 1u);
    const auto& lbl = v.begin()->first;
    ASSERT_EQ(lbl.gl.size(), 1u);
    EXPECT_EQ(lbl.gl[0].center(), HalfInt(0));
    EXPECT_TRUE(lbl.is_tempered());
    expect_canonical(v);
}

TEST(RepLattice, SegmentsSortedByCenterDescending) {
    const VirtualGRep v = ind({cs("1/2", 1), cs("3/2", 1), cs("1", 2)}, unit_so());
    ASSERT_EQ(v.size(), 1u);
    const auto& gl = v.begin()->first.gl;
    EXPECT_EQ(gl[0].center(), h("3/2"));
    EXPECT_EQ(gl[1].center(), h("1"));
    EXPECT_EQ(gl[2].center(), h("1/2"));
}

TEST(RepLattice, InductionCommutes) {
    const std::vector<Segment> segs = {cs("1/2", 1), cs("-1/2", 1), cs("0", 2),   cs("1", 2),
                                       cs("3/2", 1), cs("0", 3),    cs("1/2", 1, symp2())};
    const std::vector<VirtualGRep> cores = {unit_so(), so({2}, {1}), so({2, 4}, {-1, -1}), so({4, 4}, {1, 1})};
    for (const auto& core : cores) {
        for (const auto& s : segs) {
            for (const auto& t : segs) {
                const auto st = induct_segment(s, induct_segment(t, core));
                EXPECT_EQ(st, induct_segment(t, induct_segment(s, core)));
                expect_canonical(st);
            }
        }
    }
}

TEST(RepLattice, RankIsAdditive) {
    const VirtualGRep v = ind({cs("1/2", 3)}, so({2, 4}, {1, 1}));
    for (const auto& [lbl, c] : v) EXPECT_EQ(lbl.rank(), 3 + 3);
}

TEST(RepLattice, DegreePart) {
    VirtualBiRep b = tensor(gls({cs("1/2", 1)}), unit_so()) + tensor(GLSum::single(GLLabel()), so({2}, {1}));
    EXPECT_EQ(degree_part(b, 1), tensor(gls({cs("1/2", 1)}), unit_so()));
    EXPECT_EQ(degree_part(b, 0).size(), 1u);
    EXPECT_TRUE(degree_part(b, 2).empty());
}
