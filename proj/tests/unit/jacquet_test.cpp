#include <gtest/gtest.h>

#include "jacquet/jacquet.hpp"
#include "support/builders.hpp"

using namespace jacquet;
using namespace jacquet::testing;

namespace {

std::vector<TemperedLabel> packet(GroupType g, const std::vector<int>& as, const RhoKey& rho = one()) {
    std::vector<Summand> s;
    for (int a : as) s.push_back({rho, a});
    const auto phi = build_parameter(g, s);
    std::vector<TemperedLabel> out;
    for (const auto& eta : list_packet(phi)) out.push_back(*make_tempered(phi, eta));
    return out;
}

}  // namespace

TEST(Jacquet, SingleSummandSteps) {
    const auto p4 = pi(GroupType::SOodd, {4}, {1});
    EXPECT_EQ(jac_tempered(p4, one(), h("3/2")), so({2}, {1}));
    EXPECT_TRUE(jac_tempered(p4, one(), h("1/2")).empty());
    EXPECT_EQ(jac_tempered(pi(GroupType::SOodd, {2}, {1}), one(), h("1/2")), unit_so());
}

TEST(Jacquet, HeadOfSmallestSummand) {
    // x = 1/2 against pi_eps(2,4,4) removes S_2: pi_eps(4,4).
    for (int e : {1, -1}) {
        const auto t = pi(GroupType::SOodd, {2, 4, 4}, {1, e, e});
        EXPECT_EQ(jac_tempered(t, one(), h("1/2")), so({4, 4}, {e, e}));
    }
}

TEST(Jacquet, VanishesUnlessSummandPresent) {
    for (GroupType g : {GroupType::SOodd, GroupType::Sp}) {
        const std::vector<std::vector<int>> phis = g == GroupType::SOodd
                                                       ? std::vector<std::vector<int>>{{2}, {2, 4}, {4, 4, 6}, {2, 2, 6}}
                                                       : std::vector<std::vector<int>>{{1}, {3, 5}, {1, 1, 5}, {3, 3, 3}};
        for (const auto& as : phis) {
            for (const auto& t : packet(g, as)) {
                for (int twice_x = 1; twice_x <= 7; ++twice_x) {
                    const HalfInt x = HalfInt::from_twice(twice_x);
                    const int a = twice_x + 1;
                    if (t.param.multiplicity(one(), a) == 0) EXPECT_TRUE(jac_tempered(t, one(), x).empty());
                }
            }
        }
    }
}

TEST(Jacquet, SupercuspidalAlternatingCharacter) {
    const auto t = pi(GroupType::SOodd, {2, 4, 6}, {-1, 1, -1});
    for (const char* x : {"1/2", "3/2", "5/2"}) EXPECT_TRUE(jac_tempered(t, one(), h(x)).empty()) << x;
}

TEST(Jacquet, EmptyVectorIsIdentity) {
    const VirtualGRep v = so({2, 4, 4}, {1, -1, -1}) + q(3, 2) * ind({cs("1/2", 3)}, unit_so());
    EXPECT_EQ(jac_vector(v, one(), {}), v);
}

TEST(Jacquet, Linear) {
    const VirtualGRep a = so({2, 4, 4}, {1, 1, 1});
    const VirtualGRep b = ind({cs("1", 2)}, so({2}, {1}));
    const Rational c = q(-5, 3);
    for (const char* x : {"1/2", "3/2"}) {
        EXPECT_EQ(jac_rho_x(a + c * b, one(), h(x)), jac_rho_x(a, one(), h(x)) + c * jac_rho_x(b, one(), h(x)));
    }
}

TEST(Jacquet, StandardModulePeelsSegmentHead) {
    // Jac_{|.|^{3/2}}(|.|^{3/2} |x 1_SO1) = 1_SO1.
    EXPECT_EQ(jac_rho_x(ind({cs("3/2", 1)}, unit_so()), one(), h("3/2")), unit_so());
    // The dual head -x = -3/2 contributes via the contragredient.
    EXPECT_EQ(jac_rho_x(ind({cs("3/2", 1)}, unit_so()), one(), h("-3/2")), unit_so());
}

TEST(Jacquet, OtherRhoIsInert) {
    const auto t = pi(GroupType::SOodd, {1, 3}, {1, 1}, symp2());
    EXPECT_TRUE(jac_tempered(t, one(), h("1/2")).empty());
    EXPECT_FALSE(jac_tempered(t, symp2(), h("1")).empty());
}

TEST(Jacquet, CommutationAwayFromAdjacent) {
    // Jac_x and Jac_y commute when |x - y| != 1.
    for (const auto& t : packet(GroupType::SOodd, {2, 4, 6, 6})) {
        const VirtualGRep v = from_tempered(t);
        for (const char* xs : {"1/2", "3/2", "5/2"}) {
            for (const char* ys : {"1/2", "3/2", "5/2"}) {
                const HalfInt x = h(xs), y = h(ys);
                if (x - y == HalfInt(1) || y - x == HalfInt(1)) continue;
                EXPECT_EQ(jac_vector(v, one(), {x, y}), jac_vector(v, one(), {y, x}));
            }
        }
    }
}

TEST(Jacquet, CacheDoesNotChangeResults) {
    const auto t = pi(GroupType::SOodd, {2, 4, 4}, {1, -1, -1});
    const auto warm = jac_vector(from_tempered(t), one(), {h("3/2"), h("1/2"), h("1/2")});
    clear_jacquet_cache();
    EXPECT_EQ(jac_vector(from_tempered(t), one(), {h("3/2"), h("1/2"), h("1/2")}), warm);
}
