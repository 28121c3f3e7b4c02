#include <gtest/gtest.h>

#include <algorithm>

#include "jacquet/gl.hpp"
#include "support/builders.hpp"

using namespace jacquet;
using namespace jacquet::testing;

namespace {

// Segments [x, y] of the trivial character with x, y in the window.
std::vector<Segment> window_segments(const RhoKey& rho, int lo2, int hi2) {
    std::vector<Segment> out;
    for (int x = lo2; x <= hi2; ++x) {
        for (int y = x; y >= lo2; y -= 2) out.emplace_back(rho, HalfInt::from_twice(x), HalfInt::from_twice(y));
    }
    return out;
}

// Labels with total size <= max_size built from the given segments.
std::vector<GLLabel> labels_up_to(const std::vector<Segment>& segs, int max_size) {
    std::vector<GLLabel> out{GLLabel()};
    std::vector<std::pair<std::vector<Segment>, std::size_t>> stack{{{}, 0}};
    while (!stack.empty()) {
        auto [cur, start] = stack.back();
        stack.pop_back();
        int size = 0;
        for (const auto& s : cur) size += s.length();
        for (std::size_t i = start; i < segs.size(); ++i) {
            if (size + segs[i].length() > max_size) continue;
            auto next = cur;
            next.push_back(segs[i]);
            out.emplace_back(next);
            stack.emplace_back(next, i);
        }
    }
    return out;
}

// Independent count: peel heads one at a time in the standard basis.
std::int64_t peel_dim(const std::vector<HalfInt>& ys, const GLLabel& lbl, const RhoKey& rho) {
    GLSum v = GLSum::single(lbl);
    for (HalfInt y : ys) v = gl_jacquet_delta(v, rho, y);
    const Rational c = v.coeff(GLLabel());
    return c.get_num().get_si();
}

}  // namespace

TEST(Segment, BasicsAndDual) {
    const Segment s(one(), h("3/2"), h("-1/2"));
    EXPECT_EQ(s.length(), 3);
    EXPECT_EQ(s.center(), h("1/2"));
    EXPECT_EQ(s.dual(), Segment(one(), h("1/2"), h("-3/2")));
    EXPECT_EQ(s.str(), "1:[3/2,-1/2]");
    EXPECT_EQ(steinberg(one(), 4), Segment(one(), h("3/2"), h("-3/2")));
    EXPECT_THROW(Segment(one(), h("1/2"), h("3/2")), std::invalid_argument);
    EXPECT_THROW(Segment(one(), h("1/2"), h("0")), std::invalid_argument);
}

TEST(Segment, DualOfNonSelfDualRho) {
    const RhoKey c = RhoKey::make("c", 1, Duality::NotSelfDual, "cd");
    const Segment s(c, h("1"), h("0"));
    EXPECT_EQ(s.dual().rho.id, "cd");
    EXPECT_EQ(s.dual().dual(), s);
}

TEST(GLLabel, SortedAndDualIsInvolution) {
    const GLLabel a = gl({cs("1", 2), cs("1/2", 1), cs("-1/2", 3)});
    EXPECT_TRUE(std::is_sorted(a.segments().begin(), a.segments().end()));
    EXPECT_EQ(a.size(), 6);
    EXPECT_EQ(a.gl_dim(), 6);
    for (const auto& lbl : labels_up_to(window_segments(one(), -2, 3), 4)) EXPECT_EQ(lbl.dual().dual(), lbl);
}

TEST(JacDim, MatchesPeelingOracle) {
    const auto labels = labels_up_to(window_segments(one(), -1, 3), 5);
    int checked = 0;
    for (const auto& lbl : labels) {
        auto ys = lbl.exponents(one());
        std::sort(ys.begin(), ys.end());
        do {
            ASSERT_EQ(jac_dim(ys, lbl, one()), peel_dim(ys, lbl, one())) << lbl.str();
            ++checked;
        } while (std::next_permutation(ys.begin(), ys.end()) && checked < 200000);
    }
    EXPECT_GT(checked, 1000);
}

TEST(JacDim, OtherRhoLeftOverGivesZero) {
    const GLLabel lbl = gl({cs("1/2", 1), cs("1/2", 1, symp2())});
    EXPECT_EQ(jac_dim({h("1/2")}, lbl, one()), 0);
    EXPECT_EQ(jac_dim({h("1/2")}, gl({cs("1/2", 1)}), one()), 1);
    EXPECT_EQ(jac_dim({h("1/2"), h("1/2")}, gl({cs("1/2", 1), cs("1/2", 1)}), one()), 2);
    EXPECT_EQ(jac_dim({}, GLLabel(), one()), 1);
}

TEST(BigMStar, SegmentClosedFormMatchesComposition) {
    const RhoKey c = RhoKey::make("c", 1, Duality::NotSelfDual, "cd");
    for (const RhoKey& rho : {one(), symp2(), c}) {
        for (const auto& seg : window_segments(rho, -3, 4)) {
            EXPECT_EQ(big_mstar_segment(seg), big_mstar(GLLabel({seg}))) << seg.str();
        }
    }
}

TEST(MStar, Multiplicative) {
    const auto labels = labels_up_to(window_segments(one(), -1, 2), 2);
    for (const auto& a : labels) {
        for (const auto& b : labels) {
            EXPECT_EQ(mstar_gl(a * b), tensor_multiply(mstar_gl(a), mstar_gl(b)));
            EXPECT_EQ(big_mstar(a * b), tensor_multiply(big_mstar(a), big_mstar(b)));
        }
    }
}

TEST(MStar, SegmentTerms) {
    // m*([1/2, -1/2]) = 1 (x) [1/2,-1/2] + [1/2] (x) [-1/2] + [1/2,-1/2] (x) 1
    const Segment s(one(), h("1/2"), h("-1/2"));
    GLTensorSum expected;
    expected.add({GLLabel(), GLLabel({s})}, q(1));
    expected.add({gl({Segment(one(), h("1/2"), h("1/2"))}), gl({Segment(one(), h("-1/2"), h("-1/2"))})}, q(1));
    expected.add({GLLabel({s}), GLLabel()}, q(1));
    EXPECT_EQ(mstar_gl(GLLabel({s})), expected);
}
