#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "jacquet/formal_sum.hpp"
#include "jacquet/gl.hpp"
#include "jacquet/parameters.hpp"

namespace jacquet {

// Delta_1 x ... x Delta_r |x pi(phi, eta). Segments have positive center, or center zero
// and bad parity (tempered satellites). Sorted by center descending, then rho, then x.
struct StandardLabel {
    std::vector<Segment> gl;
    TemperedLabel core;

    GroupType group() const { return core.group(); }
    bool is_tempered() const;
    GLLabel gl_label() const { return GLLabel(gl); }
    // Rank of the classical group.
    int rank() const;

    friend bool operator==(const StandardLabel&, const StandardLabel&) = default;
    friend auto operator<=>(const StandardLabel&, const StandardLabel&) = default;
};

using TemperedSum = FormalSum<TemperedLabel>;
using VirtualGRep = FormalSum<StandardLabel>;
using BiLabel = std::pair<GLLabel, StandardLabel>;
using VirtualBiRep = FormalSum<BiLabel>;

// Ordering used inside StandardLabel::gl.
bool standard_segment_less(const Segment& a, const Segment& b);
// Whether the label satisfies the center / satellite invariant and is sorted.
bool is_canonical(const StandardLabel& lbl);

VirtualGRep from_tempered(const TemperedLabel& t, const Rational& c = Rational(1));

// Dualize negative-center segments, absorb center-zero good-parity segments into the
// core, sort the rest.
VirtualGRep normalize_standard(std::vector<Segment> segs, const TemperedSum& core_sum);

VirtualGRep induct_segment(const Segment& seg, const VirtualGRep& v);
VirtualGRep induct(const GLLabel& tau, const VirtualGRep& v);
VirtualGRep induct(const GLLabel& tau, const StandardLabel& lbl);
// (a (x) b) |x (c (x) sigma) = (a x c) (x) (b |x sigma), extended bilinearly.
VirtualBiRep induct(const GLTensorSum& t, const VirtualBiRep& v);

// Degree of a bi-label: GL rank of the left factor.
inline int degree(const BiLabel& b) { return b.first.gl_dim(); }
VirtualBiRep degree_part(const VirtualBiRep& v, int k);

}  // namespace jacquet
