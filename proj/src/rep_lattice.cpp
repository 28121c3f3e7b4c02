#include <algorithm>

#include "jacquet/rep_lattice.hpp"

namespace jacquet {

bool standard_segment_less(const Segment& a, const Segment& b) {
    HalfInt ca = a.center(), cb = b.center();
    if (ca != cb) return ca > cb;
    if (a.rho != b.rho) return a.rho < b.rho;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

bool StandardLabel::is_tempered() const {
    return std::all_of(gl.begin(), gl.end(), [](const Segment& s) { return s.center() == HalfInt(0); });
}

int StandardLabel::rank() const { return GLLabel(gl).gl_dim() + core.param.rank(); }

bool is_canonical(const StandardLabel& lbl) {
    for (const auto& s : lbl.gl) {
        HalfInt c = s.center();
        if (c < HalfInt(0)) return false;
        if (c == HalfInt(0)) {
            if (good_parity(lbl.group(), s.rho, s.length())) return false;
            if (!s.rho.self_dual() && s.rho.dual_id < s.rho.id) return false;
        }
    }
    if (!std::is_sorted(lbl.gl.begin(), lbl.gl.end(), standard_segment_less)) return false;
    const SignedParam entries = to_signed(lbl.core);
    return is_nonzero(lbl.core.param, lbl.core.eta) && std::is_sorted(entries.begin(), entries.end());
}

VirtualGRep from_tempered(const TemperedLabel& t, const Rational& c) {
    return VirtualGRep::single(StandardLabel{{}, t}, c);
}

VirtualGRep normalize_standard(std::vector<Segment> segs, const TemperedSum& core_sum) {
    if (core_sum.empty()) return {};
    const GroupType group = core_sum.begin()->first.group();
    TemperedSum cores = core_sum;
    std::vector<Segment> kept;
    kept.reserve(segs.size());
    for (Segment seg : segs) {
        HalfInt c = seg.center();
        if (c < HalfInt(0)) {
            seg = seg.dual();
        } else if (c == HalfInt(0)) {
            if (good_parity(group, seg.rho, seg.length())) {
                TemperedSum next;
                for (const auto& [t, coeff] : cores) {
                    for (auto& u : decompose_tempered_induction(seg.rho, seg.length(), t)) next.add(std::move(u), coeff);
                }
                cores = std::move(next);
                continue;
            }
            if (!seg.rho.self_dual() && seg.rho.dual_id < seg.rho.id) seg = seg.dual();
        }
        kept.push_back(std::move(seg));
    }
    std::sort(kept.begin(), kept.end(), standard_segment_less);
    VirtualGRep out;
    for (const auto& [t, coeff] : cores) out.add(StandardLabel{kept, t}, coeff);
    return out;
}

VirtualGRep induct(const GLLabel& tau, const StandardLabel& lbl) {
    std::vector<Segment> segs = lbl.gl;
    segs.insert(segs.end(), tau.segments().begin(), tau.segments().end());
    return normalize_standard(std::move(segs), TemperedSum::single(lbl.core));
}

VirtualGRep induct(const GLLabel& tau, const VirtualGRep& v) {
    if (tau.empty()) return v;
    VirtualGRep out;
    for (const auto& [lbl, c] : v) out.add_scaled(induct(tau, lbl), c);
    return out;
}

VirtualGRep induct_segment(const Segment& seg, const VirtualGRep& v) { return induct(GLLabel({seg}), v); }

VirtualBiRep induct(const GLTensorSum& t, const VirtualBiRep& v) {
    VirtualBiRep out;
    for (const auto& [ab, c1] : t) {
        for (const auto& [bi, c2] : v) {
            GLLabel left = ab.first * bi.first;
            Rational c12 = c1 * c2;
            for (const auto& [sigma, c3] : induct(ab.second, bi.second)) out.add(BiLabel(left, sigma), Rational(c12 * c3));
        }
    }
    return out;
}

VirtualBiRep degree_part(const VirtualBiRep& v, int k) {
    VirtualBiRep out;
    for (const auto& [b, c] : v) {
        if (degree(b) == k) out.add(b, c);
    }
    return out;
}

}  // namespace jacquet
