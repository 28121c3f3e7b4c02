#include <map>
#include <mutex>
#include <tuple>

#include "jacquet/jacquet.hpp"

namespace jacquet {

namespace {

using JacKey = std::tuple<TemperedLabel, RhoKey, HalfInt>;

std::mutex cache_mutex;
std::map<JacKey, VirtualGRep> cache;

TemperedLabel must_be_nonzero(GroupType g, SignedParam p) {
    auto t = make_tempered(g, std::move(p));
    if (!t) throw std::logic_error("restriction of a nonzero character vanished");
    return *t;
}

VirtualGRep jac_tempered_uncached(const TemperedLabel& t, const RhoKey& rho, HalfInt x) {
    if (x < HalfInt(0) || !rho.self_dual()) return {};
    const int a = static_cast<int>(x.twice() + 1);
    const int m = t.param.multiplicity(rho, a);
    if (m == 0) return {};
    const int s = t.sign_of(rho, a);
    const GroupType g = t.group();
    const SignedParam p = to_signed(t);

    if (m >= 3) {
        const int delta = m % 2 == 1 ? 1 : 2;
        TemperedLabel minus_two = must_be_nonzero(g, remove_copies(p, rho, a, 2));
        std::vector<Segment> segs;
        if (x > HalfInt(0)) segs.emplace_back(rho, x, HalfInt(1) - x);
        VirtualGRep out = Rational(m - delta) * normalize_standard(segs, TemperedSum::single(minus_two));
        TemperedLabel reduced = must_be_nonzero(g, remove_copies(p, rho, a, m - delta));
        VirtualGRep inner = jac_tempered(reduced, rho, x);
        for (int j = 0; j < (m - delta) / 2; ++j) inner = induct_segment(steinberg(rho, a), inner);
        out += inner;
        return out;
    }

    if (x == HalfInt(0)) {
        if (m == 1) return {};
        return from_tempered(must_be_nonzero(g, remove_copies(p, rho, a, 2)));
    }

    if (m == 1) {
        SignedParam q = remove_copies(p, rho, a, 1);
        if (a > 2) q.push_back(SignedSummand{Summand{rho, a - 2}, s});
        auto u = make_tempered(g, std::move(q));
        return u ? from_tempered(*u) : VirtualGRep{};
    }

    // m == 2
    const SignedParam p0 = remove_copies(p, rho, a, 2);
    TemperedLabel core0 = must_be_nonzero(g, p0);
    VirtualGRep out = normalize_standard({Segment(rho, x, HalfInt(1) - x)}, TemperedSum::single(core0));
    for (int eps : {1, -1}) {
        SignedParam q = p0;
        q.push_back(SignedSummand{Summand{rho, a}, eps * s});
        if (a > 2) q.push_back(SignedSummand{Summand{rho, a - 2}, eps * s});
        if (auto u = make_tempered(g, std::move(q))) out += from_tempered(*u, Rational(eps));
    }
    return out;
}

}  // namespace

VirtualGRep jac_tempered(const TemperedLabel& t, const RhoKey& rho, HalfInt x) {
    JacKey key(t, rho, x);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    VirtualGRep v = jac_tempered_uncached(t, rho, x);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), v);
    return v;
}

void clear_jacquet_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.clear();
}

VirtualGRep jac_rho_x(const StandardLabel& lbl, const RhoKey& rho, HalfInt x) {
    if (lbl.gl.empty()) return jac_tempered(lbl.core, rho, x);
    const TemperedSum core = TemperedSum::single(lbl.core);
    const auto& segs = lbl.gl;
    VirtualGRep out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& seg = segs[i];
        auto rest = [&]() {
            std::vector<Segment> r;
            r.reserve(segs.size());
            for (std::size_t j = 0; j < segs.size(); ++j) {
                if (j != i) r.push_back(segs[j]);
            }
            return r;
        };
        // Left factor is the head of the segment.
        if (seg.rho == rho && seg.x == x) {
            auto r = rest();
            if (seg.length() > 1) r.emplace_back(seg.rho, seg.x - HalfInt(1), seg.y);
            out += normalize_standard(std::move(r), core);
        }
        // Left factor is the contragredient of the tail.
        if (seg.rho.dual() == rho && -seg.y == x) {
            auto r = rest();
            if (seg.length() > 1) r.emplace_back(seg.rho, seg.x, seg.y + HalfInt(1));
            out += normalize_standard(std::move(r), core);
        }
    }
    out += induct(GLLabel(segs), jac_tempered(lbl.core, rho, x));
    return out;
}

VirtualGRep jac_rho_x(const VirtualGRep& v, const RhoKey& rho, HalfInt x) {
    VirtualGRep out;
    for (const auto& [lbl, c] : v) out.add_scaled(jac_rho_x(lbl, rho, x), c);
    return out;
}

VirtualGRep jac_vector(const VirtualGRep& v, const RhoKey& rho, const std::vector<HalfInt>& xs) {
    VirtualGRep out = v;
    for (HalfInt x : xs) {
        if (out.empty()) break;
        out = jac_rho_x(out, rho, x);
    }
    return out;
}

}  // namespace jacquet
