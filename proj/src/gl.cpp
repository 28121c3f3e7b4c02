#include <algorithm>
#include <map>
#include <stdexcept>

#include "jacquet/gl.hpp"

namespace jacquet {

RhoKey RhoKey::make(std::string id, int dim, Duality duality, std::string dual_id) {
    if (id.empty()) throw std::invalid_argument("rho id must be nonempty");
    if (dim < 1) throw std::invalid_argument("rho '" + id + "' must have dim >= 1");
    RhoKey r;
    r.id = std::move(id);
    r.dim = dim;
    r.duality = duality;
    if (duality != Duality::NotSelfDual) {
        if (!dual_id.empty() && dual_id != r.id) {
            throw std::invalid_argument("self-dual rho '" + r.id + "' cannot have a distinct dual");
        }
        r.dual_id = r.id;
    } else {
        if (dual_id.empty() || dual_id == r.id) {
            throw std::invalid_argument("non-self-dual rho '" + r.id + "' needs a distinct dual id");
        }
        r.dual_id = std::move(dual_id);
    }
    return r;
}

RhoKey RhoKey::dual() const {
    if (self_dual()) return *this;
    RhoKey r = *this;
    std::swap(r.id, r.dual_id);
    return r;
}

std::string to_string(Duality d) {
    switch (d) {
        case Duality::Orthogonal: return "orthogonal";
        case Duality::Symplectic: return "symplectic";
        case Duality::NotSelfDual: return "none";
    }
    return "none";
}

Duality parse_duality(const std::string& s) {
    if (s == "orthogonal" || s == "O") return Duality::Orthogonal;
    if (s == "symplectic" || s == "Sp") return Duality::Symplectic;
    if (s == "none" || s == "not_self_dual") return Duality::NotSelfDual;
    throw std::invalid_argument("unknown self_dual type '" + s + "'");
}

// ---- Segment ----

Segment::Segment(RhoKey r, HalfInt x_, HalfInt y_) : rho(std::move(r)), x(x_), y(y_) {
    if (x < y || !(x - y).is_integer()) {
        throw std::invalid_argument("invalid segment [" + x.str() + "," + y.str() + "]");
    }
}

Segment Segment::dual() const { return Segment(rho.dual(), -y, -x); }

std::string Segment::str() const { return rho.id + ":[" + x.str() + "," + y.str() + "]"; }

Segment steinberg(const RhoKey& rho, int a) {
    if (a < 1) throw std::invalid_argument("St(rho, a) needs a >= 1");
    HalfInt h = HalfInt::from_twice(a - 1);
    return Segment(rho, h, -h);
}

// ---- GLLabel ----

GLLabel::GLLabel(std::vector<Segment> segs) : segs_(std::move(segs)) { std::sort(segs_.begin(), segs_.end()); }

int GLLabel::size() const {
    int n = 0;
    for (const auto& s : segs_) n += s.length();
    return n;
}

int GLLabel::size(const RhoKey& rho) const {
    int n = 0;
    for (const auto& s : segs_) {
        if (s.rho == rho) n += s.length();
    }
    return n;
}

int GLLabel::gl_dim() const {
    int n = 0;
    for (const auto& s : segs_) n += s.rho.dim * s.length();
    return n;
}

std::vector<HalfInt> GLLabel::exponents(const RhoKey& rho) const {
    std::vector<HalfInt> out;
    for (const auto& s : segs_) {
        if (s.rho != rho) continue;
        for (HalfInt e = s.x; e >= s.y; e -= HalfInt(1)) out.push_back(e);
    }
    return out;
}

GLLabel GLLabel::dual() const {
    std::vector<Segment> d;
    d.reserve(segs_.size());
    for (const auto& s : segs_) d.push_back(s.dual());
    return GLLabel(std::move(d));
}

std::string GLLabel::str() const {
    if (segs_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < segs_.size(); ++i) {
        if (i) out += ",";
        out += segs_[i].str();
    }
    return out;
}

GLLabel operator*(const GLLabel& a, const GLLabel& b) {
    std::vector<Segment> s;
    s.reserve(a.segs_.size() + b.segs_.size());
    std::merge(a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end(), std::back_inserter(s));
    GLLabel out;
    out.segs_ = std::move(s);
    return out;
}

GLLabel normalize_multisegment(std::vector<Segment> segs) { return GLLabel(std::move(segs)); }

// ---- Jacquet on GL ----

GLSum gl_jacquet_delta(const GLLabel& lbl, const RhoKey& rho, HalfInt x) {
    GLSum out;
    const auto& segs = lbl.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].rho != rho || segs[i].x != x) continue;
        std::vector<Segment> rest;
        rest.reserve(segs.size());
        for (std::size_t j = 0; j < segs.size(); ++j) {
            if (j != i) rest.push_back(segs[j]);
        }
        if (segs[i].x != segs[i].y) rest.emplace_back(rho, x - HalfInt(1), segs[i].y);
        out.add(GLLabel(std::move(rest)), Rational(1));
    }
    return out;
}

GLSum gl_jacquet_delta(const GLSum& v, const RhoKey& rho, HalfInt x) {
    GLSum out;
    for (const auto& [lbl, c] : v) out.add_scaled(gl_jacquet_delta(lbl, rho, x), c);
    return out;
}

namespace {

// Segments as (2x, 2y), sorted.
using TwiceSegs = std::vector<std::pair<std::int64_t, std::int64_t>>;

std::int64_t count_jac(const TwiceSegs& segs, const std::vector<std::int64_t>& ys, std::size_t i,
                       std::map<std::pair<std::size_t, TwiceSegs>, std::int64_t>& memo) {
    if (i == ys.size()) return segs.empty() ? 1 : 0;
    auto key = std::make_pair(i, segs);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (std::size_t j = 0; j < segs.size(); ++j) {
        if (segs[j].first != ys[i] || (j > 0 && segs[j] == segs[j - 1])) continue;
        std::int64_t mult = 0;
        for (std::size_t k = j; k < segs.size() && segs[k] == segs[j]; ++k) ++mult;
        TwiceSegs next = segs;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
        if (segs[j].first > segs[j].second) {
            next.emplace_back(segs[j].first - 2, segs[j].second);
            std::sort(next.begin(), next.end());
        }
        total += mult * count_jac(next, ys, i + 1, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::int64_t jac_dim(const std::vector<HalfInt>& ys, const GLLabel& lbl, const RhoKey& rho) {
    if (lbl.size() != static_cast<int>(ys.size())) return 0;
    TwiceSegs segs;
    std::vector<std::int64_t> content, wanted;
    for (const auto& s : lbl.segments()) {
        if (s.rho != rho) return 0;
        segs.emplace_back(s.x.twice(), s.y.twice());
        for (std::int64_t e = s.x.twice(); e >= s.y.twice(); e -= 2) content.push_back(e);
    }
    for (HalfInt y : ys) wanted.push_back(y.twice());
    std::vector<std::int64_t> sorted_wanted = wanted;
    std::sort(content.begin(), content.end());
    std::sort(sorted_wanted.begin(), sorted_wanted.end());
    if (content != sorted_wanted) return 0;
    std::sort(segs.begin(), segs.end());
    std::map<std::pair<std::size_t, TwiceSegs>, std::int64_t> memo;
    return count_jac(segs, wanted, 0, memo);
}

// ---- Hopf structure ----

GLTensorSum tensor_multiply(const GLTensorSum& a, const GLTensorSum& b) {
    GLTensorSum out;
    for (const auto& [p, c] : a) {
        for (const auto& [q, d] : b) out.add(GLPair(p.first * q.first, p.second * q.second), Rational(c * d));
    }
    return out;
}

namespace {

GLTensorSum mstar_segment(const Segment& seg) {
    GLTensorSum out;
    const int len = seg.length();
    for (int m = 0; m <= len; ++m) {
        std::vector<Segment> left, right;
        if (m > 0) left.emplace_back(seg.rho, seg.x, seg.x - HalfInt(m - 1));
        if (m < len) right.emplace_back(seg.rho, seg.x - HalfInt(m), seg.y);
        out.add(GLPair(GLLabel(std::move(left)), GLLabel(std::move(right))), Rational(1));
    }
    return out;
}

}  // namespace

GLTensorSum mstar_gl(const GLLabel& lbl) {
    GLTensorSum out = GLTensorSum::single(GLPair());
    for (const auto& seg : lbl.segments()) out = tensor_multiply(out, mstar_segment(seg));
    return out;
}

GLTensorSum big_mstar(const GLLabel& lbl) {
    GLTensorSum out;
    for (const auto& [ab, c] : mstar_gl(lbl)) {
        // s swaps to b (x) a; then b^vee (x) m*(a); then multiply the first two factors.
        GLLabel bd = ab.second.dual();
        for (const auto& [cd, e] : mstar_gl(ab.first)) out.add(GLPair(bd * cd.first, cd.second), Rational(c * e));
    }
    return out;
}

GLTensorSum big_mstar_segment(const Segment& seg) {
    GLTensorSum out;
    const int len = seg.length();
    const RhoKey rd = seg.rho.dual();
    for (int k = 0; k <= len; ++k) {
        for (int l = 0; k + l <= len; ++l) {
            std::vector<Segment> left, right;
            if (k > 0) left.emplace_back(rd, -seg.y, -seg.y - HalfInt(k - 1));
            if (l > 0) left.emplace_back(seg.rho, seg.x, seg.x - HalfInt(l - 1));
            if (k + l < len) right.emplace_back(seg.rho, seg.x - HalfInt(l), seg.y + HalfInt(k));
            out.add(GLPair(GLLabel(std::move(left)), GLLabel(std::move(right))), Rational(1));
        }
    }
    return out;
}

}  // namespace jacquet
