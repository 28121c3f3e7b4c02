#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "jacquet/gl.hpp"
#include "jacquet/parameters.hpp"
#include "jacquet/rep_lattice.hpp"

// Small constructors for hand-written expected values.
namespace jacquet::testing {

inline HalfInt h(const char* text) { return HalfInt::parse(text); }

inline RhoKey one() { return RhoKey::trivial(); }
// A symplectic supercuspidal of GL_2, for odd a on the SO side.
inline RhoKey symp2() { return RhoKey::make("s", 2, Duality::Symplectic); }

// |.|^c St_len of the given rho.
inline Segment cs(HalfInt c, int len, const RhoKey& rho = one()) {
    const HalfInt half_len = HalfInt::from_twice(len - 1);
    return Segment(rho, c + half_len, c - half_len);
}
inline Segment cs(const char* c, int len, const RhoKey& rho = one()) { return cs(h(c), len, rho); }

inline GLLabel gl(std::initializer_list<Segment> segs) { return GLLabel(std::vector<Segment>(segs)); }
inline GLSum gls(std::initializer_list<Segment> segs) { return GLSum::single(gl(segs)); }

inline GLSum gl_product(const GLSum& a, const GLSum& b) {
    GLSum out;
    for (const auto& [x, c] : a) {
        for (const auto& [y, d] : b) out.add(x * y, Rational(c * d));
    }
    return out;
}

// pi(phi, eta) with signs listed in the sorted summand order.
inline TemperedLabel pi(GroupType g, std::vector<int> as, std::vector<int> signs, const RhoKey& rho = one()) {
    SignedParam p;
    for (std::size_t i = 0; i < as.size(); ++i) p.push_back(SignedSummand{Summand{rho, as[i]}, signs.at(i)});
    auto t = make_tempered(g, std::move(p));
    if (!t) throw std::invalid_argument("expected a nonzero label");
    return *t;
}

// Same as pi but returns 0 for a zero character.
inline VirtualGRep pi_or_zero(GroupType g, std::vector<int> as, std::vector<int> signs, const RhoKey& rho = one()) {
    SignedParam p;
    for (std::size_t i = 0; i < as.size(); ++i) p.push_back(SignedSummand{Summand{rho, as[i]}, signs.at(i)});
    auto t = make_tempered(g, std::move(p));
    return t ? from_tempered(*t) : VirtualGRep{};
}

inline VirtualGRep so(std::vector<int> as, std::vector<int> signs) {
    return pi_or_zero(GroupType::SOodd, std::move(as), std::move(signs));
}
inline VirtualGRep unit_so() { return from_tempered(empty_tempered(GroupType::SOodd)); }

// tau |x core, normalized.
inline VirtualGRep ind(std::initializer_list<Segment> segs, const VirtualGRep& core) {
    return induct(gl(segs), core);
}

inline VirtualBiRep tensor(const GLSum& left, const VirtualGRep& right) {
    VirtualBiRep out;
    for (const auto& [a, c] : left) {
        for (const auto& [b, d] : right) out.add(BiLabel(a, b), Rational(c * d));
    }
    return out;
}

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace jacquet::testing
