#include <algorithm>

#include "jacquet/jacquet.hpp"
#include "jacquet/lfunctions.hpp"

namespace jacquet {

namespace {

struct Constituent {
    RhoKey rho;
    int a;
    HalfInt t;
};

std::vector<Constituent> expand(const TwistedParam& p) {
    std::vector<Constituent> out;
    for (const auto& e : p.twisted) {
        out.push_back({e.rho, e.a, e.s});
        out.push_back({e.rho.dual(), e.a, -e.s});
    }
    for (const auto& s : p.core.summands) out.push_back({s.rho, s.a, HalfInt(0)});
    return out;
}

// S_a (x) S_b = S_{|a-b|+1} + ... + S_{a+b-1}
std::vector<int> clebsch_gordan(int a, int b) {
    std::vector<int> out;
    for (int c = std::abs(a - b) + 1; c <= a + b - 1; c += 2) out.push_back(c);
    return out;
}

// Sym^2 S_a = S_{2a-1} + S_{2a-5} + ...
std::vector<int> sym2(int a) {
    std::vector<int> out;
    for (int c = 2 * a - 1; c >= 1; c -= 4) out.push_back(c);
    return out;
}

// Wedge^2 S_a = S_{2a-3} + S_{2a-7} + ...
std::vector<int> wedge2(int a) {
    std::vector<int> out;
    for (int c = 2 * a - 3; c >= 1; c -= 4) out.push_back(c);
    return out;
}

}  // namespace

int TwistedParam::dim() const {
    int n = core.dim();
    for (const auto& e : twisted) n += 2 * e.rho.dim * e.a;
    return n;
}

TwistedParam twisted_param_of(const StandardLabel& lbl) {
    TwistedParam p;
    p.core = lbl.core.param;
    for (const auto& seg : lbl.gl) p.twisted.push_back({seg.rho, seg.length(), seg.center()});
    return p;
}

HalfInt AdjointConstituent::exponent() const { return t + HalfInt::from_twice(b - 1); }

std::vector<AdjointConstituent> adjoint_constituents(const TwistedParam& p) {
    const auto v = expand(p);
    const bool symmetric = p.group() == GroupType::SOodd;
    std::vector<AdjointConstituent> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        // Diagonal piece: Sym^2 or Wedge^2 of rho (x) S_a.
        std::vector<int> bs;
        if (v[i].rho.duality == Duality::Orthogonal) {
            bs = symmetric ? sym2(v[i].a) : wedge2(v[i].a);
        } else if (v[i].rho.duality == Duality::Symplectic) {
            bs = symmetric ? wedge2(v[i].a) : sym2(v[i].a);
        }
        for (int b : bs) out.push_back({symmetric ? "sym2" : "wedge2", b, v[i].t + v[i].t});
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[j].rho.id != v[i].rho.dual_id) continue;
            for (int b : clebsch_gordan(v[i].a, v[j].a)) out.push_back({"cross", b, v[i].t + v[j].t});
        }
    }
    return out;
}

ZetaExponentList zeta_exponents(const TwistedParam& p) {
    ZetaExponentList z;
    long total = 0;
    for (const auto& c : adjoint_constituents(p)) {
        ++z.exponents[c.exponent()];
        total += c.b;
    }
    const long n = p.dim();
    const long ad = p.group() == GroupType::SOodd ? n * (n + 1) / 2 : n * (n - 1) / 2;
    z.complete = total == ad;
    return z;
}

bool is_generic(const TwistedParam& p) {
    for (const auto& c : adjoint_constituents(p)) {
        if (c.exponent() == HalfInt(-1)) return false;
    }
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Irreducible: return "IRREDUCIBLE";
        case Verdict::Reducible: return "REDUCIBLE";
        case Verdict::Undetermined: return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

namespace {

// pi(phi + S_{2x-1} + S_{2x+1}, eta'_u) for u = +1, -1 (S_0 omitted), nonzero ones only.
std::vector<TemperedLabel> socle_labels(const RhoKey& rho, HalfInt x, const TemperedLabel& core) {
    const int a = static_cast<int>(x.twice() + 1);
    std::vector<TemperedLabel> out;
    for (int u : {1, -1}) {
        SignedParam q = to_signed(core);
        q.push_back(SignedSummand{Summand{rho, a}, u});
        if (a > 2) q.push_back(SignedSummand{Summand{rho, a - 2}, u});
        if (auto t = make_tempered(core.group(), std::move(q))) out.push_back(std::move(*t));
    }
    return out;
}

bool is_discrete(const GoodParityParam& phi) {
    for (std::size_t i = 1; i < phi.summands.size(); ++i) {
        if (phi.summands[i] == phi.summands[i - 1]) return false;
    }
    return true;
}

}  // namespace

IrreducibilityResult std_irreducible(const RhoKey& rho, HalfInt x, const TemperedLabel& core) {
    if (x <= HalfInt(0)) throw std::invalid_argument("std_irreducible needs x > 0");
    TwistedParam p;
    p.core = core.param;
    p.twisted.push_back({rho, static_cast<int>(x.twice()), kHalf});
    if (is_generic(p)) return {Verdict::Irreducible, "generic parameter", 1};

    const int a = static_cast<int>(x.twice() + 1);
    const int mult = core.param.multiplicity(rho, a);
    if (mult > 0 && jac_tempered(core, rho, x).empty()) {
        return {Verdict::Irreducible, "Jac vanishes, S_" + std::to_string(a) + " ⊂ phi", 1};
    }
    if (mult == 0 && good_parity(core.group(), rho, a)) {
        const auto socle = socle_labels(rho, x, core);
        int length = 0;
        if (x > kHalf || is_discrete(core.param)) length = 1 + static_cast<int>(socle.size());
        return {Verdict::Reducible, "tempered subrepresentation in the packet of phi + S_" + std::to_string(a - 2) +
                                        " + S_" + std::to_string(a),
                length};
    }
    if (std::all_of(core.eta.signs.begin(), core.eta.signs.end(), [](int s) { return s == 1; })) {
        return {Verdict::Reducible, "non-generic parameter with trivial character", 0};
    }
    return {Verdict::Undetermined, "no criterion applies", 0};
}

std::vector<VirtualGRep> small_standard_composition(const RhoKey& rho, HalfInt x, const TemperedLabel& core) {
    const int a = static_cast<int>(x.twice() + 1);
    if (x <= kHalf) throw HypothesisViolation("segment case needs x > 1/2");
    if (!good_parity(core.group(), rho, a)) throw HypothesisViolation("rho (x) S_{2x+1} is not of good parity");
    if (core.param.multiplicity(rho, a) != 0) throw HypothesisViolation("rho (x) S_{2x+1} already occurs in phi");

    const VirtualGRep whole = normalize_standard({Segment(rho, x, HalfInt(1) - x)}, TemperedSum::single(core));
    std::vector<VirtualGRep> factors;
    VirtualGRep quotient = whole;
    for (const auto& t : socle_labels(rho, x, core)) {
        factors.push_back(from_tempered(t));
        quotient -= factors.back();
    }
    factors.push_back(std::move(quotient));
    return factors;
}

std::vector<VirtualGRep> character_standard_composition(const RhoKey& rho, HalfInt x, const TemperedLabel& core) {
    const int a = static_cast<int>(x.twice() + 1);
    if (x <= HalfInt(0)) throw HypothesisViolation("character case needs x > 0");
    if (!is_discrete(core.param)) throw HypothesisViolation("phi must be discrete");
    if (!good_parity(core.group(), rho, a)) throw HypothesisViolation("rho (x) S_{2x+1} is not of good parity");
    if (core.param.multiplicity(rho, a) != 0) throw HypothesisViolation("rho (x) S_{2x+1} already occurs in phi");

    SignedParam q = to_signed(core);
    if (a > 2) {
        if (core.param.multiplicity(rho, a - 2) == 0) throw HypothesisViolation("rho (x) S_{2x-1} must occur in phi");
        const int s = core.sign_of(rho, a - 2);
        q = remove_copies(std::move(q), rho, a - 2, 1);
        q.push_back(SignedSummand{Summand{rho, a}, s});
    } else {
        q.push_back(SignedSummand{Summand{rho, a}, 1});
    }
    auto sub = make_tempered(core.group(), std::move(q));
    if (!sub) throw std::logic_error("transported character vanished");

    const VirtualGRep whole = normalize_standard({Segment(rho, x, x)}, TemperedSum::single(core));
    std::vector<VirtualGRep> factors{from_tempered(*sub)};
    factors.push_back(whole - factors.front());
    return factors;
}

}  // namespace jacquet
