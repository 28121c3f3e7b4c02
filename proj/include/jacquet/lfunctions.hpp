#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacquet/rep_lattice.hpp"

namespace jacquet {

// rho (x) S_a |.|^s together with its contragredient.
struct TwistedEntry {
    RhoKey rho;
    int a = 1;
    HalfInt s;
};

// phi = sum_i (phi_i |.|^{s_i} + dual) + phi_0. Entries with s = 0 are tempered satellites
// (bad-parity or non-self-dual pieces) and are also doubled.
struct TwistedParam {
    std::vector<TwistedEntry> twisted;
    GoodParityParam core;

    GroupType group() const { return core.group; }
    int dim() const;
};

TwistedParam twisted_param_of(const StandardLabel& lbl);

// A constituent 1 (x) S_b |.|^t of Ad o phi with trivial Weil-group part.
struct AdjointConstituent {
    std::string source;  // "cross", "sym2" or "wedge2"
    int b = 1;
    HalfInt t;

    HalfInt exponent() const;  // t + (b - 1)/2, so L(s, S_b|.|^t) = zeta(s + exponent)
    friend bool operator==(const AdjointConstituent&, const AdjointConstituent&) = default;
};

std::vector<AdjointConstituent> adjoint_constituents(const TwistedParam& p);

struct ZetaExponentList {
    std::map<HalfInt, int> exponents;
    // True when the listed constituents exhaust Ad o phi, so the exponents give the whole
    // adjoint L-function. Otherwise only the pole-relevant part is listed.
    bool complete = false;
};

ZetaExponentList zeta_exponents(const TwistedParam& p);
// L(s, phi, Ad) regular at s = 1, i.e. no exponent equal to -1.
bool is_generic(const TwistedParam& p);

enum class Verdict { Irreducible, Reducible, Undetermined };
std::string to_string(Verdict v);

struct IrreducibilityResult {
    Verdict verdict = Verdict::Undetermined;
    std::string reason;
    int length = 0;  // composition length when known, else 0
};

// Irreducibility of <rho; x, ..., -(x-1)> |x core for x > 0.
IrreducibilityResult std_irreducible(const RhoKey& rho, HalfInt x, const TemperedLabel& core);

class HypothesisViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Composition factors of <rho; x, ..., -(x-1)> |x core when x > 1/2 and
// rho (x) S_{2x+1} is of good parity but not in the core's parameter:
// the nonzero socle labels pi(phi', eta'_+-) first, then the Langlands quotient as a
// virtual combination of standard labels.
std::vector<VirtualGRep> small_standard_composition(const RhoKey& rho, HalfInt x, const TemperedLabel& core);
// Same for rho|.|^x |x pi(phi, eta) with phi discrete, x > 0, rho (x) S_{2x-1} in phi
// (vacuous when x = 1/2) and rho (x) S_{2x+1} not in phi.
std::vector<VirtualGRep> character_standard_composition(const RhoKey& rho, HalfInt x, const TemperedLabel& core);

}  // namespace jacquet
