#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "jacquet/parameters.hpp"

namespace jacquet {

std::string to_string(GroupType g) { return g == GroupType::SOodd ? "SOodd" : "Sp"; }

GroupType parse_group(const std::string& s) {
    if (s == "SOodd" || s == "SO") return GroupType::SOodd;
    if (s == "Sp") return GroupType::Sp;
    throw std::invalid_argument("unknown group '" + s + "' (expected SOodd or Sp)");
}

bool good_parity(GroupType g, const RhoKey& rho, int a) {
    if (a < 1) return false;
    const bool even = a % 2 == 0;
    switch (rho.duality) {
        case Duality::Orthogonal: return g == GroupType::SOodd ? even : !even;
        case Duality::Symplectic: return g == GroupType::SOodd ? !even : even;
        case Duality::NotSelfDual: return false;
    }
    return false;
}

// ---- GoodParityParam ----

int GoodParityParam::dim() const {
    int n = 0;
    for (const auto& s : summands) n += s.rho.dim * s.a;
    return n;
}

int GoodParityParam::rank() const { return dim() / 2; }

int GoodParityParam::multiplicity(const RhoKey& rho, int a) const {
    return static_cast<int>(std::count(summands.begin(), summands.end(), Summand{rho, a}));
}

std::vector<int> GoodParityParam::rho_part(const RhoKey& rho) const {
    std::vector<int> as;
    for (const auto& s : summands) {
        if (s.rho == rho) as.push_back(s.a);
    }
    return as;
}

std::vector<RhoKey> GoodParityParam::rhos() const {
    std::vector<RhoKey> out;
    for (const auto& s : summands) {
        if (out.empty() || out.back() != s.rho) out.push_back(s.rho);
    }
    return out;
}

void RhoTable::add(const RhoKey& rho) {
    auto [it, inserted] = rhos_.emplace(rho.id, rho);
    if (!inserted && it->second != rho) throw std::invalid_argument("rho id '" + rho.id + "' declared twice");
}

const RhoKey& RhoTable::at(const std::string& id) const {
    auto it = rhos_.find(id);
    if (it == rhos_.end()) throw UnknownRho("unknown rho id '" + id + "'");
    return it->second;
}

GoodParityParam build_parameter(GroupType g, std::vector<Summand> summands) {
    for (const auto& s : summands) {
        if (!good_parity(g, s.rho, s.a)) {
            throw BadParity("summand (" + s.rho.id + ", " + std::to_string(s.a) + ") is not of good parity for " +
                            to_string(g));
        }
    }
    std::sort(summands.begin(), summands.end());
    return GoodParityParam{g, std::move(summands)};
}

GoodParityParam build_parameter(GroupType g, const RhoTable& table,
                                const std::vector<std::pair<std::string, int>>& raw) {
    std::vector<Summand> summands;
    summands.reserve(raw.size());
    for (const auto& [id, a] : raw) summands.push_back(Summand{table.at(id), a});
    return build_parameter(g, std::move(summands));
}

// ---- characters ----

bool descends(const GoodParityParam& phi, const EnhancedCharacter& eta) {
    if (eta.signs.size() != phi.summands.size()) throw std::invalid_argument("character length mismatch");
    for (std::size_t i = 0; i < phi.summands.size(); ++i) {
        for (std::size_t j = i + 1; j < phi.summands.size(); ++j) {
            if (phi.summands[i] == phi.summands[j] && eta.signs[i] != eta.signs[j]) return false;
        }
    }
    return true;
}

int central_value(const GoodParityParam& phi, const EnhancedCharacter& eta) {
    if (eta.signs.size() != phi.summands.size()) throw std::invalid_argument("character length mismatch");
    int v = 1;
    for (int s : eta.signs) {
        if (s != 1 && s != -1) throw std::invalid_argument("character values must be +1 or -1");
        v *= s;
    }
    return v;
}

bool is_nonzero(const GoodParityParam& phi, const EnhancedCharacter& eta) {
    return descends(phi, eta) && central_value(phi, eta) == 1;
}

std::vector<EnhancedCharacter> list_packet(const GoodParityParam& phi) {
    // Distinct classes in summand order.
    std::vector<Summand> classes;
    std::vector<std::size_t> class_of;
    for (const auto& s : phi.summands) {
        if (classes.empty() || classes.back() != s) classes.push_back(s);
        class_of.push_back(classes.size() - 1);
    }
    const std::size_t r = classes.size();
    if (r > 30) throw std::invalid_argument("too many distinct summands to enumerate");
    std::vector<EnhancedCharacter> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
        EnhancedCharacter eta;
        for (std::size_t i = 0; i < phi.summands.size(); ++i) {
            std::size_t c = class_of[i];
            bool minus = (bits >> (r - 1 - c)) & 1U;
            eta.signs.push_back(minus ? -1 : 1);
        }
        if (central_value(phi, eta) == 1) out.push_back(std::move(eta));
    }
    return out;
}

// ---- tempered labels ----

int TemperedLabel::sign_of(const RhoKey& rho, int a) const {
    for (std::size_t i = 0; i < param.summands.size(); ++i) {
        if (param.summands[i].rho == rho && param.summands[i].a == a) return eta.signs[i];
    }
    return 0;
}

SignedParam to_signed(const TemperedLabel& t) {
    SignedParam out;
    out.reserve(t.param.summands.size());
    for (std::size_t i = 0; i < t.param.summands.size(); ++i) {
        out.push_back(SignedSummand{t.param.summands[i], t.eta.signs[i]});
    }
    return out;
}

std::optional<TemperedLabel> make_tempered(GroupType g, SignedParam entries) {
    std::sort(entries.begin(), entries.end());
    TemperedLabel t;
    t.param.group = g;
    for (const auto& e : entries) {
        t.param.summands.push_back(e.s);
        t.eta.signs.push_back(e.sign);
    }
    if (!is_nonzero(t.param, t.eta)) return std::nullopt;
    return t;
}

std::optional<TemperedLabel> make_tempered(const GoodParityParam& phi, const EnhancedCharacter& eta) {
    if (eta.signs.size() != phi.summands.size()) throw std::invalid_argument("character length mismatch");
    SignedParam entries;
    for (std::size_t i = 0; i < phi.summands.size(); ++i) entries.push_back(SignedSummand{phi.summands[i], eta.signs[i]});
    return make_tempered(phi.group, std::move(entries));
}

TemperedLabel empty_tempered(GroupType g) {
    TemperedLabel t;
    t.param.group = g;
    return t;
}

SignedParam remove_copies(SignedParam p, const RhoKey& rho, int a, int count) {
    for (int k = 0; k < count; ++k) {
        auto it = std::find_if(p.begin(), p.end(), [&](const SignedSummand& e) { return e.s.rho == rho && e.s.a == a; });
        if (it == p.end()) throw std::logic_error("parameter has too few copies of the summand");
        p.erase(it);
    }
    return p;
}

std::vector<TemperedLabel> decompose_tempered_induction(const RhoKey& rho, int a, const TemperedLabel& core) {
    if (!good_parity(core.group(), rho, a)) throw BadParity("St(rho, a) is not of good parity");
    std::vector<TemperedLabel> out;
    const int existing = core.sign_of(rho, a);
    const std::vector<int> choices = existing != 0 ? std::vector<int>{existing} : std::vector<int>{1, -1};
    for (int s : choices) {
        SignedParam p = to_signed(core);
        p.push_back(SignedSummand{Summand{rho, a}, s});
        p.push_back(SignedSummand{Summand{rho, a}, s});
        if (auto t = make_tempered(core.group(), std::move(p))) out.push_back(std::move(*t));
    }
    return out;
}

}  // namespace jacquet
