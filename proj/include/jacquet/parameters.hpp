#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jacquet/gl.hpp"

namespace jacquet {

enum class GroupType { SOodd, Sp };

std::string to_string(GroupType g);
GroupType parse_group(const std::string& s);

class BadParity : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownRho : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// rho (x) S_a is self-dual of the type dual to the group.
bool good_parity(GroupType g, const RhoKey& rho, int a);

struct Summand {
    RhoKey rho;
    int a = 1;

    friend bool operator==(const Summand&, const Summand&) = default;
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

// phi = sum of rho (x) S_a of good parity. The summand list is kept sorted by (rho, a);
// the position in that list is the index of the copy.
struct GoodParityParam {
    GroupType group = GroupType::SOodd;
    std::vector<Summand> summands;

    int dim() const;
    // n for SO(2n+1) or Sp(2n).
    int rank() const;
    int multiplicity(const RhoKey& rho, int a) const;
    // Sorted a's of the rho-part.
    std::vector<int> rho_part(const RhoKey& rho) const;
    // Distinct rhos, sorted.
    std::vector<RhoKey> rhos() const;

    friend bool operator==(const GoodParityParam&, const GoodParityParam&) = default;
    friend auto operator<=>(const GoodParityParam&, const GoodParityParam&) = default;
};

// One sign per indexed summand.
struct EnhancedCharacter {
    std::vector<int> signs;

    friend bool operator==(const EnhancedCharacter&, const EnhancedCharacter&) = default;
    friend auto operator<=>(const EnhancedCharacter&, const EnhancedCharacter&) = default;
};

class RhoTable {
public:
    void add(const RhoKey& rho);
    const RhoKey& at(const std::string& id) const;
    bool contains(const std::string& id) const { return rhos_.count(id) != 0; }
    const std::map<std::string, RhoKey>& all() const { return rhos_; }

private:
    std::map<std::string, RhoKey> rhos_;
};

GoodParityParam build_parameter(GroupType g, std::vector<Summand> summands);
GoodParityParam build_parameter(GroupType g, const RhoTable& table,
                                const std::vector<std::pair<std::string, int>>& raw);

bool descends(const GoodParityParam& phi, const EnhancedCharacter& eta);
int central_value(const GoodParityParam& phi, const EnhancedCharacter& eta);
bool is_nonzero(const GoodParityParam& phi, const EnhancedCharacter& eta);

// The characters eta with pi(phi, eta) != 0, ordered lexicographically with + before -.
std::vector<EnhancedCharacter> list_packet(const GoodParityParam& phi);

// pi(phi, eta) with pi(phi, eta) != 0. Summands and signs are sorted together, so a
// label has a unique representation.
struct TemperedLabel {
    GoodParityParam param;
    EnhancedCharacter eta;

    GroupType group() const { return param.group; }
    // Sign of the first copy of rho (x) S_a; 0 when absent.
    int sign_of(const RhoKey& rho, int a) const;

    friend bool operator==(const TemperedLabel&, const TemperedLabel&) = default;
    friend auto operator<=>(const TemperedLabel&, const TemperedLabel&) = default;
};

// A parameter together with a not necessarily nonzero character, used during parameter surgery.
struct SignedSummand {
    Summand s;
    int sign = 1;
    friend auto operator<=>(const SignedSummand&, const SignedSummand&) = default;
};
using SignedParam = std::vector<SignedSummand>;

SignedParam to_signed(const TemperedLabel& t);
// Canonical label, or nullopt when the character is zero.
std::optional<TemperedLabel> make_tempered(GroupType g, SignedParam entries);
std::optional<TemperedLabel> make_tempered(const GoodParityParam& phi, const EnhancedCharacter& eta);
// Unit of the group: empty parameter.
TemperedLabel empty_tempered(GroupType g);
// Removes `count` copies of rho (x) S_a; throws if not enough copies.
SignedParam remove_copies(SignedParam p, const RhoKey& rho, int a, int count);

// Constituents of St(rho, a) |x pi(phi0, eta0): the labels of phi0 + 2(rho (x) S_a) whose
// character restricts to eta0.
std::vector<TemperedLabel> decompose_tempered_induction(const RhoKey& rho, int a, const TemperedLabel& core);

}  // namespace jacquet
