#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacquet/lfunctions.hpp"
#include "jacquet/rep_lattice.hpp"

namespace jacquet {

// Schema violation in an input document; pointer() is a JSON pointer to the offending field.
class InputError : public std::invalid_argument {
public:
    InputError(const std::string& pointer, const std::string& what)
        : std::invalid_argument(pointer + ": " + what), pointer_(pointer) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// {"group": "SOodd"|"Sp",
//  "rhos": [{"id": "1", "dim": 1, "self_dual": "orthogonal"|"symplectic"|"none", "dual": "..."}],
//  "phi": [["1", 2], ["1", 4], ["1", 4]],
//  "eta": [1, 1, -1],                      optional, aligned to the sorted summands
//  "segments": ["1:[3/2,-1/2]", ...],      optional GL part of a standard label
//  "twisted": [["1", 5, "1/2"], ...]}      optional, for L-function queries
// "rhos" defaults to the trivial character "1". Unknown keys are ignored.
struct InputDocument {
    GroupType group = GroupType::SOodd;
    RhoTable rhos;
    GoodParityParam phi;
    std::optional<EnhancedCharacter> eta;
    std::vector<Segment> segments;
    std::vector<TwistedEntry> twisted;
    // Non-fatal findings, e.g. an Sp parameter of even total dimension.
    std::vector<std::string> warnings;
};

InputDocument parse_input(const nlohmann::json& j);
InputDocument parse_input_text(const std::string& text);
InputDocument read_input_file(const std::string& path);

// "1:[3/2,-1/2]"
Segment parse_segment(const std::string& text, const RhoTable& rhos);
// "3/2,1/2"; the empty string gives the empty list.
std::vector<HalfInt> parse_half_int_list(const std::string& text);
// "1,1,-1" or "+,+,-"
EnhancedCharacter parse_eta(const std::string& text);

}  // namespace jacquet
