#pragma once

#include <string>

#include <json.hpp>

#include "jacquet/lfunctions.hpp"
#include "jacquet/rep_lattice.hpp"

namespace jacquet {

enum class Format { Text, Json, Latex };

Format parse_format(const std::string& s);

// "|·|^{1/2}St_3" for the trivial character of GL_1, "⟨rho;x,...,y⟩" otherwise.
std::string render_segment(const Segment& seg, Format f = Format::Text);
std::string render_gl(const GLLabel& lbl, Format f = Format::Text);
// pi+(2,4,4), pi-(4,4), pi[-,+,-](2,4,6), 1_SO1. The sign of a class with forced sign
// (the only class of odd multiplicity) is left out of the name.
std::string render_tempered(const TemperedLabel& t, Format f = Format::Text);
std::string render_standard(const StandardLabel& lbl, Format f = Format::Text);
std::string render_coefficient(const Rational& c, Format f = Format::Text);
std::string render_sum(const VirtualGRep& v, Format f = Format::Text);
std::string render_gl_sum(const GLSum& v, Format f = Format::Text);
// One line per GL label, "GL ⊗ (virtual sum)", grouped under "degree k:" headers
// unless headers is false.
std::string render_birep(const VirtualBiRep& v, Format f = Format::Text, bool headers = true);
// zeta(s-1)·zeta(s)^3·...
std::string render_zeta(const ZetaExponentList& z, Format f = Format::Text);

nlohmann::json to_json(const Segment& seg);
nlohmann::json to_json(const TemperedLabel& t);
nlohmann::json to_json(const StandardLabel& lbl);
nlohmann::json to_json(const VirtualGRep& v);
nlohmann::json to_json(const VirtualBiRep& v);
nlohmann::json to_json(const ZetaExponentList& z);

}  // namespace jacquet
