#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jacquet/render.hpp"

namespace jacquet {

namespace {

bool is_trivial_character(const RhoKey& rho) { return rho.id == "1" && rho.dim == 1; }

std::string latex_half(HalfInt h) {
    if (h.is_integer()) return h.str();
    const std::int64_t t = h.twice();
    return (t < 0 ? "-" : "") + std::string("\\frac{") + std::to_string(t < 0 ? -t : t) + "}{2}";
}

std::string latex_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    const bool neg = sgn(q) < 0;
    return (neg ? "-" : "") + std::string("\\frac{") + mpz_class(abs(q.get_num())).get_str() + "}{" +
           q.get_den().get_str() + "}";
}

std::string group_unit(GroupType g, Format f) {
    if (f == Format::Latex) return g == GroupType::SOodd ? "\\mathbb{1}_{\\mathrm{SO}_1(F)}" : "\\mathbb{1}_{\\mathrm{Sp}_0(F)}";
    return g == GroupType::SOodd ? "1_SO1" : "1_Sp0";
}

// Joins c_i * X_i as "X - 2 Y + 1/2 Z".
template <class Range, class RenderTerm>
std::string join_terms(const Range& terms, Format f, RenderTerm render_term) {
    std::string out;
    bool first = true;
    for (const auto& [label, c] : terms) {
        const bool neg = sgn(c) < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += render_coefficient(mag, f) + (f == Format::Latex ? " \\cdot " : " ");
        out += render_term(label);
        first = false;
    }
    return first ? "0" : out;
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    throw std::invalid_argument("unknown format '" + s + "' (expected text, json or latex)");
}

std::string render_segment(const Segment& seg, Format f) {
    const HalfInt c = seg.center();
    const int len = seg.length();
    if (is_trivial_character(seg.rho)) {
        std::string out;
        if (f == Format::Latex) {
            if (c != HalfInt(0)) out += "|\\cdot|^{" + latex_half(c) + "}";
            if (len > 1 || c == HalfInt(0)) out += "\\mathrm{St}_{" + std::to_string(len) + "}";
        } else {
            if (c != HalfInt(0)) out += "|·|^{" + c.str() + "}";
            if (len > 1 || c == HalfInt(0)) out += "St_" + std::to_string(len);
        }
        return out;
    }
    if (f == Format::Latex) {
        std::string body = latex_half(seg.x);
        if (len == 2) body += ", " + latex_half(seg.y);
        if (len > 2) body += ", \\dots, " + latex_half(seg.y);
        return "\\langle \\rho_{" + seg.rho.id + "}; " + body + " \\rangle";
    }
    std::string body;
    for (HalfInt e = seg.x; e >= seg.y; e -= HalfInt(1)) {
        if (!body.empty()) body += ",";
        body += e.str();
    }
    return "⟨" + seg.rho.id + ";" + body + "⟩";
}

std::string render_gl(const GLLabel& lbl, Format f) {
    if (lbl.empty()) return f == Format::Latex ? "\\mathbb{1}_{\\mathrm{GL}_0(F)}" : "1";
    std::string out;
    for (const auto& s : lbl.segments()) {
        if (!out.empty()) out += f == Format::Latex ? " \\times " : " × ";
        out += render_segment(s, f);
    }
    return out;
}

std::string render_tempered(const TemperedLabel& t, Format f) {
    const auto& sums = t.param.summands;
    if (sums.empty()) return group_unit(t.group(), f);

    // Classes of isomorphic summands with their sign and multiplicity.
    std::vector<std::pair<Summand, int>> classes;
    std::vector<int> mult;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        if (i == 0 || sums[i] != sums[i - 1]) {
            classes.emplace_back(sums[i], t.eta.signs[i]);
            mult.push_back(0);
        }
        ++mult.back();
    }
    int odd = 0;
    std::size_t forced = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (mult[i] % 2 == 1) {
            ++odd;
            forced = i;
        }
    }
    if (odd != 1) forced = classes.size();
    std::set<int> shown;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i != forced) shown.insert(classes[i].second);
    }

    std::string sub;
    if (shown.size() <= 1) {
        const int s = shown.empty() ? 1 : *shown.begin();
        sub = s > 0 ? "+" : "-";
    } else {
        for (const auto& [summand, s] : classes) {
            if (!sub.empty()) sub += ",";
            sub += s > 0 ? "+" : "-";
        }
        sub = f == Format::Latex ? "(" + sub + ")" : "[" + sub + "]";
    }

    const bool several_rhos = t.param.rhos().size() > 1;
    std::string args;
    for (const auto& s : sums) {
        if (!args.empty()) args += ",";
        if (several_rhos) args += (f == Format::Latex ? "\\rho_{" + s.rho.id + "}" : s.rho.id) + ":";
        args += std::to_string(s.a);
    }
    if (f == Format::Latex) return "\\pi_{" + sub + "}(" + args + ")";
    return "pi" + sub + "(" + args + ")";
}

std::string render_standard(const StandardLabel& lbl, Format f) {
    if (lbl.gl.empty()) return render_tempered(lbl.core, f);
    return render_gl(lbl.gl_label(), f) + (f == Format::Latex ? " \\rtimes " : " ⋊ ") + render_tempered(lbl.core, f);
}

std::string render_coefficient(const Rational& c, Format f) {
    return f == Format::Latex ? latex_rational(c) : to_string(c);
}

std::string render_sum(const VirtualGRep& v, Format f) {
    return join_terms(v, f, [f](const StandardLabel& l) { return render_standard(l, f); });
}

std::string render_gl_sum(const GLSum& v, Format f) {
    return join_terms(v, f, [f](const GLLabel& l) { return render_gl(l, f); });
}

std::string render_birep(const VirtualBiRep& v, Format f, bool headers) {
    std::map<int, std::map<GLLabel, VirtualGRep>> grouped;
    for (const auto& [bi, c] : v) grouped[degree(bi)][bi.first].add(bi.second, c);
    if (grouped.empty()) return "0\n";
    const std::string tensor = f == Format::Latex ? " \\otimes " : " ⊗ ";
    std::ostringstream out;
    for (const auto& [k, rows] : grouped) {
        if (headers) out << (f == Format::Latex ? "% degree " : "degree ") << k << ":\n";
        for (const auto& [gl, sum] : rows) {
            std::string rhs = render_sum(sum, f);
            const bool single = sum.size() == 1 && sum.begin()->second == 1;
            if (!single) rhs = f == Format::Latex ? "\\left(" + rhs + "\\right)" : "(" + rhs + ")";
            std::string left = render_gl(gl, f);
            if (gl.segments().size() > 1) left = f == Format::Latex ? "\\left(" + left + "\\right)" : "(" + left + ")";
            out << (headers ? "  " : "") << left << tensor << rhs << (f == Format::Latex ? " \\\\" : "") << "\n";
        }
    }
    return out.str();
}

std::string render_zeta(const ZetaExponentList& z, Format f) {
    if (z.exponents.empty()) return "1";
    std::string out;
    for (const auto& [e, n] : z.exponents) {
        if (!out.empty()) out += f == Format::Latex ? " \\cdot " : "·";
        std::string arg;
        if (e == HalfInt(0)) {
            arg = "s";
        } else if (e > HalfInt(0)) {
            arg = "s+" + (f == Format::Latex ? latex_half(e) : e.str());
        } else {
            arg = "s-" + (f == Format::Latex ? latex_half(-e) : (-e).str());
        }
        out += (f == Format::Latex ? "\\zeta_F(" : "zeta(") + arg + ")";
        if (n != 1) out += f == Format::Latex ? "^{" + std::to_string(n) + "}" : "^" + std::to_string(n);
    }
    return out;
}

nlohmann::json to_json(const Segment& seg) {
    return {{"rho", seg.rho.id}, {"x", seg.x.str()}, {"y", seg.y.str()}, {"text", seg.str()}};
}

nlohmann::json to_json(const TemperedLabel& t) {
    nlohmann::json rhos = nlohmann::json::array();
    for (const auto& rho : t.param.rhos()) {
        nlohmann::json r{{"id", rho.id}, {"dim", rho.dim}, {"self_dual", to_string(rho.duality)}};
        rhos.push_back(std::move(r));
    }
    nlohmann::json phi = nlohmann::json::array();
    for (const auto& s : t.param.summands) phi.push_back({s.rho.id, s.a});
    return {{"group", to_string(t.group())}, {"rhos", rhos}, {"phi", phi}, {"eta", t.eta.signs},
            {"name", render_tempered(t)}};
}

nlohmann::json to_json(const StandardLabel& lbl) {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : lbl.gl) segs.push_back(to_json(s));
    return {{"segments", segs}, {"core", to_json(lbl.core)}, {"text", render_standard(lbl)}};
}

nlohmann::json to_json(const VirtualGRep& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [lbl, c] : v) out.push_back({{"coeff", to_string(c)}, {"label", to_json(lbl)}});
    return out;
}

nlohmann::json to_json(const VirtualBiRep& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [bi, c] : v) {
        nlohmann::json gl = nlohmann::json::array();
        for (const auto& s : bi.first.segments()) gl.push_back(to_json(s));
        out.push_back({{"degree", degree(bi)},
                       {"gl", gl},
                       {"gl_text", render_gl(bi.first)},
                       {"coeff", to_string(c)},
                       {"label", to_json(bi.second)}});
    }
    return out;
}

nlohmann::json to_json(const ZetaExponentList& z) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [e, n] : z.exponents) out[e.str()] = n;
    return out;
}

}  // namespace jacquet
