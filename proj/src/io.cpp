#include <fstream>
#include <sstream>

#include "jacquet/io.hpp"

namespace jacquet {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

const nlohmann::json& field(const nlohmann::json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw InputError(where + "/" + key, "missing required field");
    return j.at(key);
}

std::string get_string(const nlohmann::json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where, "expected a string");
    return j.get<std::string>();
}

int get_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where, "expected an integer");
    return j.get<int>();
}

HalfInt get_half_int(const nlohmann::json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return HalfInt(j.get<int>());
        if (j.is_string()) return HalfInt::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(where, e.what());
    }
    throw InputError(where, "expected a half-integer like \"3/2\"");
}

void parse_rhos(const nlohmann::json& j, RhoTable& table) {
    if (!j.is_array()) throw InputError("/rhos", "expected an array");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "/rhos/" + std::to_string(i);
        const auto& r = j[i];
        if (!r.is_object()) throw InputError(where, "expected an object");
        const std::string id = get_string(field(r, "id", where), where + "/id");
        const int dim = r.contains("dim") ? get_int(r.at("dim"), where + "/dim") : 1;
        Duality d = Duality::Orthogonal;
        if (r.contains("self_dual")) {
            try {
                d = parse_duality(get_string(r.at("self_dual"), where + "/self_dual"));
            } catch (const InputError&) {
                throw;
            } catch (const std::exception& e) {
                throw InputError(where + "/self_dual", e.what());
            }
        }
        const std::string dual = r.contains("dual") ? get_string(r.at("dual"), where + "/dual") : std::string();
        try {
            RhoKey rho = RhoKey::make(id, dim, d, dual);
            table.add(rho);
            if (!rho.self_dual() && !table.contains(rho.dual_id)) table.add(rho.dual());
        } catch (const std::exception& e) {
            throw InputError(where, e.what());
        }
    }
}

}  // namespace

InputDocument parse_input(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("", "expected a JSON object");
    InputDocument doc;
    try {
        doc.group = parse_group(get_string(field(j, "group", ""), "/group"));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError("/group", e.what());
    }

    if (j.contains("rhos")) {
        parse_rhos(j.at("rhos"), doc.rhos);
    } else {
        doc.rhos.add(RhoKey::trivial());
    }

    const auto& phi = field(j, "phi", "");
    if (!phi.is_array()) throw InputError("/phi", "expected an array of [rho, a] pairs");
    std::vector<Summand> summands;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const std::string where = "/phi/" + std::to_string(i);
        const auto& e = phi[i];
        if (!e.is_array() || e.size() != 2) throw InputError(where, "expected [rho, a]");
        const std::string id = get_string(e[0], where + "/0");
        const int a = get_int(e[1], where + "/1");
        if (!doc.rhos.contains(id)) throw InputError(where + "/0", "unknown rho id '" + id + "'");
        const RhoKey& rho = doc.rhos.at(id);
        if (!good_parity(doc.group, rho, a)) {
            throw InputError(where, "summand (" + id + ", " + std::to_string(a) + ") is not of good parity for " +
                                        to_string(doc.group));
        }
        summands.push_back(Summand{rho, a});
    }
    doc.phi = build_parameter(doc.group, std::move(summands));
    if (doc.group == GroupType::Sp && doc.phi.dim() % 2 == 0) {
        doc.warnings.push_back("/phi: Sp parameter of even dimension " + std::to_string(doc.phi.dim()) +
                               "; taken as the good-parity part as given");
    }

    if (j.contains("eta") && !j.at("eta").is_null()) {
        const auto& eta = j.at("eta");
        if (!eta.is_array()) throw InputError("/eta", "expected an array of signs");
        if (eta.size() != doc.phi.summands.size()) {
            throw InputError("/eta", "expected " + std::to_string(doc.phi.summands.size()) + " signs, got " +
                                         std::to_string(eta.size()));
        }
        EnhancedCharacter c;
        for (std::size_t i = 0; i < eta.size(); ++i) {
            const int s = get_int(eta[i], "/eta/" + std::to_string(i));
            if (s != 1 && s != -1) throw InputError("/eta/" + std::to_string(i), "sign must be 1 or -1");
            c.signs.push_back(s);
        }
        doc.eta = std::move(c);
    }

    if (j.contains("segments")) {
        const auto& segs = j.at("segments");
        if (!segs.is_array()) throw InputError("/segments", "expected an array");
        for (std::size_t i = 0; i < segs.size(); ++i) {
            const std::string where = "/segments/" + std::to_string(i);
            try {
                doc.segments.push_back(parse_segment(get_string(segs[i], where), doc.rhos));
            } catch (const InputError&) {
                throw;
            } catch (const std::exception& e) {
                throw InputError(where, e.what());
            }
        }
    }

    if (j.contains("twisted")) {
        const auto& tw = j.at("twisted");
        if (!tw.is_array()) throw InputError("/twisted", "expected an array of [rho, a, s]");
        for (std::size_t i = 0; i < tw.size(); ++i) {
            const std::string where = "/twisted/" + std::to_string(i);
            const auto& e = tw[i];
            if (!e.is_array() || e.size() != 3) throw InputError(where, "expected [rho, a, s]");
            const std::string id = get_string(e[0], where + "/0");
            if (!doc.rhos.contains(id)) throw InputError(where + "/0", "unknown rho id '" + id + "'");
            const int a = get_int(e[1], where + "/1");
            if (a < 1) throw InputError(where + "/1", "a must be positive");
            doc.twisted.push_back({doc.rhos.at(id), a, get_half_int(e[2], where + "/2")});
        }
    }
    return doc;
}

InputDocument parse_input_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_input(j);
}

InputDocument read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("", "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

Segment parse_segment(const std::string& text, const RhoTable& rhos) {
    const std::string t = trim(text);
    const auto colon = t.rfind(':');
    if (colon == std::string::npos || t.size() < colon + 3 || t[colon + 1] != '[' || t.back() != ']') {
        throw std::invalid_argument("segment '" + t + "' is not of the form rho:[x,y]");
    }
    const auto parts = split(t.substr(colon + 2, t.size() - colon - 3), ',');
    if (parts.size() != 2) throw std::invalid_argument("segment '" + t + "' needs exactly two endpoints");
    return Segment(rhos.at(t.substr(0, colon)), HalfInt::parse(parts[0]), HalfInt::parse(parts[1]));
}

std::vector<HalfInt> parse_half_int_list(const std::string& text) {
    std::vector<HalfInt> out;
    if (trim(text).empty()) return out;
    for (const auto& p : split(text, ',')) out.push_back(HalfInt::parse(p));
    return out;
}

EnhancedCharacter parse_eta(const std::string& text) {
    EnhancedCharacter c;
    if (trim(text).empty()) return c;
    for (const auto& p : split(text, ',')) {
        if (p == "1" || p == "+1" || p == "+") {
            c.signs.push_back(1);
        } else if (p == "-1" || p == "-") {
            c.signs.push_back(-1);
        } else {
            throw std::invalid_argument("bad sign '" + p + "' (expected 1, -1, + or -)");
        }
    }
    return c;
}

}  // namespace jacquet
