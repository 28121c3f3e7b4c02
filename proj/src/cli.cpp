#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jacquet/cli.hpp"
#include "jacquet/io.hpp"
#include "jacquet/jacquet.hpp"
#include "jacquet/mu_star.hpp"
#include "jacquet/render.hpp"

namespace jacquet {

namespace {

struct SessionConfig {
    std::string phi_file;
    std::string eta_csv;
    std::string rho_id = "1";
    std::string x_list;
    int degree = -1;
    std::string format = "text";
};

// One input representation: segments |x pi(phi, eta), possibly a virtual sum after
// normalization.
struct Member {
    std::string name;
    TemperedLabel core;
    VirtualGRep label;
};

struct Session {
    InputDocument doc;
    Format format = Format::Text;
    bool enumerate = false;
    std::vector<Member> members;
};

Session open_session(const SessionConfig& cfg, bool eta_override, bool whole_packet, std::ostream& err) {
    Session s;
    try {
        s.format = parse_format(cfg.format);
    } catch (const std::invalid_argument& e) {
        throw InputError("--format", e.what());
    }
    s.doc = read_input_file(cfg.phi_file);
    for (const auto& w : s.doc.warnings) err << "warning: " << w << "\n";
    std::optional<EnhancedCharacter> eta = whole_packet ? std::nullopt : s.doc.eta;
    std::string eta_where = "/eta";
    if (eta_override) {
        try {
            eta = parse_eta(cfg.eta_csv);
        } catch (const std::exception& e) {
            throw InputError("--eta", e.what());
        }
        eta_where = "--eta";
        if (eta->signs.size() != s.doc.phi.summands.size()) {
            throw InputError("--eta", "expected " + std::to_string(s.doc.phi.summands.size()) + " signs, got " +
                                          std::to_string(eta->signs.size()));
        }
    }
    std::vector<EnhancedCharacter> etas;
    if (eta) {
        if (!is_nonzero(s.doc.phi, *eta)) throw InputError(eta_where, "eta(z_phi) != 1, so pi(phi, eta) = 0");
        etas.push_back(*eta);
    } else {
        s.enumerate = true;
        etas = list_packet(s.doc.phi);
    }
    for (const auto& e : etas) {
        Member m;
        m.core = *make_tempered(s.doc.phi, e);
        m.label = normalize_standard(s.doc.segments, TemperedSum::single(m.core));
        m.name = render_sum(m.label);
        s.members.push_back(std::move(m));
    }
    return s;
}

const RhoKey& lookup_rho(const Session& s, const std::string& id) {
    if (!s.doc.rhos.contains(id)) throw InputError("--rho", "unknown rho id '" + id + "'");
    return s.doc.rhos.at(id);
}

std::vector<HalfInt> x_values(const std::string& list) {
    try {
        return parse_half_int_list(list);
    } catch (const std::exception& e) {
        throw InputError("--x", e.what());
    }
}

// Runs `body` per member. Text and LaTeX output get a "[label]" header line per member
// when the packet is enumerated; JSON output becomes an array of {input, eta, result}.
void for_each_member(const Session& s, std::ostream& out,
                     const std::function<void(const Member&, std::ostream&, nlohmann::json&)>& body) {
    if (s.format == Format::Json) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& m : s.members) {
            nlohmann::json result;
            std::ostringstream ignored;
            body(m, ignored, result);
            if (!s.enumerate) {
                out << result.dump(2) << "\n";
                return;
            }
            all.push_back({{"input", m.name}, {"eta", m.core.eta.signs}, {"result", result}});
        }
        out << all.dump(2) << "\n";
        return;
    }
    for (const auto& m : s.members) {
        if (s.enumerate) out << "[" << render_sum(m.label, s.format) << "]\n";
        nlohmann::json ignored;
        body(m, out, ignored);
    }
}

std::string sign_vector(const EnhancedCharacter& e) {
    std::string out;
    for (int s : e.signs) {
        if (!out.empty()) out += ",";
        out += s > 0 ? "1" : "-1";
    }
    return "(" + out + ")";
}

TwistedParam twisted_of(const InputDocument& doc) {
    TwistedParam p;
    p.core = doc.phi;
    p.twisted = doc.twisted;
    for (const auto& seg : doc.segments) p.twisted.push_back({seg.rho, seg.length(), seg.center()});
    return p;
}

bool all_tempered(const TwistedParam& p) {
    for (const auto& t : p.twisted) {
        if (t.s != HalfInt(0)) return false;
    }
    return true;
}

std::string adjoint_line(const ZetaExponentList& z, Format f) {
    const std::string lhs = f == Format::Latex ? "L(s, \\phi, \\mathrm{Ad})" : "L(s, phi, Ad)";
    std::string line = lhs + " = " + render_zeta(z, f);
    if (!z.complete) line += f == Format::Latex ? " \\cdot L_0(s)" : " · L_0(s)";
    return line;
}

void cmd_packet(const Session& s, std::ostream& out) {
    if (s.format == Format::Json) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& m : s.members) all.push_back(to_json(m.core));
        out << all.dump(2) << "\n";
        return;
    }
    for (const auto& m : s.members) {
        if (s.format == Format::Latex) {
            out << render_tempered(m.core, s.format) << " \\\\\n";
        } else {
            out << render_tempered(m.core, s.format) << "  eta=" << sign_vector(m.core.eta) << "\n";
        }
    }
}

void cmd_jac(const Session& s, const SessionConfig& cfg, std::ostream& out) {
    const RhoKey& rho = lookup_rho(s, cfg.rho_id);
    const auto xs = x_values(cfg.x_list);
    for_each_member(s, out, [&](const Member& m, std::ostream& o, nlohmann::json& j) {
        const VirtualGRep r = jac_vector(m.label, rho, xs);
        j = to_json(r);
        o << render_sum(r, s.format) << "\n";
    });
}

void cmd_mu_star(const Session& s, const SessionConfig& cfg, std::ostream& out, bool headers) {
    for_each_member(s, out, [&](const Member& m, std::ostream& o, nlohmann::json& j) {
        const VirtualBiRep r = cfg.degree >= 0 ? jac_P_k(m.label, cfg.degree) : mu_star_full(m.label);
        j = to_json(r);
        o << render_birep(r, s.format, headers);
    });
}

void cmd_generic(const Session& s, std::ostream& out) {
    const TwistedParam p = twisted_of(s.doc);
    const bool tempered = all_tempered(p);
    const ZetaExponentList z = zeta_exponents(p);
    const bool generic = tempered || is_generic(p);
    if (s.format == Format::Json) {
        out << nlohmann::json{{"generic", generic}, {"tempered", tempered}, {"zeta", to_json(z)}, {"complete", z.complete}}
                   .dump(2)
            << "\n";
        return;
    }
    if (tempered) {
        out << "GENERIC (tempered)\n";
    } else if (generic) {
        out << "GENERIC (no zeta(s-1) factor)\n";
    } else {
        out << "NOT GENERIC: zeta(s-1) factor present\n";
    }
    out << adjoint_line(z, s.format) << "\n";
}

void cmd_lfactor(const Session& s, std::ostream& out) {
    const ZetaExponentList z = zeta_exponents(twisted_of(s.doc));
    if (s.format == Format::Json) {
        out << nlohmann::json{{"zeta", to_json(z)}, {"complete", z.complete}}.dump(2) << "\n";
        return;
    }
    out << adjoint_line(z, s.format) << "\n";
    if (!z.complete) out << "L_0(s): constituents with nontrivial Weil-group part, holomorphic at s = 1\n";
}

void cmd_std_irred(const Session& s, const SessionConfig& cfg, bool x_given, std::ostream& out) {
    RhoKey rho;
    HalfInt x;
    if (x_given) {
        rho = lookup_rho(s, cfg.rho_id);
        const auto xs = x_values(cfg.x_list);
        if (xs.size() != 1) throw InputError("--x", "expected a single value");
        x = xs.front();
    } else {
        if (s.doc.segments.size() != 1) {
            throw InputError("/segments", "expected exactly one segment <rho; x, ..., -(x-1)>, or pass --x");
        }
        const Segment& seg = s.doc.segments.front();
        if (seg.x + seg.y != HalfInt(1)) throw InputError("/segments/0", "segment must be [x, 1-x]");
        rho = seg.rho;
        x = seg.x;
    }
    if (x <= HalfInt(0)) throw InputError(x_given ? "--x" : "/segments/0", "x must be positive");

    Session core_only = s;
    for (auto& m : core_only.members) {
        m.label = normalize_standard({Segment(rho, x, HalfInt(1) - x)}, TemperedSum::single(m.core));
        m.name = render_sum(m.label);
    }
    for_each_member(core_only, out, [&](const Member& m, std::ostream& o, nlohmann::json& j) {
        const IrreducibilityResult r = std_irreducible(rho, x, m.core);
        j = {{"verdict", to_string(r.verdict)}, {"reason", r.reason}, {"length", r.length}};
        o << to_string(r.verdict) << " (" << r.reason << ")\n";
        if (r.length > 1) o << "composition length " << r.length << "\n";
    });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jacquet modules of representations of SO(2n+1) and Sp(2n)", "jacquet"};
    app.require_subcommand(1);
    SessionConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--phi", cfg.phi_file, "parameter JSON file")->required();
        sub->add_option("--format", cfg.format, "text, json or latex");
    };
    auto* packet = app.add_subcommand("packet", "list the packet of phi");
    add_common(packet);

    std::vector<CLI::App*> with_eta;
    std::vector<CLI::Option*> eta_opts;
    auto add_eta = [&](CLI::App* sub) {
        with_eta.push_back(sub);
        eta_opts.push_back(sub->add_option("--eta", cfg.eta_csv, "signs, e.g. 1,-1,-1 (default: whole packet)"));
    };

    auto* jac = app.add_subcommand("jac", "iterated Jac_{rho|.|^x}");
    add_common(jac);
    add_eta(jac);
    jac->add_option("--rho", cfg.rho_id, "rho id (default 1)");
    jac->add_option("--x", cfg.x_list, "comma-separated half-integers, e.g. 3/2,1/2")->required();

    auto* mu = app.add_subcommand("mu-star", "full mu* grouped by degree");
    add_common(mu);
    add_eta(mu);
    mu->add_option("--degree", cfg.degree, "only this degree")->check(CLI::NonNegativeNumber);

    auto* pk = app.add_subcommand("jac-pk", "s.s. Jac_{P_k}");
    add_common(pk);
    add_eta(pk);
    pk->add_option("--degree", cfg.degree, "k")->required()->check(CLI::NonNegativeNumber);

    auto* gen = app.add_subcommand("generic", "genericity via the adjoint L-function");
    add_common(gen);

    auto* irr = app.add_subcommand("std-irred", "irreducibility of <rho; x, ..., -(x-1)> |x pi");
    add_common(irr);
    add_eta(irr);
    irr->add_option("--rho", cfg.rho_id, "rho id (default 1)");
    auto* irr_x = irr->add_option("--x", cfg.x_list, "x > 0 (default: the single segment of the input)");

    auto* lf = app.add_subcommand("lfactor", "zeta exponents of L(s, phi, Ad)");
    add_common(lf);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    bool eta_given = false;
    for (std::size_t i = 0; i < with_eta.size(); ++i) {
        if (with_eta[i]->parsed() && eta_opts[i]->count() > 0) eta_given = true;
    }

    try {
        const Session s = open_session(cfg, eta_given, packet->parsed(), err);
        if (packet->parsed()) cmd_packet(s, out);
        if (jac->parsed()) cmd_jac(s, cfg, out);
        if (mu->parsed()) cmd_mu_star(s, cfg, out, true);
        if (pk->parsed()) cmd_mu_star(s, cfg, out, false);
        if (gen->parsed()) cmd_generic(s, out);
        if (irr->parsed()) cmd_std_irred(s, cfg, irr_x->count() > 0, out);
        if (lf->parsed()) cmd_lfactor(s, out);
    } catch (const InputError& e) {
        err << "input error at " << (e.pointer().empty() ? "/" : e.pointer()) << ": "
            << std::string(e.what()).substr(e.pointer().size() + 2) << "\n";
        return kExitInput;
    } catch (const NonGenericStandard& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const HypothesisViolation& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    }
    return kExitOk;
}

}  // namespace jacquet
