#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jacquet/cli.hpp"
#include "jacquet/io.hpp"
#include "jacquet/jacquet.hpp"
#include "jacquet/mu_star.hpp"
#include "jacquet/render.hpp"

namespace py = pybind11;
using namespace jacquet;

namespace {

// Members of the input: the given eta, or the whole packet.
std::vector<std::pair<TemperedLabel, VirtualGRep>> members(const InputDocument& doc) {
    std::vector<EnhancedCharacter> etas;
    if (doc.eta) {
        if (!is_nonzero(doc.phi, *doc.eta)) throw InputError("/eta", "pi(phi, eta) = 0");
        etas.push_back(*doc.eta);
    } else {
        etas = list_packet(doc.phi);
    }
    std::vector<std::pair<TemperedLabel, VirtualGRep>> out;
    for (const auto& e : etas) {
        TemperedLabel t = *make_tempered(doc.phi, e);
        out.emplace_back(t, normalize_standard(doc.segments, TemperedSum::single(t)));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> terms(const VirtualGRep& v) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [lbl, c] : v) out.emplace_back(to_string(c), render_standard(lbl));
    return out;
}

TwistedParam twisted_of(const InputDocument& doc) {
    TwistedParam p;
    p.core = doc.phi;
    p.twisted = doc.twisted;
    for (const auto& seg : doc.segments) p.twisted.push_back({seg.rho, seg.length(), seg.center()});
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Jacquet modules of representations of SO(2n+1) and Sp(2n)";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<NonGenericStandard>(m, "NonGenericStandard", PyExc_RuntimeError);

    m.def("packet", [](const std::string& doc_json) {
        const auto doc = parse_input_text(doc_json);
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (const auto& eta : list_packet(doc.phi)) {
            out.emplace_back(render_tempered(*make_tempered(doc.phi, eta)), eta.signs);
        }
        return out;
    }, py::arg("doc_json"), "Packet members as (name, signs).");

    m.def("jac", [](const std::string& doc_json, const std::vector<std::string>& xs, const std::string& rho) {
        const auto doc = parse_input_text(doc_json);
        std::vector<HalfInt> ys;
        for (const auto& x : xs) ys.push_back(HalfInt::parse(x));
        std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> out;
        for (const auto& [core, label] : members(doc)) {
            out.emplace_back(render_sum(label), terms(jac_vector(label, doc.rhos.at(rho), ys)));
        }
        return out;
    }, py::arg("doc_json"), py::arg("xs"), py::arg("rho") = "1",
       "Iterated Jac per member: [(input, [(coeff, label), ...])].");

    m.def("jac_pk", [](const std::string& doc_json, int k) {
        const auto doc = parse_input_text(doc_json);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [core, label] : members(doc)) {
            out.emplace_back(render_sum(label), render_birep(jac_P_k(label, k), Format::Text, false));
        }
        return out;
    }, py::arg("doc_json"), py::arg("k"), "Rendered s.s. Jac_{P_k} per member.");

    m.def("zeta_exponents", [](const std::string& doc_json) {
        const auto z = zeta_exponents(twisted_of(parse_input_text(doc_json)));
        std::map<std::string, int> out;
        for (const auto& [e, n] : z.exponents) out[e.str()] = n;
        return py::make_tuple(out, z.complete);
    }, py::arg("doc_json"), "({exponent: multiplicity}, complete).");

    m.def("is_generic", [](const std::string& doc_json) { return is_generic(twisted_of(parse_input_text(doc_json))); },
          py::arg("doc_json"));

    m.def("std_irreducible", [](const std::string& doc_json, const std::string& x, const std::string& rho) {
        const auto doc = parse_input_text(doc_json);
        std::vector<py::tuple> out;
        for (const auto& [core, label] : members(doc)) {
            const auto r = std_irreducible(doc.rhos.at(rho), HalfInt::parse(x), core);
            out.push_back(py::make_tuple(render_tempered(core), to_string(r.verdict), r.reason, r.length));
        }
        return out;
    }, py::arg("doc_json"), py::arg("x"), py::arg("rho") = "1");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line in-process: (exit code, stdout, stderr).");
}
