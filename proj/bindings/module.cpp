// Python bindings.  Every function takes the same matrix-spec JSON document
// the command line accepts (as a string) and returns either plain python
// values or a JSON report string, so the python surface stays in lockstep
// with the CLI contract.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "rees/errors.hpp"
#include "rees/koszul.hpp"
#include "rees/matrix_spec.hpp"
#include "rees/theorems.hpp"

namespace py = pybind11;
using namespace rees;

namespace {

std::pair<RingPtr, PolyMatrix> matrix_from_text(const std::string& spec_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(spec_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return build_matrix(parse_matrix_spec(doc));
}

std::string theorem_json(const std::string& spec_text, int which, unsigned jobs) {
    auto [ring, m] = matrix_from_text(spec_text);
    const TheoremReport report =
        which == 1 ? check_theorem1(m, jobs) : check_theorem2(m, jobs);
    return report.to_json().dump(2);
}

std::string grade_profile_json(const std::string& spec_text, unsigned jobs) {
    auto [ring, m] = matrix_from_text(spec_text);
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& [k, g] : grade_profile(m, jobs).entries)
        doc.push_back({{"k", k}, {"grade", g.to_string()}});
    return doc.dump(2);
}

std::vector<std::string> rees_generators(const std::string& spec_text) {
    auto [ring, m] = matrix_from_text(spec_text);
    const Ideal kernel = rees_ideal(m, forms_ring(m));
    std::vector<std::string> out;
    for (const auto& f : kernel.basis())
        out.push_back(to_string(f));
    return out;
}

std::string koszul_strand_json(const std::string& spec_text, std::int64_t degree) {
    auto [ring, m] = matrix_from_text(spec_text);
    return strand_report(m, degree).dump(2);
}

std::string resolve_power_json(const std::string& spec_text, std::int64_t power,
                               unsigned jobs) {
    auto [ring, m] = matrix_from_text(spec_text);
    const GradedComplex complex = power_resolution(m, power);
    const AcyclicityReport cert = certify_acyclic(complex, jobs);

    nlohmann::json doc;
    doc["power"] = power;
    doc["ranks"] = complex.ranks();
    doc["maps"] = nlohmann::json::array();
    for (std::size_t k = 1; k <= complex.length(); ++k) {
        const PolyMatrix& a = complex.map_at(k);
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < a.cols(); ++j)
                row.push_back(to_string(a.at(i, j)));
            entries.push_back(std::move(row));
        }
        doc["maps"].push_back({{"position", k}, {"entries", std::move(entries)}});
    }
    doc["augmentation"] = nlohmann::json::array();
    for (std::size_t j = 0; j < complex.augmentation()->cols(); ++j)
        doc["augmentation"].push_back(to_string(complex.augmentation()->at(0, j)));
    doc["certificate"] = cert.to_json();
    return doc.dump(2);
}

std::vector<std::string> reduced_basis_of(const std::string& spec_text,
                                          const std::vector<std::string>& gens,
                                          const std::string& order_name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(spec_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    const RingPtr ring = spec_ring(parse_matrix_spec(doc));
    if (order_name != "grevlex" && order_name != "lex")
        throw InputError("order must be \"grevlex\" or \"lex\"");
    std::vector<Polynomial> polys;
    for (const auto& text : gens)
        polys.push_back(parse_polynomial(ring, text));
    const MonomialOrder order = order_name == "lex" ? MonomialOrder{OrderKind::Lex, 0}
                                                    : ring->storage_order();
    const Ideal ideal(ring, std::move(polys));
    std::vector<std::string> out;
    for (const auto& f : ideal.basis(order))
        out.push_back(to_string(f));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact checks for determinantal ideals, Koszul strands, and "
                "Rees/symmetric algebra presentations";

    py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
    py::register_exception<TimeoutError>(mod, "TimeoutError", PyExc_TimeoutError);

    mod.def("check_theorem1",
            [](const std::string& spec, unsigned jobs) {
                return theorem_json(spec, 1, jobs);
            },
            py::arg("spec_json"), py::arg("jobs") = 1,
            "JSON report for the grade-profile equivalence");
    mod.def("check_theorem2",
            [](const std::string& spec, unsigned jobs) {
                return theorem_json(spec, 2, jobs);
            },
            py::arg("spec_json"), py::arg("jobs") = 1,
            "JSON report for the linear-type equivalence (n = m + 1)");
    mod.def("grade_profile", &grade_profile_json, py::arg("spec_json"),
            py::arg("jobs") = 1, "JSON list of {k, grade} for every minor ideal");
    mod.def("rees_generators", &rees_generators, py::arg("spec_json"),
            "reduced generating set of the Rees kernel, as strings");
    mod.def("koszul_strand", &koszul_strand_json, py::arg("spec_json"),
            py::arg("degree"), "JSON report of one graded strand's boundary matrices");
    mod.def("resolve_power", &resolve_power_json, py::arg("spec_json"), py::arg("r"),
            py::arg("jobs") = 1,
            "certified free resolution of the r-th power of the minor ideal (JSON)");
    mod.def("strand_ranks",
            [](std::size_t m, std::size_t n, std::int64_t degree) {
                return strand_ranks(m, n, degree);
            },
            py::arg("m"), py::arg("n"), py::arg("degree"),
            "ranks of the degree-`degree` strand modules for an m x n matrix");
    mod.def("groebner_basis", &reduced_basis_of, py::arg("spec_json"), py::arg("gens"),
            py::arg("order") = "grevlex",
            "reduced Groebner basis of the given polynomials in the spec's ring");
}
