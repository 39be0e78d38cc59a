#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergman/olsen_reguera.hpp"
#include "bergman/operator.hpp"
#include "bergman/report.hpp"
#include "bergman/torsion.hpp"

namespace py = pybind11;
using namespace bergman;

namespace {

// Coefficients arrive either as a sequence of complex numbers or as the
// JSON text accepted by the command line tool.
TaylorSymbol to_symbol(const py::object& coeffs) {
    if (py::isinstance<py::str>(coeffs)) return parse_symbol(coeffs.cast<std::string>());
    const auto c = coeffs.cast<std::vector<cdouble>>();
    if (c.empty()) throw PreconditionError("coefficient list is empty");
    return TaylorSymbol(std::span<const cdouble>(c));
}

py::object from_json(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(format_json(j, -1));
}

}  // namespace

PYBIND11_MODULE(bergman, m) {
    m.doc() = "Self-commutator norms of analytic Toeplitz operators and the isoperimetric sandwich";

    m.def("image_area", [](const py::object& c) { return image_area(to_symbol(c)); }, py::arg("coeffs"));
    m.def("perimeter", [](const py::object& c, int samples) { return perimeter(to_symbol(c), samples); },
          py::arg("coeffs"), py::arg("samples") = 4096);
    m.def("dirichlet_energy", [](const py::object& c) { return dirichlet_energy(to_symbol(c)); }, py::arg("coeffs"));
    m.def("univalence_certificate", [](const py::object& c) { return univalence_certificate(to_symbol(c)); },
          py::arg("coeffs"));

    m.def(
        "commutator_matrix",
        [](const py::object& c, int N) {
            const OperatorMatrix M = commutator_matrix(to_symbol(c), N);
            std::vector<std::vector<cdouble>> rows(static_cast<std::size_t>(N), std::vector<cdouble>(N));
            for (int n = 0; n < N; ++n) {
                for (int k = 0; k < N; ++k) rows[n][k] = M(n, k);
            }
            return rows;
        },
        py::arg("coeffs"), py::arg("N"));

    m.def(
        "commutator_norm",
        [](const py::object& c, double tol) {
            const CommutatorNorm r = commutator_norm(to_symbol(c), tol);
            py::dict d;
            d["value"] = r.value;
            d["truncation"] = r.N_used;
            d["history"] = r.history;
            d["large_truncation"] = r.large_truncation;
            return d;
        },
        py::arg("coeffs"), py::arg("tol") = 1e-9);

    m.def(
        "torsional_rigidity",
        [](const py::object& c, const std::string& method, int radial, int angular, bool unsafe) {
            const TaylorSymbol s = to_symbol(c);
            TorsionResult t;
            if (method == "exact") {
                t = torsional_rigidity_exact(s, unsafe);
            } else if (method == "fd") {
                t = torsional_rigidity_fd(s, radial, angular, unsafe);
            } else {
                throw PreconditionError("unknown torsion method '" + method + "'");
            }
            py::dict d;
            d["rho"] = t.rho;
            d["rho_over_pi"] = t.rho_over_pi ? py::cast(t.rho_over_pi->get_str()) : py::none();
            d["method"] = to_string(t.method);
            return d;
        },
        py::arg("coeffs"), py::arg("method") = "exact", py::arg("radial") = 128, py::arg("angular") = 256,
        py::arg("unsafe") = false);

    m.def(
        "sandwich", [](const py::object& c, double tol) { return from_json(report_to_json(sandwich(to_symbol(c), tol))); },
        py::arg("coeffs"), py::arg("tol") = 1e-9, "Sandwich report as a dict with the JSON report's fields");
    m.def(
        "sandwich_json",
        [](const py::object& c, double tol) { return format_json(report_to_json(sandwich(to_symbol(c), tol))); },
        py::arg("coeffs"), py::arg("tol") = 1e-9);

    m.def(
        "extremal_nullspace",
        [](const py::object& c, int truncation) {
            const ExtremalityResult r = extremal_nullspace(to_symbol(c), truncation);
            std::vector<std::vector<std::pair<std::string, std::string>>> basis;
            for (const auto& v : r.exact_basis) {
                auto& out = basis.emplace_back();
                for (const auto& x : v) out.emplace_back(x.re.get_str(), x.im.get_str());
            }
            py::dict d;
            d["classification"] = to_string(r.classification);
            d["nullspace_dim"] = r.nullspace_dim;
            d["truncation"] = r.truncation;
            d["stable"] = r.stable;
            d["basis"] = basis;
            return d;
        },
        py::arg("coeffs"), py::arg("truncation") = 0);

    m.def(
        "hankel_norm_sq",
        [](const py::object& c, const std::vector<cdouble>& f) { return hankel_norm_sq_on(CoeffSeq(f), to_symbol(c)); },
        py::arg("coeffs"), py::arg("f"), "||H f||^2 in the normalized measure dA/pi");
    m.def(
        "or_bound", [](const py::object& c, const std::vector<cdouble>& f) { return or_bound(CoeffSeq(f), to_symbol(c)); },
        py::arg("coeffs"), py::arg("f"));
}
