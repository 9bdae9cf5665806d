// Thin python surface over the exact core: levels come in as (r, s) pairs,
// generic parameters as complex numbers, results as plain python data.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidlab/braid.hpp"
#include "braidlab/fock.hpp"
#include "braidlab/graded.hpp"
#include "braidlab/mixed.hpp"
#include "braidlab/qgroup.hpp"

namespace py = pybind11;
using namespace braidlab;

namespace {

py::dict spectrum_dict(const SpectrumReport& sp) {
    py::dict out;
    out["energies"] = sp.energies;
    out["plateau"] = sp.plateau ? py::cast(*sp.plateau) : py::none();
    out["truncation_index"] =
        sp.truncation_index ? py::cast(*sp.truncation_index) : py::none();
    return out;
}

}  // namespace

PYBIND11_MODULE(_braidlab, m) {
    m.doc() = "Exact braid representations, deformed Fock spectra and bracket tables";
    m.attr("__version__") = "0.1.0";

    py::register_exception<SingularLevelError>(m, "SingularLevelError");

    m.def(
        "spectrum_at_level",
        [](long r, long s, unsigned particles) {
            return spectrum_dict(spectrum(BraidParameter::level(r, s), particles, Mode::exact));
        },
        py::arg("r"), py::arg("s"), py::arg("particles"),
        "Exact multiparticle energy set at the root-of-unity level r/s.");

    m.def(
        "spectrum_generic",
        [](std::complex<double> t, unsigned particles, double tol) {
            return spectrum_dict(
                spectrum(BraidParameter::generic(Scalar(t)), particles, Mode::floating, tol));
        },
        py::arg("t"), py::arg("particles"), py::arg("tol") = 1e-9,
        "Float-mode energy set at a generic braid parameter t.");

    m.def(
        "yang_baxter_residual",
        [](long r, long s) {
            return check_yang_baxter(braid_matrix(BraidParameter::level(r, s), Mode::exact));
        },
        py::arg("r"), py::arg("s"),
        "Exact-mode braid relation residual; 0.0 certifies the identity.");

    m.def(
        "yang_baxter_residual_generic",
        [](std::complex<double> t) {
            return check_yang_baxter(braid_matrix(BraidParameter::generic(Scalar(t)),
                                                  Mode::floating));
        },
        py::arg("t"));

    m.def(
        "braid_order",
        [](long s) {
            auto rep = braid_order(s);
            return py::make_tuple(rep.holds_at_s, rep.minimal_order);
        },
        py::arg("s"), "(holds at s, minimal k with B^k = I) for the level 1/s matrix.");

    m.def(
        "match_spectrum",
        [](long r, long s, unsigned particles) {
            auto res = match_spectrum(BraidParameter::level(r, s), particles, Mode::exact);
            py::dict out;
            out["matched"] = res.matched;
            out["energies"] = res.qgroup_energies;
            return out;
        },
        py::arg("r"), py::arg("s"), py::arg("particles"),
        "Compare the quantum-group tower against the Fock ladder; exact mode.");

    m.def(
        "cross_angle",
        [](long s) {
            auto fam = generator_family(BraidParameter::level(1, s), 2, Mode::exact);
            auto sol = solve_angle(fam.creators[0], fam.creators[1]);
            if (!sol) throw std::runtime_error("no closing angle found");
            return py::make_tuple(sol->theta.to_string(), sol->theta.radians());
        },
        py::arg("s"),
        "Solved mixed-bracket angle for the (+1, +2) creator pair, as (p/q of pi, radians).");

    m.def(
        "heisenberg_closed",
        [](long r, long s, unsigned particles) {
            return verify_heisenberg(BraidParameter::level(r, s), particles).passed();
        },
        py::arg("r"), py::arg("s"), py::arg("particles"));

    m.def(
        "meta_abelian_mixed",
        [](long r, long s, unsigned particles) {
            return check_meta_abelian_mixed(BraidParameter::level(r, s), particles);
        },
        py::arg("r"), py::arg("s"), py::arg("particles"));

    m.def("gl11_violations", [] {
        auto g = gl11_generators(Mode::exact);
        return check_gl11(g.alpha, g.beta, g.gamma, g.delta);
    });
}
