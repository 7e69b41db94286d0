#include "liefour/clifford.hpp"
#include "liefour/presentation_io.hpp"
#include "liefour/susy.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace liefour;

namespace {

Scalar parameter(const std::string& text) { return Scalar::parse(text); }

std::string reportJson(const VerificationReport& r) { return r.toJson().dump(); }

std::string verifySuper(const std::string& m, const std::string& z) {
    AlgebraPresentation p = buildN2Presentation(false);
    LittleAlgebraRep la = buildLittleAlgebraRep(parameter(m), parameter(z));
    return reportJson(checkSuperJacobi(p, la.rep));
}

std::string verifyQuartic(const std::string& against, const std::string& m,
                          const std::string& z) {
    if (against == "eq4") return reportJson(verifyAbstractQuarticPoincare());
    LittleAlgebraRep la = buildLittleAlgebraRep(parameter(m), parameter(z));
    if (against == "little") return reportJson(verifyLittleAlgebraDisplay(la));
    if (against == "transfer") {
        AlgebraPresentation induced = induceQuartic(buildN2Presentation(false));
        return reportJson(checkRepresentationTransfer(induced, la.rep));
    }
    return reportJson(verifyInducedN2Quartic(la));
}

std::string generalizedCliffordCertificate(unsigned n) {
    GeneralizedClifford gc = buildGeneralizedClifford(n);
    Json j;
    j["dim"] = gc.dim;
    j["target"] = gc.target.poly.str();
    j["quartic"] = cliffordVerify(gc.form, gc.target).toJson();
    QuadraticCompatibility qc = quadraticCompatibilityCheck(gc.form);
    j["quadratic-compatible"] = qc.compatible;
    if (qc.compatible) j["quadratic-polynomial"] = qc.poly.str();
    return j.dump();
}

} // namespace

PYBIND11_MODULE(_liefour, mod) {
    mod.doc() = "exact engine for Lie algebras of order four";

    py::class_<AlgebraPresentation>(mod, "Presentation")
        .def_property_readonly("kind",
                               [](const AlgebraPresentation& p) {
                                   return p.kind() == AlgebraKind::Superalgebra
                                              ? "superalgebra"
                                              : "order-four";
                               })
        .def_property_readonly("even_names", &AlgebraPresentation::evenNames)
        .def_property_readonly("odd_names", &AlgebraPresentation::oddNames)
        .def("emit", [](const AlgebraPresentation& p) { return emitPresentation(p); });

    mod.def("build_n2_presentation", &buildN2Presentation, py::arg("lorentz") = false);
    mod.def("induce_quartic", &induceQuartic);
    mod.def("parse_presentation", &parsePresentation);
    mod.def(
        "scalar_roundtrip",
        [](const std::string& text) { return Scalar::parse(text).str(); },
        "parse a scalar expression and return its canonical rendering");
    mod.def("verify_super", &verifySuper, py::arg("m") = "m", py::arg("z") = "z");
    mod.def("verify_quartic", &verifyQuartic, py::arg("against") = "induced",
            py::arg("m") = "m", py::arg("z") = "z");
    mod.def("oscillator_coefficients", [](const std::string& m, const std::string& z) {
        LittleAlgebraRep la = buildLittleAlgebraRep(parameter(m), parameter(z));
        std::vector<std::string> out;
        for (const auto& c : la.oscCoeff) out.push_back(c.str());
        return out;
    });
    mod.def("generalized_clifford", &generalizedCliffordCertificate, py::arg("n") = 2);

    py::register_exception<Error>(mod, "LiefourError");
}
