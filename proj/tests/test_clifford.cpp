#include <doctest.h>

#include "liefour/clifford.hpp"
#include "liefour/spinor.hpp"
#include "liefour/susy.hpp"

using namespace liefour;

namespace {

LinearForm pauliForm() {
    const SigmaSet& s = conventionSigmas();
    return {{"x", "y", "w"}, {s.sigma(1), s.sigma(2), s.sigma(3)}};
}

LinearForm fockForm() {
    LittleAlgebraRep la = buildLittleAlgebraRep(Scalar::symbol("m"), Scalar::symbol("z"));
    LinearForm form;
    for (int I = 0; I < 4; ++I) {
        form.indeterminates.push_back("x_" + std::to_string(I + 1));
        form.matrices.push_back(la.osc[I]);
    }
    for (int I = 0; I < 4; ++I) {
        form.indeterminates.push_back("y_" + std::to_string(I + 1));
        form.matrices.push_back(la.oscDual[I]);
    }
    return form;
}

Scalar fockQuadraticOracle() {
    LittleAlgebraRep la = buildLittleAlgebraRep(Scalar::symbol("m"), Scalar::symbol("z"));
    Scalar p;
    for (int I = 0; I < 4; ++I)
        p += la.oscCoeff[I] * Scalar::symbol("x_" + std::to_string(I + 1)) *
             Scalar::symbol("y_" + std::to_string(I + 1));
    return p;
}

} // namespace

TEST_CASE("Pauli matrices generate the Clifford algebra of x^2+y^2+w^2") {
    PolynomialTarget target{Scalar::parse("x^2 + y^2 + w^2"), 2};
    VerificationReport r = cliffordVerify(pauliForm(), target);
    CHECK(r.passed());
    CHECK(r.total() == 4);
}

TEST_CASE("a wrong target is rejected with located residuals") {
    PolynomialTarget target{Scalar::parse("x^2 + y^2 - w^2"), 2};
    VerificationReport r = cliffordVerify(pauliForm(), target);
    CHECK_FALSE(r.passed());
}

TEST_CASE("an inhomogeneous target throws") {
    PolynomialTarget target{Scalar::parse("x^2 + y"), 2};
    CHECK_THROWS_AS(cliffordVerify(pauliForm(), target), InhomogeneousTarget);
}

TEST_CASE("coefficient symbols do not count toward target homogeneity") {
    const SigmaSet& s = conventionSigmas();
    LinearForm scaled{{"x"}, {Scalar::symbol("m") * s.sigma(1)}};
    PolynomialTarget target{Scalar::parse("m^2 * x^2"), 2};
    CHECK(cliffordVerify(scaled, target).passed());
}

TEST_CASE("indeterminates may not leak into the matrices") {
    const SigmaSet& s = conventionSigmas();
    LinearForm bad{{"x"}, {Scalar::symbol("x") * s.sigma(1)}};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("mismatched matrix sizes are rejected") {
    LinearForm bad{{"x", "y"}, {Matrix::identity(2), Matrix::identity(4)}};
    CHECK_THROWS_AS(bad.validate(), DimensionMismatch);
}

TEST_CASE("a single order-four clock matrix realizes x^4") {
    GeneralizedClifford gc = buildGeneralizedClifford(1);
    CHECK(gc.dim == 4);
    CHECK(gc.target.poly == Scalar::parse("x_1^4"));
    CHECK(cliffordVerify(gc.form, gc.target).passed());
    QuadraticCompatibility qc = quadraticCompatibilityCheck(gc.form);
    CHECK_FALSE(qc.compatible); // C^2 = diag(1,-1,1,-1) is not scalar
}

TEST_CASE("single Pauli matrix is quadratically compatible with x^2") {
    const SigmaSet& s = conventionSigmas();
    LinearForm form{{"x"}, {s.sigma(1)}};
    QuadraticCompatibility qc = quadraticCompatibilityCheck(form);
    CHECK(qc.compatible);
    CHECK(qc.poly == Scalar::parse("x^2"));
}

TEST_CASE("clock-shift pair: quartic relation without a quadratic one") {
    GeneralizedClifford gc = buildGeneralizedClifford(2);
    CHECK(gc.dim == 4);
    CHECK(gc.target.poly == Scalar::parse("x_1^4 + x_2^4"));
    CHECK(cliffordVerify(gc.form, gc.target).passed());
    QuadraticCompatibility qc = quadraticCompatibilityCheck(gc.form);
    CHECK_FALSE(qc.compatible);
    CHECK_FALSE(qc.obstruction.empty());
}

TEST_CASE("three clock-shift generators still satisfy the quartic relation") {
    GeneralizedClifford gc = buildGeneralizedClifford(3);
    CHECK(gc.dim == 16);
    CHECK(cliffordVerify(gc.form, gc.target).passed());
    CHECK_FALSE(quadraticCompatibilityCheck(gc.form).compatible);
}

TEST_CASE("Fock oscillators are quadratically compatible") {
    QuadraticCompatibility qc = quadraticCompatibilityCheck(fockForm());
    REQUIRE(qc.compatible);
    CHECK(qc.poly == fockQuadraticOracle());
}

TEST_CASE("compatibility transfers to the quartic relation") {
    Scalar p = fockQuadraticOracle();
    VerificationReport r = cliffordVerify(fockForm(), {p * p, 4});
    CHECK(r.passed());
    CHECK(r.total() == 256);
}

TEST_CASE("compatibility transfer holds for anticommuting Pauli pairs") {
    QuadraticCompatibility qc = quadraticCompatibilityCheck(pauliForm());
    REQUIRE(qc.compatible);
    CHECK(qc.poly == Scalar::parse("x^2 + y^2 + w^2"));
    CHECK(cliffordVerify(pauliForm(), {qc.poly * qc.poly, 4}).passed());
}

TEST_CASE("degree below two is a usage error") {
    CHECK_THROWS_AS(cliffordVerify(pauliForm(), {Scalar::parse("x"), 1}), ValidationError);
}
