#include <doctest.h>

#include "liefour/susy.hpp"

#include <algorithm>

using namespace liefour;

namespace {

Scalar sym(const char* n) { return Scalar::symbol(n); }

const LittleAlgebraRep& symbolicRep() {
    static LittleAlgebraRep la = buildLittleAlgebraRep(sym("m"), sym("z"));
    return la;
}

std::string ledgerValue(const VerificationReport& r, const std::string& name) {
    for (const auto& e : r.ledger())
        if (e.name == name) return e.computed;
    return "<missing>";
}

} // namespace

TEST_CASE("charge names round-trip") {
    for (const auto& name : superchargeNames()) {
        ChargeIndex c = ChargeIndex::fromName(name);
        CHECK(c.name() == name);
    }
    CHECK(superchargeNames().size() == 8);
    // unbarred names sort before barred ones, so multiset keys split cleanly
    auto names = superchargeNames();
    CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("superalgebra structure constants carry the convention signs") {
    AlgebraPresentation p = buildN2Presentation(false);
    // {Q^1_1, Qbar_{1 1}} = -2i (P_0 + P_3)
    LinearCombo c = p.oddOddBracket("Q1_1", "Qb1_1");
    Scalar m2i = Scalar(-2) * Scalar::i();
    CHECK(c == LinearCombo{{"P_0", m2i}, {"P_3", m2i}});
    // {Q^1_2, Qbar_{1 1}} = -2i (P_1 - i P_2): sigma^1_{21} = 1, sigma^2_{21} = i
    LinearCombo offdiag = p.oddOddBracket("Q1_2", "Qb1_1");
    CHECK(offdiag == LinearCombo{{"P_1", m2i}, {"P_2", Scalar(-2) * Scalar::i() * Scalar::i()}});
    // mixed isospin pairs land on the central charge only
    CHECK(p.oddOddBracket("Q1_1", "Q2_2") == LinearCombo{{"Z", Scalar(-2)}});
    CHECK(p.oddOddBracket("Q1_2", "Q2_1") == LinearCombo{{"Z", Scalar(2)}});
    CHECK(p.oddOddBracket("Q1_1", "Q1_2").empty());
    CHECK(p.oddOddBracket("Qb1_1", "Qb2_2") == LinearCombo{{"Z", Scalar(-2)}});
    // cross-species same-isospin never produces Z
    CHECK(p.oddOddBracket("Q1_1", "Qb2_1").empty());
}

TEST_CASE("optional Lorentz sector satisfies the structure-level Jacobi identity") {
    AlgebraPresentation p = buildN2Presentation(true);
    CHECK(p.evenNames().size() == 11); // P_mu, Z, six L
    VerificationReport r = checkEvenJacobiStructure(p);
    CHECK(r.passed());
}

TEST_CASE("Fock representation realizes every bracket symbolically") {
    const LittleAlgebraRep& la = symbolicRep();
    CHECK(la.rep.dim == 16);
    VerificationReport r = checkSuperJacobi(buildN2Presentation(false), la.rep);
    CHECK(r.passed());
}

TEST_CASE("oscillator coefficients come from the structure-constant oracle") {
    const LittleAlgebraRep& la = symbolicRep();
    Scalar m = sym("m"), z = sym("z");
    CHECK(la.oscCoeff[0] == Scalar(4) * (z - m));
    CHECK(la.oscCoeff[1] == Scalar(4) * (z - m));
    CHECK(la.oscCoeff[2] == Scalar(-4) * (m + z));
    CHECK(la.oscCoeff[3] == Scalar(-4) * (m + z));
    // the pairing invariants c1 = c2 and c3 = c4 hold
    CHECK(la.oscCoeff[0] == la.oscCoeff[1]);
    CHECK(la.oscCoeff[2] == la.oscCoeff[3]);
    // the stated values are ledgered for comparison
    CHECK(la.conventionsLedger.size() == 4);
    CHECK(la.conventionsLedger[0].stated == (Scalar(2) * (Scalar(2) * m + z)).str());
}

TEST_CASE("oscillator substitution reproduces the stored oscillators") {
    const LittleAlgebraRep& la = symbolicRep();
    auto osc = oscillatorSubstitution(la.rep);
    auto dual = oscillatorSubstitutionDual(la.rep);
    for (int I = 0; I < 4; ++I) {
        CHECK(osc[I] == la.osc[I]);
        CHECK(dual[I] == la.oscDual[I]);
        // canonical pairs
        CHECK(anticommutator(osc[I], dual[I]) == Matrix::scalar(16, la.oscCoeff[I]));
        CHECK(anticommutator(osc[I], osc[I]).isZero());
    }
}

TEST_CASE("hermiticity holds at the symmetric-scaling spot check") {
    VerificationReport r = hermiticitySpotCheck();
    CHECK(r.passed());
    CHECK(r.total() == 5);
}

TEST_CASE("abstract quartic presentation is symmetric and closes") {
    VerificationReport r = verifyAbstractQuarticPoincare();
    CHECK(r.passed());
    CHECK(r.total() == 330 + 792);
}

TEST_CASE("abstract and induced quartic tables are genuinely different") {
    AlgebraPresentation abstract = buildEq4Presentation();
    AlgebraPresentation induced = induceQuartic(buildN2Presentation(false));
    // the two-two family vanishes abstractly but not in the induced table
    OddQuad key = sortedQuad({"Q1_1", "Q1_2", "Qb1_1", "Qb1_2"});
    CHECK(abstract.quarticBracket(key) == nullptr);
    CHECK(induced.quarticBracket(key) != nullptr);
    // the three-one family is nonzero in both
    OddQuad key31 = sortedQuad({"Q1_1", "Q1_2", "Q2_1", "Qb1_1"});
    CHECK(abstract.quarticBracket(key31) != nullptr);
}

TEST_CASE("display comparison finds one uniform constant per family") {
    const LittleAlgebraRep& la = symbolicRep();
    VerificationReport induced = verifyInducedN2Quartic(la);
    CHECK(induced.passed());
    CHECK(induced.total() == 330);
    CHECK(ledgerValue(induced, "lambda {Q,Q,Q,Q}") == "4");
    CHECK(ledgerValue(induced, "lambda {Q,Q,Q,Qbar}") == "4");
    CHECK(ledgerValue(induced, "lambda {Q,Q,Qbar,Qbar}") == "-4");
    CHECK(ledgerValue(induced, "lambda {Q,Qbar,Qbar,Qbar}") == "4");
    CHECK(ledgerValue(induced, "lambda {Qbar,Qbar,Qbar,Qbar}") == "4");

    VerificationReport little = verifyLittleAlgebraDisplay(la);
    CHECK(little.passed());
    CHECK(ledgerValue(little, "lambda {Q,Q,Q,Q}") == "4");
    CHECK(ledgerValue(little, "lambda {Q,Q,Q,Qbar}") == "-4");
    CHECK(ledgerValue(little, "lambda {Q,Q,Qbar,Qbar}") == "4");
    CHECK(ledgerValue(little, "lambda {Q,Qbar,Qbar,Qbar}") == "4");
    CHECK(ledgerValue(little, "lambda {Qbar,Qbar,Qbar,Qbar}") == "4");
    // cross-display ratios per family
    CHECK(ledgerValue(little, "display-ratio {Q,Q,Q,Q}") == "1");
    CHECK(ledgerValue(little, "display-ratio {Q,Q,Q,Qbar}") == "-1");
    CHECK(ledgerValue(little, "display-ratio {Q,Q,Qbar,Qbar}") == "-1");
    CHECK(ledgerValue(little, "display-ratio {Q,Qbar,Qbar,Qbar}") == "1");
    CHECK(ledgerValue(little, "display-ratio {Qbar,Qbar,Qbar,Qbar}") == "1");
}

TEST_CASE("representation transfer is exact over all multisets") {
    const LittleAlgebraRep& la = symbolicRep();
    AlgebraPresentation induced = induceQuartic(buildN2Presentation(false));
    VerificationReport r = checkRepresentationTransfer(induced, la.rep);
    CHECK(r.passed());
    CHECK(r.total() == 330);
}

TEST_CASE("generalized jacobi holds on the Fock representation") {
    const LittleAlgebraRep& la = symbolicRep();
    VerificationReport r =
        checkGeneralizedJacobi(buildN2Presentation(false).oddNames(), la.rep);
    CHECK(r.passed());
    CHECK(r.total() == 792);
}

TEST_CASE("vanishing central charge kills the charge-heavy families") {
    LittleAlgebraRep la = buildLittleAlgebraRep(sym("m"), Scalar());
    AlgebraPresentation induced = induceQuartic(buildN2Presentation(false));
    Representation atZero = la.rep;
    auto names = superchargeNames();
    for (const auto& ms : multisets(names, 4)) {
        int bars = 0;
        for (const auto& n : ms) bars += ChargeIndex::fromName(n).bar ? 1 : 0;
        if (bars > 1) continue;
        Matrix bracket = fourBracketSym(atZero.image(ms[0]), atZero.image(ms[1]),
                                        atZero.image(ms[2]), atZero.image(ms[3]));
        CHECK(bracket.isZero());
        const EvenQuadratic* v = induced.quarticBracket({ms[0], ms[1], ms[2], ms[3]});
        if (v) CHECK(evaluateEvenQuadratic(*v, atZero).isZero());
    }
}

TEST_CASE("numeric and symbolic builds agree after substitution") {
    LittleAlgebraRep numeric = buildLittleAlgebraRep(
        Scalar(GaussianRational::fromRatio(3, 1)), Scalar(GaussianRational::fromRatio(1, 2)));
    const LittleAlgebraRep& symbolic = symbolicRep();
    std::map<std::string, Scalar> point = {{"m", Scalar(3)},
                                           {"z", Scalar(GaussianRational::fromRatio(1, 2))}};
    for (const auto& [gen, mat] : symbolic.rep.images)
        CHECK(mat.substitute(point) == numeric.rep.image(gen));
}
