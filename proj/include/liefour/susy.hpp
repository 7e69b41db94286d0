#ifndef LIEFOUR_SUSY_HPP
#define LIEFOUR_SUSY_HPP

#include "liefour/algebra.hpp"
#include "liefour/spinor.hpp"

#include <array>

namespace liefour {

/// A supercharge label: Q^I_alpha (bar=false) or Qbar_{I alphadot} (bar=true),
/// with I, alpha in {1,2}.  Names: "Q1_2", "Qb2_1", ...
struct ChargeIndex {
    bool bar = false;
    int iso = 1;   // internal index I
    int spin = 1;  // alpha (or alphadot when barred)

    std::string name() const;
    static ChargeIndex fromName(const std::string& name);
};

/// The eight supercharge names in canonical order: Q1_1..Q2_2, Qb1_1..Qb2_2.
std::vector<std::string> superchargeNames();

/// N=2 super-Poincare algebra with central charge, as structure tables.
/// With includeLorentz the L_{mu nu} sector is added using
/// sigma^{mu nu} = (1/4)(sigma^mu sigmabar^nu - sigma^nu sigmabar^mu); no
/// reference fixes those constants, so the Lorentz sector is an
/// extrapolation and excluded by default.
AlgebraPresentation buildN2Presentation(bool includeLorentz = false);

/// The 16-dimensional massive little-algebra Fock representation.
struct LittleAlgebraRep {
    Representation rep;
    Scalar mass;          // symbol m or a rational value
    Scalar centralCharge; // symbol z or a rational value
    std::array<Matrix, 4> osc;      // a^1..a^4
    std::array<Matrix, 4> oscDual;  // adag_1..adag_4
    std::array<Scalar, 4> oscCoeff; // c_I with {a^I, adag_I} = c_I * 1
    std::vector<LedgerEntry> conventionsLedger;
};

/// Builds the Fock representation from four fermionic modes, with the
/// asymmetric scaling a_I = c_I b_I, adag_I = bdag_I so everything stays
/// polynomial in m and z.  Self-verifies every superalgebra bracket exactly;
/// throws SelfCheckFailed otherwise.
LittleAlgebraRep buildLittleAlgebraRep(const Scalar& m, const Scalar& z);

/// The oscillator substitution a^1 = Q1_1 - Qb2_2, ... applied to supercharge
/// images; duals use the conjugate substitution.
std::array<Matrix, 4> oscillatorSubstitution(const Representation& rep);
std::array<Matrix, 4> oscillatorSubstitutionDual(const Representation& rep);

/// Hermiticity spot check: rebuilds the representation at numeric (m, z)
/// where every c_I is a perfect rational square, using symmetric sqrt(c_I)
/// scaling on both sides, and re-runs the bracket self-check plus
/// (Q^I_alpha)^dagger = Qbar_{I alphadot}.
VerificationReport hermiticitySpotCheck();

/// The abstract quartic Poincare extension transcribed directly: {Q,Q,Q,Q}=0,
/// {Q,Q,Qbar,Qbar}=0, {Q,Q,Q,Qbar} = 2i(...)P_mu and conjugates.
AlgebraPresentation buildEq4Presentation();

/// Total-symmetry validation of the transcribed table plus the
/// structure-constant-level generalized Jacobi identity (which reduces to
/// [P_mu, Q] = 0).
VerificationReport verifyAbstractQuarticPoincare();

/// Evaluate the induced-quartic display right-hand side (the Z, sigma^mu P_mu
/// form) for an ordered tuple of charges, in the rest frame of the given
/// representation parameters.
Scalar inducedDisplayRhs(const std::array<ChargeIndex, 4>& charges, const Scalar& m,
                         const Scalar& z);

/// Evaluate the little-algebra display right-hand side (the explicit m, sigma^0
/// form).  The Z^2 sign of the mixed family follows the derivation, not the
/// printed display; the discrepancy is ledgered by the callers.
Scalar littleDisplayRhs(const std::array<ChargeIndex, 4>& charges, const Scalar& m,
                        const Scalar& z);

/// LHS = symmetric four-bracket of images over all 330 supercharge
/// 4-multisets, compared to the induced display up to one constant lambda per
/// bracket family.  Non-uniform lambda is a failure; lambda != 1 is a ledger
/// finding.
VerificationReport verifyInducedN2Quartic(const LittleAlgebraRep& la);

/// Same comparison against the at-rest little-algebra display, plus the
/// cross-check ratio between the two displays per family.
VerificationReport verifyLittleAlgebraDisplay(const LittleAlgebraRep& la);

/// Transfer theorem sweep: the induced quartic table evaluated in the
/// representation equals the symmetric four-bracket of images, exactly.
VerificationReport checkRepresentationTransfer(const AlgebraPresentation& orderFour,
                                               const Representation& rep);

} // namespace liefour

#endif
