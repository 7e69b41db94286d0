#ifndef LIEFOUR_SPINOR_HPP
#define LIEFOUR_SPINOR_HPP

#include "liefour/matrix.hpp"

#include <array>

namespace liefour {

/// Which epsilon table: undotted spinor, dotted spinor, or internal (I,J).
enum class EpsilonKind { SpinorUndotted, SpinorDotted, Internal };
enum class Variance { Upper, Lower };
enum class IndexDirection { Raise, Lower };

/// 2x2 antisymmetric convention tensor.  Spinor kind: eps_{12} = 1,
/// eps^{12} = -1 (dotted identical).  Internal kind: eps^{12} = -1,
/// eps_{12} = 1.
class Epsilon2 {
public:
    Epsilon2(EpsilonKind kind, Variance variance);

    EpsilonKind kind() const { return kind_; }
    Variance variance() const { return variance_; }

    /// Indices are 1-based to match the conventional notation.
    GaussianRational at(int i, int j) const;

private:
    EpsilonKind kind_;
    Variance variance_;
    GaussianRational e12_; // entry (1,2); (2,1) is its negative
};

GaussianRational epsilonLookup(EpsilonKind kind, Variance variance, int i, int j);

using SpinorVector = std::array<Scalar, 2>;

/// Index gymnastics: psi_a = eps_{ab} psi^b, psi^a = eps^{ab} psi_b.
SpinorVector spinorRaiseLower(const SpinorVector& v, IndexDirection direction,
                              EpsilonKind kind);

/// sigma^mu, sigmabar^mu, Gamma^mu in the Weyl representation, plus the
/// Minkowski metric.  Self-verified on construction.
class SigmaSet {
public:
    /// mostlyMinus = diag(1,-1,-1,-1); the flipped signature is exposed for
    /// diagnostics only and fails the Gamma anticommutator check.
    explicit SigmaSet(bool mostlyMinus = true);

    const Matrix& sigma(int mu) const { return sigma_.at(mu); }
    const Matrix& sigmaBar(int mu) const { return sigmaBar_.at(mu); }
    const Matrix& gamma(int mu) const { return gamma_.at(mu); }
    GaussianRational eta(int mu, int nu) const;

    /// sigma^{mu nu} = (1/4)(sigma^mu sigmabar^nu - sigma^nu sigmabar^mu);
    /// used only by the optional Lorentz sector.
    Matrix sigmaMuNu(int mu, int nu) const;
    Matrix sigmaBarMuNu(int mu, int nu) const;

    /// Whether the Clifford anticommutator identities hold with this
    /// signature choice (always true for mostly-minus).
    bool signatureConsistent() const;

private:
    void verify() const;

    bool mostlyMinus_;
    std::array<Matrix, 4> sigma_;
    std::array<Matrix, 4> sigmaBar_;
    std::array<Matrix, 4> gamma_;
};

/// The immutable shared convention tables.
const SigmaSet& conventionSigmas();

} // namespace liefour

#endif
