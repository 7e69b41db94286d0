#include "liefour/spinor.hpp"
#include "liefour/error.hpp"

namespace liefour {

Epsilon2::Epsilon2(EpsilonKind kind, Variance variance)
    : kind_(kind), variance_(variance) {
    // Spinor: eps_{12} = eps_{dot1 dot2} = 1, eps^{12} = eps^{dot1 dot2} = -1.
    // Internal: -eps^{12} = eps^{21} = eps_{12} = -eps_{21} = 1.
    // The two tables coincide entrywise; both are kept distinct because the
    // lookup interface names them.
    e12_ = (variance == Variance::Lower) ? GaussianRational(1) : GaussianRational(-1);
}

GaussianRational Epsilon2::at(int i, int j) const {
    if (i < 1 || i > 2 || j < 1 || j > 2)
        throw IndexOutOfRange("epsilon index out of range: (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
    if (i == j) return GaussianRational(0);
    return (i == 1) ? e12_ : -e12_;
}

GaussianRational epsilonLookup(EpsilonKind kind, Variance variance, int i, int j) {
    return Epsilon2(kind, variance).at(i, j);
}

SpinorVector spinorRaiseLower(const SpinorVector& v, IndexDirection direction,
                              EpsilonKind kind) {
    Epsilon2 eps(kind, direction == IndexDirection::Lower ? Variance::Lower
                                                          : Variance::Upper);
    SpinorVector out;
    for (int a = 1; a <= 2; ++a) {
        Scalar acc;
        for (int b = 1; b <= 2; ++b) acc += Scalar(eps.at(a, b)) * v[b - 1];
        out[a - 1] = acc;
    }
    return out;
}

namespace {

Matrix pauli(int i) {
    Matrix m(2);
    switch (i) {
        case 1:
            m(0, 1) = Scalar(1);
            m(1, 0) = Scalar(1);
            break;
        case 2:
            m(0, 1) = -Scalar::i();
            m(1, 0) = Scalar::i();
            break;
        case 3:
            m(0, 0) = Scalar(1);
            m(1, 1) = Scalar(-1);
            break;
        default:
            throw IndexOutOfRange("pauli index");
    }
    return m;
}

} // namespace

SigmaSet::SigmaSet(bool mostlyMinus) : mostlyMinus_(mostlyMinus) {
    sigma_[0] = Matrix::identity(2);
    sigmaBar_[0] = Matrix::identity(2);
    for (int k = 1; k <= 3; ++k) {
        sigma_[k] = pauli(k);
        sigmaBar_[k] = -pauli(k);
    }
    for (int mu = 0; mu < 4; ++mu) {
        Matrix g(4);
        for (size_t r = 0; r < 2; ++r)
            for (size_t c = 0; c < 2; ++c) {
                g(r, c + 2) = sigma_[mu](r, c);
                g(r + 2, c) = sigmaBar_[mu](r, c);
            }
        gamma_[mu] = g;
    }
    verify();
}

GaussianRational SigmaSet::eta(int mu, int nu) const {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
        throw IndexOutOfRange("metric index");
    if (mu != nu) return GaussianRational(0);
    GaussianRational sign = (mu == 0) ? GaussianRational(1) : GaussianRational(-1);
    return mostlyMinus_ ? sign : -sign;
}

Matrix SigmaSet::sigmaMuNu(int mu, int nu) const {
    Scalar quarter(GaussianRational::fromRatio(1, 4));
    return quarter * (sigma_.at(mu) * sigmaBar_.at(nu) - sigma_.at(nu) * sigmaBar_.at(mu));
}

Matrix SigmaSet::sigmaBarMuNu(int mu, int nu) const {
    Scalar quarter(GaussianRational::fromRatio(1, 4));
    return quarter * (sigmaBar_.at(mu) * sigma_.at(nu) - sigmaBar_.at(nu) * sigma_.at(mu));
}

bool SigmaSet::signatureConsistent() const {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Matrix lhs2 = sigma_[mu] * sigmaBar_[nu] + sigma_[nu] * sigmaBar_[mu];
            Matrix rhs2 = Scalar(eta(mu, nu)) * (Scalar(2) * Matrix::identity(2));
            if (lhs2 != rhs2) return false;
            Matrix lhs4 = gamma_[mu] * gamma_[nu] + gamma_[nu] * gamma_[mu];
            Matrix rhs4 = Scalar(eta(mu, nu)) * (Scalar(2) * Matrix::identity(4));
            if (lhs4 != rhs4) return false;
        }
    return true;
}

void SigmaSet::verify() const {
    // The flipped signature exists for diagnostics; it is allowed to fail
    // the anticommutator identity and callers can query signatureConsistent().
    if (mostlyMinus_ && !signatureConsistent())
        throw ConventionViolation("Clifford anticommutator identity fails");
    for (int mu = 0; mu < 4; ++mu)
        if (sigma_[mu].dagger() != sigma_[mu])
            throw ConventionViolation("sigma^" + std::to_string(mu) + " not hermitian");
    // raise then lower is the identity on both spinor kinds
    for (EpsilonKind kind : {EpsilonKind::SpinorUndotted, EpsilonKind::SpinorDotted}) {
        for (int basis = 0; basis < 2; ++basis) {
            SpinorVector v{};
            v[basis] = Scalar(1);
            SpinorVector w = spinorRaiseLower(
                spinorRaiseLower(v, IndexDirection::Lower, kind),
                IndexDirection::Raise, kind);
            if (w != v) throw ConventionViolation("raise/lower not the identity");
        }
    }
}

const SigmaSet& conventionSigmas() {
    static const SigmaSet tables(true);
    return tables;
}

} // namespace liefour
