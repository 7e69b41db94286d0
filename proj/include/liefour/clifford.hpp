#ifndef LIEFOUR_CLIFFORD_HPP
#define LIEFOUR_CLIFFORD_HPP

#include "liefour/matrix.hpp"
#include "liefour/report.hpp"

namespace liefour {

/// A generic linear form sum_k x_k M_k: one square matrix per indeterminate.
struct LinearForm {
    std::vector<std::string> indeterminates;
    std::vector<Matrix> matrices;

    /// Throws DimensionMismatch (sizes) or ValidationError (an indeterminate
    /// appears inside a coefficient matrix, or duplicate indeterminates).
    void validate() const;
    /// sum_k x_k M_k as one symbolic matrix.
    Matrix genericMatrix() const;
};

/// A polynomial the d-th power of the form should equal (times identity).
/// Coefficients may involve further symbols; homogeneity is required only in
/// the form's indeterminates.
struct PolynomialTarget {
    Scalar poly;
    unsigned degree = 0;
};

/// Expands (sum x_k M_k)^degree entrywise and compares with poly * identity.
/// Exact check; one case per matrix entry.
VerificationReport cliffordVerify(const LinearForm& form, const PolynomialTarget& target);

struct QuadraticCompatibility {
    bool compatible = false;
    Scalar poly;             // P with (sum x_k M_k)^2 = P * 1, when compatible
    std::string obstruction; // first offending entry, when incompatible
};

/// Decides whether the squared form is a scalar matrix.
QuadraticCompatibility quadraticCompatibilityCheck(const LinearForm& form);

struct GeneralizedClifford {
    LinearForm form;
    PolynomialTarget target; // sum x_k^4, degree 4
    size_t dim = 0;
};

/// n generators from tensor words in the order-4 clock matrix
/// C = diag(1, i, -1, -i) and cyclic shift S (with C S = i S C):
/// e_j = S^(j-1) (x) C (x) 1...  for j < n and e_n = S^(n-1), acting on
/// 4^(n-1) states (n = 1 uses the single clock matrix on 4 states).  Then
/// e_j e_k = i e_k e_j for j < k and e_k^4 = 1, so the 4th power of the form
/// collapses to sum x_k^4 by q-binomial cancellation at q = i.
/// Self-verifies the commutation and order relations.
GeneralizedClifford buildGeneralizedClifford(unsigned n);

} // namespace liefour

#endif
