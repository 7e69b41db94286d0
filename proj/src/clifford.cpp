#include "liefour/clifford.hpp"
#include "liefour/error.hpp"

#include <set>
#include <sstream>

namespace liefour {

namespace {

bool usesSymbol(const Scalar& s, const std::set<std::string>& names) {
    for (const auto& [mono, coeff] : s.terms())
        for (const auto& [sym, exp] : mono)
            if (names.count(sym)) return true;
    return false;
}

/// Total degree of a monomial counting only the given symbols.
unsigned degreeIn(const Monomial& mono, const std::set<std::string>& names) {
    unsigned d = 0;
    for (const auto& [sym, exp] : mono)
        if (names.count(sym)) d += exp;
    return d;
}

void requireHomogeneous(const Scalar& poly, unsigned degree,
                        const std::set<std::string>& names) {
    for (const auto& [mono, coeff] : poly.terms())
        if (degreeIn(mono, names) != degree)
            throw InhomogeneousTarget("target polynomial is not homogeneous of degree " +
                                      std::to_string(degree) +
                                      " in the form indeterminates");
}

} // namespace

void LinearForm::validate() const {
    if (indeterminates.size() != matrices.size())
        throw DimensionMismatch("one matrix per indeterminate is required");
    if (matrices.empty()) throw ValidationError("empty linear form");
    std::set<std::string> names(indeterminates.begin(), indeterminates.end());
    if (names.size() != indeterminates.size())
        throw ValidationError("duplicate indeterminate name");
    size_t dim = matrices.front().dim();
    for (const Matrix& m : matrices) {
        if (m.dim() != dim) throw DimensionMismatch("matrices differ in size");
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                if (usesSymbol(m(r, c), names))
                    throw ValidationError(
                        "an indeterminate appears inside a coefficient matrix");
    }
}

Matrix LinearForm::genericMatrix() const {
    validate();
    Matrix acc(matrices.front().dim());
    for (size_t k = 0; k < matrices.size(); ++k)
        acc += Scalar::symbol(indeterminates[k]) * matrices[k];
    return acc;
}

VerificationReport cliffordVerify(const LinearForm& form, const PolynomialTarget& target) {
    if (target.degree < 2)
        throw ValidationError("verification degree must be at least 2");
    std::set<std::string> names(form.indeterminates.begin(), form.indeterminates.end());
    requireHomogeneous(target.poly, target.degree, names);

    Matrix generic = form.genericMatrix();
    Matrix power = generic;
    for (unsigned k = 1; k < target.degree; ++k) power = power * generic;

    std::ostringstream subject;
    subject << form.indeterminates.size() << " matrices of dimension " << generic.dim()
            << ", degree " << target.degree;
    VerificationReport report("clifford-verify", subject.str());
    for (size_t r = 0; r < generic.dim(); ++r)
        for (size_t c = 0; c < generic.dim(); ++c) {
            report.countCase();
            Scalar want = (r == c) ? target.poly : Scalar();
            Scalar residual = power(r, c) - want;
            if (!residual.isZero())
                report.addFailure({{std::to_string(r), std::to_string(c)}, false,
                                   residual.str()});
        }
    return report;
}

QuadraticCompatibility quadraticCompatibilityCheck(const LinearForm& form) {
    Matrix generic = form.genericMatrix();
    Matrix square = generic * generic;
    QuadraticCompatibility out;
    if (square.isScalarMultipleOfIdentity()) {
        out.compatible = true;
        out.poly = square(0, 0);
        return out;
    }
    const Scalar& diag = square(0, 0);
    for (size_t r = 0; r < square.dim(); ++r)
        for (size_t c = 0; c < square.dim(); ++c) {
            const Scalar& entry = square(r, c);
            bool bad = (r == c) ? !(entry == diag) : !entry.isZero();
            if (bad) {
                out.obstruction = "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") = " + entry.str();
                return out;
            }
        }
    return out; // unreachable
}

GeneralizedClifford buildGeneralizedClifford(unsigned n) {
    if (n < 1) throw ValidationError("at least one generator is required");
    Matrix clock(4), shift(4);
    for (int k = 0; k < 4; ++k) {
        // clock entry i^k; shift sends basis state k to k+1 mod 4
        GaussianRational ik(1);
        for (int p = 0; p < k; ++p) ik *= GaussianRational::i();
        clock(k, k) = Scalar(ik);
        shift((k + 1) % 4, k) = Scalar(1);
    }

    GeneralizedClifford out;
    if (n == 1) {
        out.form.matrices.push_back(clock);
    } else {
        for (unsigned j = 1; j <= n; ++j) {
            Matrix word = Matrix::identity(1);
            for (unsigned slot = 1; slot < n; ++slot) {
                const Matrix& factor = (slot < j) ? shift
                                       : (slot == j) ? clock
                                                     : Matrix::identity(4);
                word = kron(word, factor);
            }
            // the last generator is the full shift string
            out.form.matrices.push_back(word);
        }
    }
    out.dim = out.form.matrices.front().dim();

    Scalar sum;
    for (unsigned j = 1; j <= n; ++j) {
        std::string name = "x_" + std::to_string(j);
        out.form.indeterminates.push_back(name);
        sum += Scalar::symbol(name).pow(4);
    }
    out.target = {sum, 4};

    // self-check: e_j e_k = i e_k e_j for j < k, and e_j^4 = 1
    Matrix id = Matrix::identity(out.dim);
    for (unsigned j = 0; j < n; ++j) {
        const Matrix& ej = out.form.matrices[j];
        if (ej * ej * ej * ej != id)
            throw SelfCheckFailed("generator " + std::to_string(j + 1) +
                                  " is not of order four");
        for (unsigned k = j + 1; k < n; ++k) {
            const Matrix& ek = out.form.matrices[k];
            if (ej * ek != Scalar::i() * (ek * ej))
                throw SelfCheckFailed("generators " + std::to_string(j + 1) + " and " +
                                      std::to_string(k + 1) + " do not i-commute");
        }
    }
    return out;
}

} // namespace liefour
