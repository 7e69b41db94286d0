#ifndef LIEFOUR_SCALAR_HPP
#define LIEFOUR_SCALAR_HPP

#include "liefour/gaussian.hpp"

#include <map>
#include <string>

namespace liefour {

/// Exponent vector, keyed by symbol name.  Zero exponents are never stored,
/// so map equality is monomial equality and map ordering (lexicographic on
/// names, then exponents) is a deterministic monomial order.
using Monomial = std::map<std::string, unsigned>;

/// Sparse multivariate polynomial over Gaussian rationals in named commuting
/// symbols.  All symbols are real (fixed by conjugation).  Canonical form:
/// no zero coefficients stored, so structural equality is polynomial
/// equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) { if (n != 0) terms_[{}] = GaussianRational(n); }
    Scalar(const GaussianRational& c) { if (!c.isZero()) terms_[{}] = c; }

    static Scalar symbol(const std::string& name) {
        Scalar s;
        s.terms_[{{name, 1u}}] = GaussianRational(1);
        return s;
    }
    static Scalar i() { return Scalar(GaussianRational::i()); }

    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    GaussianRational constantValue() const; // requires isConstant()

    unsigned degree() const;

    Scalar conj() const;
    GaussianRational eval(const std::map<std::string, GaussianRational>& bindings) const;
    Scalar substitute(const std::map<std::string, Scalar>& bindings) const;
    Scalar pow(unsigned n) const;

    void addTerm(const Monomial& m, const GaussianRational& c);

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.terms_ < b.terms_; }

    /// Canonical rendering in the presentation-file grammar.
    std::string str() const;
    /// Parse the same grammar: rationals a/b, i, symbols, + - * ^ ( ).
    static Scalar parse(const std::string& text);

private:
    std::map<Monomial, GaussianRational> terms_;
};

} // namespace liefour

#endif
