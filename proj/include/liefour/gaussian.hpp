#ifndef LIEFOUR_GAUSSIAN_HPP
#define LIEFOUR_GAUSSIAN_HPP

#include <gmpxx.h>

#include <string>

namespace liefour {

/// Exact Gaussian rational re + i*im.  mpq_class keeps both parts fully
/// reduced with positive denominator, so structural equality is value
/// equality.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) { canon(); }
    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) { canon(); }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussianRational fromRatio(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isReal() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, mpq_class(-im_)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {mpq_class(-a.re_), mpq_class(-a.im_)};
    }
    // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
        return a * GaussianRational{mpq_class(b.re_ / n), mpq_class(-b.im_ / n)};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Canonical rendering: "re", "im*i", or "(re+im*i)".
    std::string str() const;

private:
    void canon() {
        re_.canonicalize();
        im_.canonicalize();
    }

    mpq_class re_;
    mpq_class im_;
};

} // namespace liefour

#endif
