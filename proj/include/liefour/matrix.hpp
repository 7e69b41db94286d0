#ifndef LIEFOUR_MATRIX_HPP
#define LIEFOUR_MATRIX_HPP

#include "liefour/error.hpp"
#include "liefour/scalar.hpp"

#include <vector>

namespace liefour {

/// Dense square matrix of exact Scalars.  Small dimensions only (<= 64 in
/// this project), so no sparsity games.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(size_t n) : n_(n), data_(n * n) {}

    static Matrix identity(size_t n) {
        Matrix m(n);
        for (size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
        return m;
    }
    static Matrix scalar(size_t n, const Scalar& s) {
        Matrix m(n);
        for (size_t k = 0; k < n; ++k) m(k, k) = s;
        return m;
    }

    size_t dim() const { return n_; }

    Scalar& operator()(size_t r, size_t c) { return data_[r * n_ + c]; }
    const Scalar& operator()(size_t r, size_t c) const { return data_[r * n_ + c]; }

    bool isZero() const {
        for (const auto& s : data_)
            if (!s.isZero()) return false;
        return true;
    }

    /// True when the matrix is s * identity for some Scalar s.
    bool isScalarMultipleOfIdentity() const {
        for (size_t r = 0; r < n_; ++r)
            for (size_t c = 0; c < n_; ++c)
                if (r != c && !(*this)(r, c).isZero()) return false;
        for (size_t k = 1; k < n_; ++k)
            if ((*this)(k, k) != (*this)(0, 0)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(n_);
        for (size_t r = 0; r < n_; ++r)
            for (size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    Matrix conj() const {
        Matrix m(n_);
        for (size_t r = 0; r < n_; ++r)
            for (size_t c = 0; c < n_; ++c) m(r, c) = (*this)(r, c).conj();
        return m;
    }

    /// Conjugate transpose.
    Matrix dagger() const { return conj().transpose(); }

    Matrix substitute(const std::map<std::string, Scalar>& bindings) const {
        Matrix m(n_);
        for (size_t r = 0; r < n_; ++r)
            for (size_t c = 0; c < n_; ++c)
                m(r, c) = (*this)(r, c).substitute(bindings);
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.sameDim(b);
        Matrix m(a.n_);
        for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.sameDim(b);
        Matrix m(a.n_);
        for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix m(a.n_);
        for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = -a.data_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.sameDim(b);
        Matrix m(a.n_);
        for (size_t r = 0; r < a.n_; ++r)
            for (size_t k = 0; k < a.n_; ++k) {
                const Scalar& ark = a(r, k);
                if (ark.isZero()) continue;
                for (size_t c = 0; c < a.n_; ++c) {
                    if (b(k, c).isZero()) continue;
                    m(r, c) += ark * b(k, c);
                }
            }
        return m;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& a) {
        Matrix m(a.n_);
        for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = s * a.data_[k];
        return m;
    }

    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Kronecker product.
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix m(a.n_ * b.n_);
        for (size_t ra = 0; ra < a.n_; ++ra)
            for (size_t ca = 0; ca < a.n_; ++ca) {
                if (a(ra, ca).isZero()) continue;
                for (size_t rb = 0; rb < b.n_; ++rb)
                    for (size_t cb = 0; cb < b.n_; ++cb)
                        m(ra * b.n_ + rb, ca * b.n_ + cb) = a(ra, ca) * b(rb, cb);
            }
        return m;
    }

private:
    void sameDim(const Matrix& o) const {
        if (n_ != o.n_)
            throw DimensionMismatch("matrix dimensions " + std::to_string(n_) +
                                    " vs " + std::to_string(o.n_));
    }

    size_t n_ = 0;
    std::vector<Scalar> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

} // namespace liefour

#endif
