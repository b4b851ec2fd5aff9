#include "rwa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rwa {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex(0.0, 0.0)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

double ComplexMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_deviation() const noexcept {
    double dev = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(dim_, rhs.dim_, "matrix +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(dim_, rhs.dim_, "matrix -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "matmul");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    // i-k-j order; operator matrices here are mostly sparse, so zero a(i,k) rows are skipped.
    for (std::size_t i = 0; i < n; ++i) {
        Complex* crow = &c(i, 0);
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            const Complex* brow = &b(k, 0);
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix c(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return c;
}

ComplexVector apply(const ComplexMatrix& a, std::span<const Complex> v) {
    require_same_dim(a.dim(), v.size(), "apply");
    const std::size_t n = a.dim();
    ComplexVector out(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        Complex s(0.0, 0.0);
        const Complex* row = &a(i, 0);
        for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
        out[i] = s;
    }
    return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    require_same_dim(u.size(), v.size(), "inner");
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double ur = u[i].real(), ui = u[i].imag();
        const double vr = v[i].real(), vi = v[i].imag();
        re += ur * vr + ui * vi;
        im += ur * vi - ui * vr;
    }
    return {re, im};
}

double norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

Expectation expectation_detail(const ComplexMatrix& a, std::span<const Complex> v) {
    const Complex z = inner(v, apply(a, v));
    return {z.real(), z.imag()};
}

double expectation(const ComplexMatrix& a, std::span<const Complex> v) {
    const Expectation e = expectation_detail(a, v);
    if (std::abs(e.imag_part) > 1e-10) {
        std::ostringstream msg;
        msg << "expectation: imaginary part " << e.imag_part << " exceeds 1e-10 (operator not Hermitian?)";
        throw NumericalError(msg.str());
    }
    return e.value;
}

double commutator_deviation(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& target) {
    require_same_dim(a.dim(), b.dim(), "commutator_deviation");
    require_same_dim(a.dim(), target.dim(), "commutator_deviation");
    ComplexMatrix c = matmul(a, b);
    c -= matmul(b, a);
    c -= target;
    return c.frobenius_norm();
}

}  // namespace rwa
