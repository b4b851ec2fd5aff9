// linalg.hpp: dense complex matrices and the Hermitian eigensolver

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rwa {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr Complex I_unit{0.0, 1.0};

/// Raised when a numerical routine cannot deliver a result meeting its
/// accuracy contract (non-convergence, ambiguous continuation, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Square, row-major, dense complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::span<const double> diag);

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * dim_ + col];
    }

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;
    /// max |A(i,j) - conj(A(j,i))|
    double hermiticity_deviation() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s) noexcept;

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, double s) { return m *= Complex(s, 0.0); }
    friend ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex(s, 0.0); }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector apply(const ComplexMatrix& a, std::span<const Complex> v);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

struct EigenSystem {
    std::vector<double> values;          // ascending
    std::vector<ComplexVector> vectors;  // vectors[i] pairs with values[i]
    double residual = 0.0;               // max_i ||A v_i - values[i] v_i||_inf
};

inline constexpr double default_eig_tol = 1e-10;
inline constexpr int ql_iteration_cap = 50;

/// Full eigendecomposition of a Hermitian matrix: Householder reduction to
/// real tridiagonal form, then implicit-shift QL with accumulated vectors.
/// Decoupled diagonal blocks (exact zero couplings) are solved separately.
/// Throws std::invalid_argument if A deviates from Hermitian by more than
/// tol*max_abs(A), and NumericalError on non-convergence or a residual
/// above tol*max_abs(A).
EigenSystem hermitian_eig(const ComplexMatrix& a, double tol = default_eig_tol);

/// Eigenvalues only (ascending); same algorithm without vector accumulation.
std::vector<double> hermitian_eigvals(const ComplexMatrix& a, double tol = default_eig_tol);

struct Expectation {
    double value = 0.0;
    double imag_part = 0.0;
};

Expectation expectation_detail(const ComplexMatrix& a, std::span<const Complex> v);

/// Re <v|A|v>; throws NumericalError when the imaginary part exceeds 1e-10.
double expectation(const ComplexMatrix& a, std::span<const Complex> v);

/// Frobenius norm of AB - BA - target.
double commutator_deviation(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& target);

}  // namespace rwa
