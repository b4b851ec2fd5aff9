#include <catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "rwa/linalg.hpp"

using namespace rwa;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = u(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = Complex(u(rng), u(rng));
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
    Eigen::MatrixXcd m(a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a(i, j);
    return m;
}

double orthonormality_error(const EigenSystem& es) {
    double worst = 0.0;
    for (std::size_t i = 0; i < es.vectors.size(); ++i)
        for (std::size_t j = 0; j < es.vectors.size(); ++j)
            worst = std::max(worst, std::abs(inner(es.vectors[i], es.vectors[j]) - (i == j ? 1.0 : 0.0)));
    return worst;
}

}  // namespace

TEST_CASE("matrix arithmetic and products") {
    ComplexMatrix a(2), b(2);
    a(0, 0) = 1.0; a(0, 1) = Complex(0, 2); a(1, 0) = 3.0; a(1, 1) = 4.0;
    b(0, 0) = 0.5; b(1, 1) = -1.0; b(0, 1) = 1.0;
    const ComplexMatrix c = a * b;
    CHECK(c(0, 0) == Complex(0.5, 0));
    CHECK(c(0, 1) == Complex(1.0, -2.0));
    CHECK(c(1, 0) == Complex(1.5, 0));
    CHECK(c(1, 1) == Complex(-1.0, 0));
    CHECK((a + b)(0, 1) == Complex(1.0, 2.0));
    CHECK((a - a).max_abs() == 0.0);
    CHECK((2.0 * a)(1, 1) == Complex(8.0, 0.0));
    CHECK(a.adjoint()(1, 0) == Complex(0, -2));
    CHECK_THAT(a.frobenius_norm(), WithinAbs(std::sqrt(1 + 4 + 9 + 16.0), 1e-15));
    CHECK_THAT(a.hermiticity_deviation(), WithinAbs(std::abs(Complex(0, 2) - 3.0), 1e-15));
}

TEST_CASE("kron follows the outer-index-first layout") {
    ComplexMatrix a(2), b(3);
    a(0, 1) = 2.0;
    b(2, 0) = Complex(0, 1);
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.dim() == 6);
    CHECK(k(0 * 3 + 2, 1 * 3 + 0) == Complex(0, 2));
    CHECK(k.frobenius_norm() == 2.0);
}

TEST_CASE("inner is conjugate-linear in the first argument") {
    const ComplexVector u{Complex(0, 1), 1.0};
    const ComplexVector v{1.0, Complex(0, 1)};
    CHECK(inner(u, v) == Complex(0, 0));
    CHECK(inner(u, u) == Complex(2, 0));
    CHECK_THAT(norm(u), WithinAbs(std::sqrt(2.0), 1e-15));
    CHECK_THROWS_AS(inner(u, ComplexVector(3)), std::invalid_argument);
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(3), std::invalid_argument);
    CHECK_THROWS_AS(matmul(ComplexMatrix(2), ComplexMatrix(3)), std::invalid_argument);
    CHECK_THROWS_AS(rwa::apply(ComplexMatrix(2), ComplexVector(3)), std::invalid_argument);
}

TEST_CASE("eigensolver agrees with Eigen on random Hermitian matrices") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1u, 2u, 3u, 7u, 31u, 80u}) {
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexMatrix a = random_hermitian(n, rng);
            const EigenSystem es = hermitian_eig(a);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(to_eigen(a));
            REQUIRE(es.values.size() == n);
            for (std::size_t i = 0; i < n; ++i) CHECK_THAT(es.values[i], WithinAbs(oracle.eigenvalues()(i), 1e-11));
            CHECK(orthonormality_error(es) < 1e-12);
            CHECK(es.residual <= 1e-10 * a.max_abs());
            for (std::size_t i = 0; i < n; ++i) {
                // eigenvector agrees up to phase for simple eigenvalues
                Eigen::VectorXcd w = oracle.eigenvectors().col(static_cast<Eigen::Index>(i));
                Complex ov(0, 0);
                for (std::size_t k = 0; k < n; ++k) ov += std::conj(es.vectors[i][k]) * w(static_cast<Eigen::Index>(k));
                CHECK_THAT(std::abs(ov), WithinAbs(1.0, 1e-9));
            }
        }
    }
}

TEST_CASE("eigvals matches the full decomposition") {
    std::mt19937_64 rng(5);
    const ComplexMatrix a = random_hermitian(40, rng);
    const auto full = hermitian_eig(a).values;
    const auto vals = hermitian_eigvals(a);
    for (std::size_t i = 0; i < full.size(); ++i) CHECK_THAT(vals[i], WithinAbs(full[i], 1e-12));
}

TEST_CASE("shift invariance of the spectrum") {
    std::mt19937_64 rng(3);
    const ComplexMatrix a = random_hermitian(25, rng);
    const auto base = hermitian_eigvals(a);
    const auto shifted = hermitian_eigvals(a + ComplexMatrix::identity(25) * 3.25);
    for (std::size_t i = 0; i < base.size(); ++i) CHECK_THAT(shifted[i], WithinAbs(base[i] + 3.25, 1e-12));
}

TEST_CASE("block-diagonal and degenerate matrices") {
    ComplexMatrix a(4);
    a(0, 0) = 1.0; a(3, 3) = 1.0; a(1, 1) = -2.0; a(2, 2) = 5.0;
    a(0, 3) = Complex(0, 0.5);
    a(3, 0) = Complex(0, -0.5);
    const EigenSystem es = hermitian_eig(a);
    CHECK_THAT(es.values[0], WithinAbs(-2.0, 1e-14));
    CHECK_THAT(es.values[1], WithinAbs(0.5, 1e-14));
    CHECK_THAT(es.values[2], WithinAbs(1.5, 1e-14));
    CHECK_THAT(es.values[3], WithinAbs(5.0, 1e-14));
    CHECK(orthonormality_error(es) < 1e-14);

    const EigenSystem id = hermitian_eig(ComplexMatrix::identity(6) * 2.0);
    for (double v : id.values) CHECK(v == 2.0);
    CHECK(orthonormality_error(id) < 1e-15);
}

TEST_CASE("invalid inputs raise") {
    ComplexMatrix a(2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(a), std::invalid_argument);
    ComplexMatrix b(2);
    b(0, 0) = std::nan("");
    CHECK_THROWS_AS(hermitian_eig(b), std::invalid_argument);
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix()), std::invalid_argument);
}

TEST_CASE("expectation and commutators") {
    ComplexMatrix z(2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    const double r = 1.0 / std::sqrt(2.0);
    CHECK_THAT(expectation(z, ComplexVector{r, r}), WithinAbs(0.0, 1e-15));
    ComplexMatrix y(2);
    y(0, 1) = Complex(0, -1);
    y(1, 0) = Complex(0, 1);
    ComplexMatrix x(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    // [x, y] = 2 i z
    CHECK(commutator_deviation(x, y, z * Complex(0, 2)) < 1e-15);
    ComplexMatrix nonherm(2);
    nonherm(0, 1) = 1.0;
    CHECK_THROWS_AS(expectation(nonherm * Complex(0, 1), ComplexVector{r, r}), NumericalError);
}
