#include <catch_amalgamated.hpp>

#include <cmath>

#include "rwa/fock.hpp"

using namespace rwa;
using Catch::Matchers::WithinAbs;

TEST_CASE("truncation config") {
    const TruncationConfig cfg{10};
    CHECK(cfg.field_dim() == 11);
    CHECK(cfg.joint_dim() == 22);
    CHECK(cfg.index(2, 0) == 0);
    CHECK(cfg.index(2, 10) == 10);
    CHECK(cfg.index(1, 0) == 11);
    CHECK_THROWS_AS(cfg.index(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(cfg.index(1, 11), std::invalid_argument);
    CHECK_THROWS_AS(TruncationConfig{0}.validate(), std::invalid_argument);
}

TEST_CASE("ladder operators") {
    const TruncationConfig cfg{10};
    const LadderOps l = ladder_ops(cfg);
    CHECK_THAT(l.a(2, 3).real(), WithinAbs(std::sqrt(3.0), 1e-15));
    CHECK((l.a.adjoint() - l.a_dag).max_abs() == 0.0);
    CHECK(((l.a_dag * l.a) - l.n_hat).max_abs() < 1e-14);
    // [a, a^dag] = 1 except the corner, where it is -n_max
    ComplexMatrix target = ComplexMatrix::identity(cfg.field_dim());
    target(10, 10) = -10.0;
    CHECK(commutator_deviation(l.a, l.a_dag, target) < 1e-13);
}

TEST_CASE("quadratures obey [x, p] = -i in the bulk with a corner defect") {
    const TruncationConfig cfg{10};
    const QuadratureOps q = quadrature_ops(cfg);
    CHECK(q.x_hat.hermiticity_deviation() < 1e-15);
    CHECK(q.p_hat.hermiticity_deviation() < 1e-15);
    const ComplexMatrix c = q.x_hat * q.p_hat - q.p_hat * q.x_hat;
    for (std::size_t i = 0; i < 10; ++i) CHECK(std::abs(c(i, i) - Complex(0, -1)) < 1e-14);
    // full deviation from -i I is concentrated on the last diagonal entry: |-i (n_max + 1)|
    const ComplexMatrix target = ComplexMatrix::identity(cfg.field_dim()) * Complex(0, -1);
    CHECK_THAT(commutator_deviation(q.x_hat, q.p_hat, target), WithinAbs(11.0, 1e-12));
    // x^2 + p^2 = 2n + 1 away from the corner
    const ComplexMatrix s = q.x_hat * q.x_hat + q.p_hat * q.p_hat;
    for (std::size_t n = 0; n < 10; ++n) CHECK_THAT(s(n, n).real(), WithinAbs(2.0 * n + 1.0, 1e-13));
}

TEST_CASE("Pauli algebra with sz|2> = +|2>") {
    const QubitOps s = qubit_ops();
    CHECK(s.sigma_z(0, 0) == Complex(1, 0));
    CHECK(s.sigma_plus(0, 1) == Complex(1, 0));
    CHECK(commutator_deviation(s.sigma_x, s.sigma_y, s.sigma_z * Complex(0, 2)) < 1e-15);
    CHECK(((s.sigma_plus + s.sigma_minus) - s.sigma_x).max_abs() == 0.0);
    CHECK(((s.sigma_plus - s.sigma_minus) * Complex(0, -1) - s.sigma_y).max_abs() == 0.0);
}

TEST_CASE("embedding is qubit-outer, field-inner") {
    const TruncationConfig cfg{4};
    const LadderOps l = ladder_ops(cfg);
    const QubitOps s = qubit_ops();
    const ComplexMatrix n = embed_field(l.n_hat, cfg);
    const ComplexMatrix z = embed_qubit(s.sigma_z, cfg);
    CHECK(n.dim() == 10);
    CHECK(n(cfg.index(1, 3), cfg.index(1, 3)) == Complex(3, 0));
    CHECK(z(cfg.index(1, 3), cfg.index(1, 3)) == Complex(-1, 0));
    CHECK(z(cfg.index(2, 0), cfg.index(2, 0)) == Complex(1, 0));
    const ComplexMatrix both = embed(l.a, s.sigma_plus, cfg);
    CHECK_THAT(both(cfg.index(2, 0), cfg.index(1, 1)).real(), WithinAbs(1.0, 1e-15));
    CHECK_THROWS_AS(embed(ComplexMatrix(3), std::nullopt, cfg), std::invalid_argument);
    const ComplexVector b = basis_state(1, 2, cfg);
    CHECK(b[cfg.index(1, 2)] == Complex(1, 0));
    CHECK(norm(b) == 1.0);
}
