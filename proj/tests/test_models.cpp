#include <catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "rwa/models.hpp"

using namespace rwa;
using Catch::Matchers::WithinAbs;

namespace {

// Independent reference: lab JC from scratch in Eigen, same basis ordering.
Eigen::MatrixXcd eigen_jc_lab(const ModelParams& p, std::size_t n_max) {
    const Eigen::Index d = static_cast<Eigen::Index>(n_max + 1);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    for (Eigen::Index n = 0; n < d; ++n) {
        h(n, n) = p.omega * static_cast<double>(n) + 0.5 * p.Omega;         // |2>|n>
        h(d + n, d + n) = p.omega * static_cast<double>(n) - 0.5 * p.Omega;  // |1>|n>
        if (n + 1 < d) {
            // <2, n| sqrt2 g s+ a |1, n+1> = sqrt2 g sqrt(n+1)
            const double c = std::sqrt(2.0) * p.g * std::sqrt(static_cast<double>(n + 1));
            h(n, d + n + 1) = c;
            h(d + n + 1, n) = c;
        }
    }
    return h;
}

double max_diff(const ComplexMatrix& a, const Eigen::MatrixXcd& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
    return m;
}

}  // namespace

TEST_CASE("parameter validation and tags") {
    CHECK_THROWS_AS((ModelParams{0.0, 1.0, 0.1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{1.0, 1.0, -0.1}.validate()), std::invalid_argument);
    CHECK(parse_model_kind("jc") == ModelKind::jc_lab);
    CHECK(parse_model_kind("rabi_quadrature") == ModelKind::rabi_quadrature);
    CHECK_THROWS_AS(parse_model_kind("dicke"), std::invalid_argument);
    CHECK_THROWS_AS(parse_frame("rotating"), std::invalid_argument);
    CHECK(is_jc(ModelKind::jc_quadrature));
    CHECK(frame_of(ModelKind::rabi_lab) == Frame::lab);
}

TEST_CASE("lab JC matches an independent construction") {
    const ModelParams p{1.0, 1.3, 0.27};
    const TruncationConfig cfg{12};
    CHECK(max_diff(build_jc(p, cfg, Frame::lab), eigen_jc_lab(p, 12)) < 1e-14);
}

TEST_CASE("all Hamiltonians are Hermitian") {
    const ModelParams p{1.0, 0.8, 0.6};
    const TruncationConfig cfg{15};
    for (ModelKind k : {ModelKind::jc_lab, ModelKind::jc_quadrature, ModelKind::rabi_lab, ModelKind::rabi_quadrature})
        CHECK(build_hamiltonian(k, p, cfg).hermiticity_deviation() < 1e-15);
}

TEST_CASE("quadrature JC is the lab JC minus omega N") {
    const ModelParams p{1.0, 1.5, 0.4};
    const TruncationConfig cfg{20};
    const SymmetryOps sym = symmetry_ops(cfg);
    const ComplexMatrix diff = build_jc(p, cfg, Frame::lab) - sym.excitation_number * p.omega - build_jc(p, cfg, Frame::quadrature);
    CHECK(diff.max_abs() < 1e-14);
}

TEST_CASE("quadrature Rabi is the lab Rabi plus omega/2 away from the Fock edge") {
    const ModelParams p{1.0, 1.0, 0.7};
    const TruncationConfig cfg{20};
    const ComplexMatrix diff = build_rabi(p, cfg, Frame::quadrature) - build_rabi(p, cfg, Frame::lab);
    for (std::size_t i = 0; i < diff.dim(); ++i) {
        for (std::size_t j = 0; j < diff.dim(); ++j) {
            const bool edge = (i % cfg.field_dim()) == cfg.n_max;
            const Complex expected = (i == j && !edge) ? Complex(vacuum_offset(p), 0) : Complex(0, 0);
            if (!edge) CHECK(std::abs(diff(i, j) - expected) < 1e-13);
        }
    }
}

TEST_CASE("symmetries: JC conserves N, Rabi conserves parity but not N") {
    const TruncationConfig cfg{30};
    const SymmetryOps sym = symmetry_ops(cfg);
    const ComplexMatrix zero(cfg.joint_dim());
    const ModelParams p{1.0, 1.2, 0.5};
    for (Frame f : {Frame::lab, Frame::quadrature}) {
        CHECK(commutator_deviation(build_jc(p, cfg, f), sym.excitation_number, zero) < 1e-13);
        CHECK(commutator_deviation(build_rabi(p, cfg, f), sym.parity, zero) < 1e-13);
        CHECK(commutator_deviation(build_rabi(p, cfg, f), sym.excitation_number, zero) > 0.1);
    }
}

TEST_CASE("analytic dressed doublets are exact eigenpairs") {
    const TruncationConfig cfg{25};
    for (double delta : {-0.3, 0.0, 0.5}) {
        for (double g : {0.0, 0.05, 1.0}) {
            const ModelParams p{1.0, 1.0 + delta, g};
            const ComplexMatrix h = build_jc(p, cfg, Frame::lab);
            for (std::size_t n : {1u, 2u, 7u, 25u}) {
                const DressedDoublet d = jc_doublet_analytic(n, p);
                CHECK(d.energies[0] <= d.energies[1]);
                for (std::size_t w = 0; w < 2; ++w) {
                    const ComplexVector v = d.state(w, cfg);
                    const ComplexVector hv = rwa::apply(h, v);
                    double res = 0.0;
                    for (std::size_t i = 0; i < v.size(); ++i) res = std::max(res, std::abs(hv[i] - d.energies[w] * v[i]));
                    CHECK(res < 1e-12);
                }
            }
        }
    }
    CHECK_THROWS_AS(jc_doublet_analytic(0, ModelParams{}), std::invalid_argument);
    CHECK_THAT(jc_empty_state_energy(ModelParams{1.0, 1.4, 0.2}), WithinAbs(-0.7, 1e-15));
}

TEST_CASE("resonant doublet has equal weights") {
    const DressedDoublet d = jc_doublet_analytic(3, ModelParams{1.0, 1.0, 0.2});
    CHECK_THAT(d.theta, WithinAbs(std::numbers::pi / 4, 1e-15));
    CHECK_THAT(d.coefficients[0][1] * d.coefficients[0][1], WithinAbs(0.5, 1e-15));
}

TEST_CASE("U(phi) conjugation") {
    const TruncationConfig cfg{18};
    const ModelParams p{1.0, 1.1, 0.45};
    const ComplexMatrix h = build_rabi(p, cfg, Frame::quadrature);
    const double phi = 0.83;
    const ComplexMatrix u = u_phi(phi, cfg);
    const ComplexMatrix explicit_form = u * h * u.adjoint();
    CHECK((rotate_hamiltonian(h, phi, cfg) - explicit_form).max_abs() < 1e-14);
    CHECK((u_phi(2.0 * std::numbers::pi, cfg) - ComplexMatrix::identity(cfg.joint_dim())).max_abs() == 0.0);
    CHECK((rotate_hamiltonian(h, 2.0 * std::numbers::pi, cfg) - h).max_abs() == 0.0);

    // U a U^dag = e^{i phi} a
    const LadderOps l = ladder_ops(TruncationConfig{18});
    const ComplexMatrix ua = u * embed_field(l.a, cfg) * u.adjoint();
    CHECK((ua - embed_field(l.a, cfg) * std::polar(1.0, phi)).max_abs() < 1e-14);

    const auto e0 = hermitian_eigvals(h);
    const auto e1 = hermitian_eigvals(rotate_hamiltonian(h, phi, cfg));
    for (std::size_t i = 0; i < e0.size(); ++i) CHECK_THAT(e1[i], WithinAbs(e0[i], 1e-11));
    CHECK_THROWS_AS(rotate_hamiltonian(ComplexMatrix(3), phi, cfg), std::invalid_argument);
}

TEST_CASE("rotated closed forms match explicit conjugation") {
    const TruncationConfig cfg{16};
    const ModelParams p{1.0, 1.25, 0.3};
    for (double phi : {0.0, 0.4, std::numbers::pi / 2, 2.5}) {
        const RotatedFormReport r = compare_rotated_forms(p, phi, cfg);
        CHECK(r.jc_vs_closed < 1e-13);
        CHECK(r.rabi_vs_closed < 1e-13);
    }
    // the printed Rabi form has the opposite sign on the p sigma_x term
    const RotatedFormReport half = compare_rotated_forms(p, std::numbers::pi / 2, cfg);
    CHECK(half.rabi_vs_printed > 0.1);
    const RotatedFormReport zero = compare_rotated_forms(p, 0.0, cfg);
    CHECK(zero.rabi_vs_printed < 1e-13);
    // the printed JC form differs from the un-rotated one already at phi = 0
    CHECK(zero.jc_vs_printed_g > 0.1);
    CHECK(zero.jc_vs_printed_g_rt2 > 0.1);
}
