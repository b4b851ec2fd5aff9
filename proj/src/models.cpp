#include "rwa/models.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace rwa {

void ModelParams::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("ModelParams: omega must be > 0");
    if (!(Omega >= 0.0) || !std::isfinite(Omega)) throw std::invalid_argument("ModelParams: Omega must be >= 0");
    if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("ModelParams: g must be >= 0");
}

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::jc_lab: return "jc_lab";
        case ModelKind::jc_quadrature: return "jc_quadrature";
        case ModelKind::rabi_lab: return "rabi_lab";
        case ModelKind::rabi_quadrature: return "rabi_quadrature";
    }
    throw std::invalid_argument("unknown model kind");
}

std::string_view to_string(Frame frame) {
    switch (frame) {
        case Frame::lab: return "lab";
        case Frame::quadrature: return "quadrature";
    }
    throw std::invalid_argument("unknown frame tag");
}

ModelKind parse_model_kind(std::string_view name) {
    if (name == "jc" || name == "jc_lab") return ModelKind::jc_lab;
    if (name == "jc_quadrature") return ModelKind::jc_quadrature;
    if (name == "rabi" || name == "rabi_lab") return ModelKind::rabi_lab;
    if (name == "rabi_quadrature") return ModelKind::rabi_quadrature;
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

Frame parse_frame(std::string_view name) {
    if (name == "lab") return Frame::lab;
    if (name == "quadrature") return Frame::quadrature;
    throw std::invalid_argument("invalid frame tag '" + std::string(name) + "'");
}

bool is_jc(ModelKind kind) noexcept { return kind == ModelKind::jc_lab || kind == ModelKind::jc_quadrature; }

Frame frame_of(ModelKind kind) noexcept {
    return (kind == ModelKind::jc_lab || kind == ModelKind::rabi_lab) ? Frame::lab : Frame::quadrature;
}

namespace {

struct Operators {
    LadderOps ladder;
    QuadratureOps quad;
    QubitOps qubit;
};

Operators operators(const TruncationConfig& cfg) { return {ladder_ops(cfg), quadrature_ops(cfg), qubit_ops()}; }

ComplexMatrix oscillator_quadrature(const Operators& ops, const TruncationConfig& cfg) {
    // (p^2 + x^2)/2 on the field factor
    ComplexMatrix h = matmul(ops.quad.p_hat, ops.quad.p_hat);
    h += matmul(ops.quad.x_hat, ops.quad.x_hat);
    h *= 0.5;
    return embed_field(h, cfg);
}

void check_frame(Frame frame) {
    if (frame != Frame::lab && frame != Frame::quadrature) throw std::invalid_argument("invalid frame tag");
}

}  // namespace

ComplexMatrix build_rabi(const ModelParams& p, const TruncationConfig& cfg, Frame frame) {
    check_frame(frame);
    p.validate();
    const Operators ops = operators(cfg);
    ComplexMatrix h = embed_qubit(ops.qubit.sigma_z, cfg) * (0.5 * p.Omega);
    if (frame == Frame::lab) {
        h += embed_field(ops.ladder.n_hat, cfg) * p.omega;
        h += embed(ops.ladder.a_dag + ops.ladder.a, ops.qubit.sigma_x, cfg) * (p.g * std::numbers::sqrt2);
    } else {
        h += oscillator_quadrature(ops, cfg) * p.omega;
        h += embed(ops.quad.x_hat, ops.qubit.sigma_x, cfg) * (2.0 * p.g);
    }
    return h;
}

ComplexMatrix build_jc(const ModelParams& p, const TruncationConfig& cfg, Frame frame) {
    check_frame(frame);
    p.validate();
    const Operators ops = operators(cfg);
    if (frame == Frame::lab) {
        ComplexMatrix h = embed_field(ops.ladder.n_hat, cfg) * p.omega;
        h += embed_qubit(ops.qubit.sigma_z, cfg) * (0.5 * p.Omega);
        ComplexMatrix coupling = embed(ops.ladder.a_dag, ops.qubit.sigma_minus, cfg);
        coupling += embed(ops.ladder.a, ops.qubit.sigma_plus, cfg);
        h += coupling * (p.g * std::numbers::sqrt2);
        return h;
    }
    ComplexMatrix h = embed_qubit(ops.qubit.sigma_z, cfg) * (0.5 * p.delta());
    ComplexMatrix coupling = embed(ops.quad.x_hat, ops.qubit.sigma_x, cfg);
    coupling += embed(ops.quad.p_hat, ops.qubit.sigma_y, cfg);
    h += coupling * p.g;
    return h;
}

ComplexMatrix build_hamiltonian(ModelKind kind, const ModelParams& p, const TruncationConfig& cfg) {
    switch (kind) {
        case ModelKind::jc_lab: return build_jc(p, cfg, Frame::lab);
        case ModelKind::jc_quadrature: return build_jc(p, cfg, Frame::quadrature);
        case ModelKind::rabi_lab: return build_rabi(p, cfg, Frame::lab);
        case ModelKind::rabi_quadrature: return build_rabi(p, cfg, Frame::quadrature);
    }
    throw std::invalid_argument("unknown model kind");
}

ComplexVector u_phi_diagonal(double phi, const TruncationConfig& cfg) {
    cfg.validate();
    // Reduce first so U(2 pi k) is exactly the identity.
    const double reduced = std::remainder(phi, 2.0 * std::numbers::pi);
    const std::size_t d = cfg.field_dim();
    ComplexVector diag(cfg.joint_dim());
    for (std::size_t n = 0; n < d; ++n) {
        const double angle = -static_cast<double>(n) * reduced;
        const Complex z = n == 0 ? Complex(1.0, 0.0) : Complex(std::cos(angle), std::sin(angle));
        diag[n] = z;
        diag[d + n] = z;
    }
    return diag;
}

ComplexMatrix u_phi(double phi, const TruncationConfig& cfg) {
    return ComplexMatrix::diagonal(std::span<const Complex>(u_phi_diagonal(phi, cfg)));
}

ComplexMatrix rotate_hamiltonian(const ComplexMatrix& h, double phi, const TruncationConfig& cfg) {
    if (h.dim() != cfg.joint_dim()) {
        std::ostringstream msg;
        msg << "rotate_hamiltonian: matrix dimension " << h.dim() << " does not match joint dimension "
            << cfg.joint_dim();
        throw std::invalid_argument(msg.str());
    }
    const ComplexVector u = u_phi_diagonal(phi, cfg);
    const std::size_t n = h.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex hij = h(i, j);
            if (hij == Complex(0.0, 0.0)) continue;
            out(i, j) = u[i] * hij * std::conj(u[j]);
        }
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex(out(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = avg;
            out(j, i) = std::conj(avg);
        }
    }
    return out;
}

ComplexVector DressedDoublet::state(std::size_t which, const TruncationConfig& cfg) const {
    if (which > 1) throw std::invalid_argument("DressedDoublet::state: index must be 0 (lower) or 1 (upper)");
    if (n > cfg.n_max) throw std::invalid_argument("DressedDoublet::state: doublet lies beyond the truncation");
    ComplexVector v(cfg.joint_dim(), Complex(0.0, 0.0));
    v[cfg.index(2, n - 1)] = coefficients[which][0];
    v[cfg.index(1, n)] = coefficients[which][1];
    return v;
}

DressedDoublet jc_doublet_analytic(std::size_t n, const ModelParams& p) {
    if (n == 0)
        throw std::invalid_argument(
            "jc_doublet_analytic: n must be >= 1 (the empty state |1>|0> is not part of a doublet)");
    p.validate();
    DressedDoublet d;
    d.n = n;
    const double nn = static_cast<double>(n);
    const double delta = p.delta();
    const double coupling = 2.0 * p.g * std::sqrt(2.0 * nn);
    d.theta = delta == 0.0 ? 0.25 * std::numbers::pi : 0.5 * std::atan2(coupling, delta);
    const double split = std::sqrt(0.25 * delta * delta + 2.0 * p.g * p.g * nn);
    const double mean = p.omega * (nn - 0.5);
    d.energies = {mean - split, mean + split};
    const double c = std::cos(d.theta);
    const double s = std::sin(d.theta);
    d.coefficients = {{{-s, c}, {c, s}}};
    return d;
}

SymmetryOps symmetry_ops(const TruncationConfig& cfg) {
    const LadderOps l = ladder_ops(cfg);
    const QubitOps q = qubit_ops();
    SymmetryOps s;
    s.excitation_number = embed_field(l.n_hat, cfg);
    s.excitation_number += embed_qubit(q.sigma_z, cfg) * 0.5;
    std::vector<double> signs(cfg.field_dim());
    for (std::size_t n = 0; n < signs.size(); ++n) signs[n] = (n % 2 == 0) ? 1.0 : -1.0;
    s.parity = embed(ComplexMatrix::diagonal(std::span<const double>(signs)), q.sigma_z, cfg);
    return s;
}

namespace {

struct RotatedQuadratures {
    ComplexMatrix x_rot;  // cos x + sin p
    ComplexMatrix p_rot;  // cos p - sin x
};

RotatedQuadratures rotated_quadratures(double phi, const TruncationConfig& cfg) {
    const QuadratureOps q = quadrature_ops(cfg);
    const double c = std::cos(phi), s = std::sin(phi);
    return {q.x_hat * c + q.p_hat * s, q.p_hat * c - q.x_hat * s};
}

}  // namespace

ComplexMatrix jc_rotated_closed_form(const ModelParams& p, double phi, const TruncationConfig& cfg) {
    const QubitOps s = qubit_ops();
    const RotatedQuadratures r = rotated_quadratures(phi, cfg);
    ComplexMatrix h = embed_qubit(s.sigma_z, cfg) * (0.5 * p.delta());
    ComplexMatrix coupling = embed(r.x_rot, s.sigma_x, cfg);
    coupling += embed(r.p_rot, s.sigma_y, cfg);
    h += coupling * p.g;
    return h;
}

ComplexMatrix rabi_rotated_closed_form(const ModelParams& p, double phi, const TruncationConfig& cfg) {
    const Operators ops = operators(cfg);
    const RotatedQuadratures r = rotated_quadratures(phi, cfg);
    ComplexMatrix h = oscillator_quadrature(ops, cfg) * p.omega;
    h += embed_qubit(ops.qubit.sigma_z, cfg) * (0.5 * p.Omega);
    h += embed(r.x_rot, ops.qubit.sigma_x, cfg) * (2.0 * p.g);
    return h;
}

ComplexMatrix jc_rotated_printed_form(const ModelParams& p, double phi, double coupling_prefactor,
                                      const TruncationConfig& cfg) {
    const QubitOps s = qubit_ops();
    const QuadratureOps q = quadrature_ops(cfg);
    const double c = std::cos(phi), sn = std::sin(phi);
    ComplexMatrix h = embed_qubit(s.sigma_z, cfg) * (0.5 * p.delta());
    ComplexMatrix coupling = embed(q.x_hat * c + q.p_hat * sn, s.sigma_x, cfg);
    coupling += embed(q.x_hat * sn - q.p_hat * c, s.sigma_y, cfg);
    h += coupling * coupling_prefactor;
    return h;
}

ComplexMatrix rabi_rotated_printed_form(const ModelParams& p, double phi, const TruncationConfig& cfg) {
    const Operators ops = operators(cfg);
    const double c = std::cos(phi), s = std::sin(phi);
    ComplexMatrix h = oscillator_quadrature(ops, cfg) * p.omega;
    h += embed_qubit(ops.qubit.sigma_z, cfg) * (0.5 * p.Omega);
    h += embed(ops.quad.x_hat * c - ops.quad.p_hat * s, ops.qubit.sigma_x, cfg) * (2.0 * p.g);
    return h;
}

RotatedFormReport compare_rotated_forms(const ModelParams& p, double phi, const TruncationConfig& cfg) {
    const ComplexMatrix jc = rotate_hamiltonian(build_jc(p, cfg, Frame::quadrature), phi, cfg);
    const ComplexMatrix rabi = rotate_hamiltonian(build_rabi(p, cfg, Frame::quadrature), phi, cfg);
    RotatedFormReport r;
    r.phi = phi;
    r.jc_vs_closed = (jc - jc_rotated_closed_form(p, phi, cfg)).max_abs();
    r.jc_vs_printed_g = (jc - jc_rotated_printed_form(p, phi, p.g, cfg)).max_abs();
    r.jc_vs_printed_g_rt2 = (jc - jc_rotated_printed_form(p, phi, p.g / std::numbers::sqrt2, cfg)).max_abs();
    r.rabi_vs_closed = (rabi - rabi_rotated_closed_form(p, phi, cfg)).max_abs();
    r.rabi_vs_printed = (rabi - rabi_rotated_printed_form(p, phi, cfg)).max_abs();
    return r;
}

}  // namespace rwa
