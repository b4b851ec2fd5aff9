// models.hpp: Rabi and Jaynes-Cummings Hamiltonians, the phase rotation
// U(phi) = exp(-i n phi), analytic dressed states and symmetry operators.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "rwa/fock.hpp"
#include "rwa/linalg.hpp"

namespace rwa {

/// Energies in units of the resonator frequency (omega = 1 by default).
struct ModelParams {
    double omega = 1.0;  // resonator frequency
    double Omega = 1.0;  // qubit splitting
    double g = 0.0;      // coupling

    double delta() const noexcept { return Omega - omega; }
    void validate() const;
    ModelParams with_coupling(double coupling) const {
        ModelParams p = *this;
        p.g = coupling;
        return p;
    }
};

enum class ModelKind { jc_lab, jc_quadrature, rabi_lab, rabi_quadrature };
enum class Frame { lab, quadrature };

std::string_view to_string(ModelKind kind);
std::string_view to_string(Frame frame);
ModelKind parse_model_kind(std::string_view name);
Frame parse_frame(std::string_view name);
bool is_jc(ModelKind kind) noexcept;
Frame frame_of(ModelKind kind) noexcept;

/// Lab: omega a^dag a + (Omega/2) sz + g sqrt2 (a^dag + a) sx.
/// Quadrature: omega (p^2 + x^2)/2 + (Omega/2) sz + 2 g x sx.
ComplexMatrix build_rabi(const ModelParams& p, const TruncationConfig& cfg, Frame frame);

/// Lab: omega a^dag a + (Omega/2) sz + g sqrt2 (a^dag s- + s+ a).
/// Quadrature (interaction picture): (Delta/2) sz + g (x sx + p sy).
ComplexMatrix build_jc(const ModelParams& p, const TruncationConfig& cfg, Frame frame);

ComplexMatrix build_hamiltonian(ModelKind kind, const ModelParams& p, const TruncationConfig& cfg);

/// Zero-point offset between the Rabi quadrature and lab frames.
inline double vacuum_offset(const ModelParams& p) { return 0.5 * p.omega; }

/// Diagonal of U(phi) = exp(-i n phi) (x) 1 on the joint space.
ComplexVector u_phi_diagonal(double phi, const TruncationConfig& cfg);
ComplexMatrix u_phi(double phi, const TruncationConfig& cfg);

/// U(phi) H U(phi)^dag, symmetrized to be exactly Hermitian.
ComplexMatrix rotate_hamiltonian(const ComplexMatrix& h, double phi, const TruncationConfig& cfg);

/// JC excitation doublet n >= 1 spanned by (|2>|n-1>, |1>|n>).
/// Index 0 is the lower state (-sin t, cos t), index 1 the upper (cos t, sin t).
struct DressedDoublet {
    std::size_t n = 1;
    double theta = 0.0;                                 // tan(2 theta) = 2 g sqrt(2n) / Delta
    std::array<double, 2> energies{};                   // lower, upper (lab frame)
    std::array<std::array<double, 2>, 2> coefficients{};  // [state][(|2>|n-1>, |1>|n>)]

    ComplexVector state(std::size_t which, const TruncationConfig& cfg) const;
};

DressedDoublet jc_doublet_analytic(std::size_t n, const ModelParams& p);

/// The uncoupled JC eigenstate |1>|0>; its lab-frame energy is -Omega/2.
inline double jc_empty_state_energy(const ModelParams& p) { return -0.5 * p.Omega; }

struct SymmetryOps {
    ComplexMatrix excitation_number;  // n + sz/2
    ComplexMatrix parity;             // sz (x) (-1)^n
};

SymmetryOps symmetry_ops(const TruncationConfig& cfg);

/// Closed forms for the rotated quadrature Hamiltonians, from U a U^dag = e^{i phi} a:
///   JC:   (Delta/2) sz + g[(cos x + sin p) sx + (cos p - sin x) sy]
///   Rabi: omega (p^2+x^2)/2 + (Omega/2) sz + 2g (cos x + sin p) sx
ComplexMatrix jc_rotated_closed_form(const ModelParams& p, double phi, const TruncationConfig& cfg);
ComplexMatrix rabi_rotated_closed_form(const ModelParams& p, double phi, const TruncationConfig& cfg);

/// The printed rotated forms, kept for comparison only:
///   JC:   (Delta/2) sz + c[(cos x + sin p) sx + (sin x - cos p) sy]
///   Rabi: omega (p^2+x^2)/2 + (Omega/2) sz + 2g (cos x - sin p) sx
ComplexMatrix jc_rotated_printed_form(const ModelParams& p, double phi, double coupling_prefactor,
                                      const TruncationConfig& cfg);
ComplexMatrix rabi_rotated_printed_form(const ModelParams& p, double phi, const TruncationConfig& cfg);

struct RotatedFormReport {
    double phi = 0.0;
    double jc_vs_closed = 0.0;          // max-abs entry deviation
    double jc_vs_printed_g = 0.0;       // printed form with prefactor g
    double jc_vs_printed_g_rt2 = 0.0;   // printed form with prefactor g/sqrt2
    double rabi_vs_closed = 0.0;
    double rabi_vs_printed = 0.0;
};

/// Compares explicit conjugation of the quadrature Hamiltonians with both forms.
RotatedFormReport compare_rotated_forms(const ModelParams& p, double phi, const TruncationConfig& cfg);

}  // namespace rwa
