// surfaces.hpp: mean-field Born-Oppenheimer surfaces over the (x, p) plane,
// gap-locus classification and the closed-form JC Berry phases.

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "rwa/models.hpp"

namespace rwa {

/// Surfaces indexed [ix][ip].
struct SurfaceGrid {
    std::vector<double> x_axis;
    std::vector<double> p_axis;
    std::vector<std::vector<double>> upper;
    std::vector<std::vector<double>> lower;
    std::vector<std::vector<double>> gap;
    ModelKind model = ModelKind::jc_lab;
};

/// JC:   E+- = +-sqrt(Delta^2/4 + g^2 (x^2 + p^2))
/// Rabi: E+- = omega (x^2 + p^2)/2 +- sqrt(Omega^2/4 + 4 g^2 x^2)
SurfaceGrid boa_surface(ModelKind kind, const ModelParams& p, std::span<const double> x_axis,
                        std::span<const double> p_axis);

/// Pointwise variant of boa_surface; returns {lower, upper}.
std::pair<double, double> boa_energies(ModelKind kind, const ModelParams& p, double x, double q);

/// The 2x2 spin Hamiltonian with (x, p) frozen to numbers.
ComplexMatrix frozen_spin_hamiltonian(ModelKind kind, const ModelParams& p, double x, double q);

enum class Locus { point, line, none };
std::string_view to_string(Locus locus);

struct DegeneracyReport {
    double min_gap = 0.0;
    double tol_gap = 0.0;
    Locus locus = Locus::none;
    std::string_view line_axis;  // "x=const" or "p=const" for lines, empty otherwise
    std::vector<std::pair<double, double>> coordinates;  // (x, p) with gap <= min_gap + tol_gap
};

/// Estimated tolerance 2 * cell diagonal * max finite-difference slope of the gap.
double default_gap_tolerance(const SurfaceGrid& s);

/// Throws std::invalid_argument for an empty grid or one not covering the origin.
DegeneracyReport classify_degeneracy(const SurfaceGrid& s, std::optional<double> tol_gap = std::nullopt);

enum class Branch { plus, minus };
Branch parse_branch(std::string_view s);
inline double sign_of(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

/// +-pi (1 - (Delta/2) / sqrt(Delta^2/4 + g^2 rho^2)).
/// Throws std::domain_error at the conical intersection (Delta = 0, rho = 0).
double berry_boa_jc(double rho, const ModelParams& p, Branch sign);

/// rho with rho^2 / 2 = n + 1/2.
double rho_from_photon_number(std::size_t n);

/// +-pi (1 - (Delta/2) / sqrt(Delta^2/4 + g^2 (n + 1))).
double berry_exact_jc(std::size_t n, const ModelParams& p, Branch sign);

/// The ground state (|1>|0>) carries no phase.
inline double berry_exact_jc_ground() { return 0.0; }

}  // namespace rwa
