// spectra.hpp: coupling sweeps, Bloch-Siegert deviation, the JC ground-state
// crossing and truncation convergence.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rwa/fock.hpp"
#include "rwa/models.hpp"

namespace rwa {

struct SpectrumTable {
    std::vector<double> g_values;
    std::vector<std::vector<double>> levels;  // levels[row][k], each row ascending
    ModelKind model = ModelKind::jc_lab;
    ModelParams params;  // g unused; rows carry their own coupling
    TruncationConfig cfg;
};

/// The k lowest eigenvalues of a model at its parameter point.
std::vector<double> lowest_levels(ModelKind kind, const ModelParams& p, std::size_t k, const TruncationConfig& cfg);

SpectrumTable spectrum_sweep(ModelKind kind, const ModelParams& p, std::span<const double> g_grid, std::size_t k,
                             const TruncationConfig& cfg);

/// Uniform grid g_min, g_min + step, ..., g_max (inclusive, step-rounded).
std::vector<double> uniform_grid(double g_min, double g_max, double step);

/// |E_level^Rabi - E_level^JC| / |E_level^JC| with 1-based level index (lab frames).
double bloch_siegert(const ModelParams& p, double g, std::size_t level, const TruncationConfig& cfg);

struct CrossingReport {
    double analytic_g = 0.0;   // bisection on the analytic n = 1 doublet
    double numerical_g = 0.0;  // bisection on the diagonalized ground-state character
    double closed_form_g = 0.0;  // sqrt(omega Omega / 2)
    double quoted_g = 0.0;     // value quoted in the literature for omega = Omega = 1 (sqrt 2)
    bool quoted_value_discrepant = false;
    double discrepancy = 0.0;  // |analytic_g - quoted_g|
};

inline constexpr double crossing_tolerance = 1e-10;

/// Coupling at which the n = 1 lower dressed state drops below the empty state
/// |1>|0> (energy -Omega/2). Throws std::invalid_argument without a sign change
/// in [g_lo, g_hi].
CrossingReport ground_crossing(const ModelParams& p, const TruncationConfig& cfg, double g_lo, double g_hi);

struct ConvergenceRow {
    std::size_t n_max = 0;
    std::vector<double> levels;
    double max_change = 0.0;  // vs the previous row; NaN for the first row
};

std::vector<ConvergenceRow> convergence_study(ModelKind kind, const ModelParams& p, double g, std::size_t k,
                                              std::span<const std::size_t> n_list);

}  // namespace rwa
