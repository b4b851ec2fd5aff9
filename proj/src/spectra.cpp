#include "rwa/spectra.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace rwa {

std::vector<double> lowest_levels(ModelKind kind, const ModelParams& p, std::size_t k, const TruncationConfig& cfg) {
    cfg.validate();
    if (k == 0 || k > cfg.joint_dim()) {
        std::ostringstream msg;
        msg << "requested " << k << " levels from a space of dimension " << cfg.joint_dim();
        throw std::invalid_argument(msg.str());
    }
    std::vector<double> values = hermitian_eigvals(build_hamiltonian(kind, p, cfg));
    values.resize(k);
    return values;
}

SpectrumTable spectrum_sweep(ModelKind kind, const ModelParams& p, std::span<const double> g_grid, std::size_t k,
                             const TruncationConfig& cfg) {
    cfg.validate();
    if (k == 0 || k > cfg.joint_dim()) {
        std::ostringstream msg;
        msg << "spectrum_sweep: k = " << k << " exceeds the joint dimension " << cfg.joint_dim();
        throw std::invalid_argument(msg.str());
    }
    for (double g : g_grid)
        if (!std::isfinite(g)) throw std::invalid_argument("spectrum_sweep: non-finite coupling in grid");
    SpectrumTable table;
    table.model = kind;
    table.params = p;
    table.cfg = cfg;
    table.g_values.assign(g_grid.begin(), g_grid.end());
    table.levels.reserve(g_grid.size());
    for (double g : g_grid) table.levels.push_back(lowest_levels(kind, p.with_coupling(g), k, cfg));
    return table;
}

std::vector<double> uniform_grid(double g_min, double g_max, double step) {
    if (!(step > 0.0) || !(g_max >= g_min) || !std::isfinite(g_min) || !std::isfinite(g_max))
        throw std::invalid_argument("uniform_grid: need step > 0 and g_max >= g_min");
    const auto count = static_cast<std::size_t>(std::floor((g_max - g_min) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = g_min + static_cast<double>(i) * step;
    return grid;
}

double bloch_siegert(const ModelParams& p, double g, std::size_t level, const TruncationConfig& cfg) {
    if (level < 1) throw std::invalid_argument("bloch_siegert: level index is 1-based");
    const ModelParams q = p.with_coupling(g);
    const double jc = lowest_levels(ModelKind::jc_lab, q, level, cfg).back();
    const double rabi = lowest_levels(ModelKind::rabi_lab, q, level, cfg).back();
    if (std::abs(jc) < 1e-12) {
        std::ostringstream msg;
        msg << "bloch_siegert: JC level " << level << " energy " << jc << " too close to zero for a relative measure";
        throw std::invalid_argument(msg.str());
    }
    return std::abs(rabi - jc) / std::abs(jc);
}

namespace {

template <typename F>
double bisect(F&& positive, double lo, double hi, double tol) {
    // positive(lo) != positive(hi) on entry
    const bool lo_side = positive(lo);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (positive(mid) == lo_side)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double ground_weight_on_empty_state(const ModelParams& p, const TruncationConfig& cfg) {
    const EigenSystem es = hermitian_eig(build_jc(p, cfg, Frame::lab));
    const Complex amp = es.vectors.front()[cfg.index(1, 0)];
    return std::norm(amp);
}

}  // namespace

CrossingReport ground_crossing(const ModelParams& p, const TruncationConfig& cfg, double g_lo, double g_hi) {
    p.validate();
    cfg.validate();
    if (!(g_hi > g_lo) || g_lo < 0.0) throw std::invalid_argument("ground_crossing: need 0 <= g_lo < g_hi");

    auto excess = [&](double g) {
        return jc_doublet_analytic(1, p.with_coupling(g)).energies[0] - jc_empty_state_energy(p);
    };
    const double f_lo = excess(g_lo);
    const double f_hi = excess(g_hi);
    if (f_lo * f_hi > 0.0 || f_lo == f_hi) {
        std::ostringstream msg;
        msg << "ground_crossing: no sign change of E_1^- + Omega/2 in [" << g_lo << ", " << g_hi << "]";
        throw std::invalid_argument(msg.str());
    }

    CrossingReport r;
    r.analytic_g = bisect([&](double g) { return excess(g) > 0.0; }, g_lo, g_hi, crossing_tolerance);
    r.numerical_g = bisect([&](double g) { return ground_weight_on_empty_state(p.with_coupling(g), cfg) > 0.5; },
                           g_lo, g_hi, crossing_tolerance);
    r.closed_form_g = std::sqrt(0.5 * p.omega * p.Omega);
    r.quoted_g = std::numbers::sqrt2;
    r.discrepancy = std::abs(r.analytic_g - r.quoted_g);
    r.quoted_value_discrepant = r.discrepancy > 1e-6;
    return r;
}

std::vector<ConvergenceRow> convergence_study(ModelKind kind, const ModelParams& p, double g, std::size_t k,
                                              std::span<const std::size_t> n_list) {
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1]) throw std::invalid_argument("convergence_study: n_list must be ascending");
    std::vector<ConvergenceRow> rows;
    for (std::size_t n_max : n_list) {
        ConvergenceRow row;
        row.n_max = n_max;
        row.levels = lowest_levels(kind, p.with_coupling(g), k, TruncationConfig{n_max});
        if (rows.empty()) {
            row.max_change = std::numeric_limits<double>::quiet_NaN();
        } else {
            double change = 0.0;
            for (std::size_t i = 0; i < k; ++i) change = std::max(change, std::abs(row.levels[i] - rows.back().levels[i]));
            row.max_change = change;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace rwa
