#include "rwa/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rwa {

std::pair<double, double> boa_energies(ModelKind kind, const ModelParams& p, double x, double q) {
    if (is_jc(kind)) {
        const double d = p.delta();
        const double r = std::sqrt(0.25 * d * d + p.g * p.g * (x * x + q * q));
        return {-r, r};
    }
    const double base = 0.5 * p.omega * (x * x + q * q);
    const double r = std::sqrt(0.25 * p.Omega * p.Omega + 4.0 * p.g * p.g * x * x);
    return {base - r, base + r};
}

ComplexMatrix frozen_spin_hamiltonian(ModelKind kind, const ModelParams& p, double x, double q) {
    ComplexMatrix h(2);
    if (is_jc(kind)) {
        // (Delta/2) sz + g (x sx + p sy)
        h(0, 0) = 0.5 * p.delta();
        h(1, 1) = -0.5 * p.delta();
        h(0, 1) = p.g * Complex(x, -q);
        h(1, 0) = p.g * Complex(x, q);
    } else {
        const double base = 0.5 * p.omega * (x * x + q * q);
        h(0, 0) = base + 0.5 * p.Omega;
        h(1, 1) = base - 0.5 * p.Omega;
        h(0, 1) = 2.0 * p.g * x;
        h(1, 0) = 2.0 * p.g * x;
    }
    return h;
}

SurfaceGrid boa_surface(ModelKind kind, const ModelParams& p, std::span<const double> x_axis,
                        std::span<const double> p_axis) {
    for (double v : x_axis)
        if (!std::isfinite(v)) throw std::invalid_argument("boa_surface: non-finite x axis value");
    for (double v : p_axis)
        if (!std::isfinite(v)) throw std::invalid_argument("boa_surface: non-finite p axis value");
    SurfaceGrid s;
    s.model = kind;
    s.x_axis.assign(x_axis.begin(), x_axis.end());
    s.p_axis.assign(p_axis.begin(), p_axis.end());
    const std::size_t nx = x_axis.size(), np = p_axis.size();
    s.upper.assign(nx, std::vector<double>(np));
    s.lower.assign(nx, std::vector<double>(np));
    s.gap.assign(nx, std::vector<double>(np));
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            const auto [lo, hi] = boa_energies(kind, p, x_axis[i], p_axis[j]);
            s.lower[i][j] = lo;
            s.upper[i][j] = hi;
            s.gap[i][j] = hi - lo;
        }
    }
    return s;
}

std::string_view to_string(Locus locus) {
    switch (locus) {
        case Locus::point: return "point";
        case Locus::line: return "line";
        case Locus::none: return "none";
    }
    return "none";
}

namespace {

void require_grid(const SurfaceGrid& s) {
    if (s.x_axis.empty() || s.p_axis.empty()) throw std::invalid_argument("classify_degeneracy: empty grid");
    if (s.gap.size() != s.x_axis.size())
        throw std::invalid_argument("classify_degeneracy: gap rows do not match the x axis");
    for (const auto& row : s.gap)
        if (row.size() != s.p_axis.size())
            throw std::invalid_argument("classify_degeneracy: gap columns do not match the p axis");
}

bool covers_origin(const std::vector<double>& axis) {
    const auto [lo, hi] = std::minmax_element(axis.begin(), axis.end());
    return *lo <= 0.0 && *hi >= 0.0;
}

double max_spacing(const std::vector<double>& axis) {
    double h = 0.0;
    for (std::size_t i = 1; i < axis.size(); ++i) h = std::max(h, std::abs(axis[i] - axis[i - 1]));
    return h;
}

}  // namespace

double default_gap_tolerance(const SurfaceGrid& s) {
    require_grid(s);
    const double hx = max_spacing(s.x_axis), hp = max_spacing(s.p_axis);
    double slope = 0.0;
    const std::size_t nx = s.x_axis.size(), np = s.p_axis.size();
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            if (i + 1 < nx) {
                const double dx = std::abs(s.x_axis[i + 1] - s.x_axis[i]);
                if (dx > 0.0) slope = std::max(slope, std::abs(s.gap[i + 1][j] - s.gap[i][j]) / dx);
            }
            if (j + 1 < np) {
                const double dp = std::abs(s.p_axis[j + 1] - s.p_axis[j]);
                if (dp > 0.0) slope = std::max(slope, std::abs(s.gap[i][j + 1] - s.gap[i][j]) / dp);
            }
        }
    }
    return 2.0 * std::hypot(hx, hp) * slope;
}

DegeneracyReport classify_degeneracy(const SurfaceGrid& s, std::optional<double> tol_gap) {
    require_grid(s);
    if (!covers_origin(s.x_axis) || !covers_origin(s.p_axis))
        throw std::invalid_argument("classify_degeneracy: grid does not cover the origin");
    if (tol_gap && !(*tol_gap >= 0.0)) throw std::invalid_argument("classify_degeneracy: tol_gap must be >= 0");

    DegeneracyReport r;
    r.tol_gap = tol_gap ? *tol_gap : default_gap_tolerance(s);
    const std::size_t nx = s.x_axis.size(), np = s.p_axis.size();
    r.min_gap = s.gap[0][0];
    for (const auto& row : s.gap)
        for (double v : row) r.min_gap = std::min(r.min_gap, v);

    const double cut = r.min_gap + r.tol_gap;
    std::vector<bool> x_hit(nx, false), p_hit(np, false);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            if (s.gap[i][j] <= cut) {
                r.coordinates.emplace_back(s.x_axis[i], s.p_axis[j]);
                x_hit[i] = true;
                p_hit[j] = true;
            }
        }
    }
    auto fraction = [](const std::vector<bool>& hits) {
        return static_cast<double>(std::count(hits.begin(), hits.end(), true)) / static_cast<double>(hits.size());
    };
    // A seam along p touches nearly every p column but only a few x rows.
    const bool spans_p = np >= 2 && fraction(p_hit) >= 0.9;
    const bool spans_x = nx >= 2 && fraction(x_hit) >= 0.9;
    if (spans_p != spans_x) {
        r.locus = Locus::line;
        r.line_axis = spans_p ? "x=const" : "p=const";
    } else if (!spans_p && r.min_gap <= r.tol_gap) {
        r.locus = Locus::point;
    } else {
        r.locus = Locus::none;
    }
    return r;
}

Branch parse_branch(std::string_view s) {
    if (s == "+" || s == "plus") return Branch::plus;
    if (s == "-" || s == "minus") return Branch::minus;
    throw std::invalid_argument("unknown branch '" + std::string(s) + "'");
}

namespace {

double closed_form_phase(double radicand_coupling, const ModelParams& p, Branch sign) {
    const double half_delta = 0.5 * p.delta();
    const double root = std::sqrt(half_delta * half_delta + radicand_coupling);
    return sign_of(sign) * std::numbers::pi * (1.0 - half_delta / root);
}

}  // namespace

double berry_boa_jc(double rho, const ModelParams& p, Branch sign) {
    if (!(rho >= 0.0) || !std::isfinite(rho)) throw std::invalid_argument("berry_boa_jc: rho must be finite and >= 0");
    const double coupling = p.g * p.g * rho * rho;
    if (p.delta() == 0.0 && coupling == 0.0) {
        std::ostringstream msg;
        msg << "berry_boa_jc: evaluated at the conical intersection (Delta = 0, g rho = 0); the surfaces are degenerate";
        throw std::domain_error(msg.str());
    }
    return closed_form_phase(coupling, p, sign);
}

double rho_from_photon_number(std::size_t n) { return std::sqrt(2.0 * static_cast<double>(n) + 1.0); }

double berry_exact_jc(std::size_t n, const ModelParams& p, Branch sign) {
    const double coupling = p.g * p.g * (static_cast<double>(n) + 1.0);
    if (p.delta() == 0.0 && coupling == 0.0) return sign_of(sign) * std::numbers::pi;
    return closed_form_phase(coupling, p, sign);
}

}  // namespace rwa
