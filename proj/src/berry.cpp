#include "rwa/berry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace rwa {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double wilson_overlap_floor = 0.5;
constexpr double anchor_floor = 1e-8;

// Rounding floor on phase residuals: K links each carrying a few ulps.
double rounding_floor(std::size_t K) { return 64.0 * static_cast<double>(K) * std::numeric_limits<double>::epsilon(); }

void scale(ComplexVector& v, Complex s) {
    for (auto& c : v) c *= s;
}

std::size_t argmax_abs(std::span<const Complex> v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    return best;
}

std::size_t best_overlap(const EigenSystem& es, std::span<const Complex> prev, double& overlap) {
    std::size_t best = 0;
    overlap = -1.0;
    for (std::size_t i = 0; i < es.vectors.size(); ++i) {
        const double o = std::abs(inner(prev, es.vectors[i]));
        if (o > overlap) {
            overlap = o;
            best = i;
        }
    }
    return best;
}

void require_family(const TrackedFamily& f) {
    if (f.phi.size() < 3 || f.vectors.size() != f.phi.size())
        throw std::invalid_argument("berry: family needs at least two intervals and one vector per node");
}

// -Im sum log <psi_k|psi_k+1> with the loop closed on psi_0; partial sums in curve.
double wilson_sum(const TrackedFamily& f, std::vector<std::pair<double, double>>* curve) {
    const std::size_t K = f.intervals();
    double total = 0.0;
    if (curve) curve->assign(1, {f.phi[0], 0.0});
    for (std::size_t k = 0; k < K; ++k) {
        const ComplexVector& next = (k + 1 == K) ? f.vectors[0] : f.vectors[k + 1];
        const Complex ov = inner(f.vectors[k], next);
        if (std::abs(ov) < wilson_overlap_floor) {
            std::ostringstream msg;
            msg << "wilson_loop: overlap " << std::abs(ov) << " at node " << k
                << " is below 0.5; the loop is under-resolved, increase the number of phi nodes";
            throw NumericalError(msg.str());
        }
        total -= std::arg(ov);
        if (curve) curve->emplace_back(f.phi[k + 1], total);
    }
    return total;
}

// Trapezoid integral of the connection plus the closure term.
double connection_sum(const TrackedFamily& f, std::vector<std::pair<double, double>>* curve, double* closure_out) {
    const std::size_t K = f.intervals();
    std::vector<double> a(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        const std::size_t lo = (k == 0) ? 0 : k - 1;
        const std::size_t hi = (k == K) ? K : k + 1;
        const double h = f.phi[hi] - f.phi[lo];
        const ComplexVector& psi = f.vectors[k];
        const ComplexVector& up = f.vectors[hi];
        const ComplexVector& down = f.vectors[lo];
        Complex d(0.0, 0.0);
        for (std::size_t i = 0; i < psi.size(); ++i) d += std::conj(psi[i]) * (up[i] - down[i]);
        a[k] = -(d / h).imag();
    }
    if (curve) curve->assign(1, {f.phi[0], 0.0});
    double integral = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        integral += 0.5 * (a[k] + a[k + 1]) * (f.phi[k + 1] - f.phi[k]);
        if (curve) curve->emplace_back(f.phi[k + 1], integral);
    }
    const double closure = std::arg(inner(f.vectors[0], f.vectors[K]));
    if (curve) curve->back().second += closure;
    if (closure_out) *closure_out = closure;
    return integral + closure;
}

}  // namespace

std::string_view to_string(GaugeConvention::Kind kind) {
    switch (kind) {
        case GaugeConvention::Kind::parallel_transport: return "parallel_transport";
        case GaugeConvention::Kind::anchor_component: return "anchor_component";
        case GaugeConvention::Kind::raw: return "raw";
    }
    return "raw";
}

GaugeConvention parse_gauge(std::string_view name) {
    if (name == "parallel" || name == "parallel_transport") return GaugeConvention::parallel();
    if (name == "anchor" || name == "anchor_component") return GaugeConvention::anchor();
    if (name == "raw") return GaugeConvention::raw();
    throw std::invalid_argument("unknown gauge '" + std::string(name) + "' (expected parallel or anchor)");
}

double wrap_phase(double x) {
    double r = std::remainder(x, two_pi);  // [-pi, pi]
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

double phase_distance(double a, double b) { return std::abs(std::remainder(a - b, two_pi)); }

TrackedFamily eig_family(ModelKind kind, const ModelParams& p, std::size_t level, std::size_t K,
                         const TruncationConfig& cfg, double threshold) {
    p.validate();
    cfg.validate();
    if (K < min_phi_nodes || K % 2 != 0) {
        std::ostringstream msg;
        msg << "eig_family: K = " << K << " must be even and >= " << min_phi_nodes;
        throw std::invalid_argument(msg.str());
    }
    if (level >= cfg.joint_dim()) {
        std::ostringstream msg;
        msg << "eig_family: level " << level << " outside a spectrum of " << cfg.joint_dim() << " states";
        throw std::invalid_argument(msg.str());
    }
    const ComplexMatrix h = build_hamiltonian(kind, p, cfg);

    TrackedFamily f;
    f.model = kind;
    f.params = p;
    f.cfg = cfg;
    f.level = level;
    f.phi.resize(K + 1);
    for (std::size_t k = 0; k < K; ++k) f.phi[k] = two_pi * static_cast<double>(k) / static_cast<double>(K);
    f.phi[K] = two_pi;

    const EigenSystem first = hermitian_eig(h);
    f.vectors.push_back(first.vectors[level]);
    f.energies.push_back(first.values[level]);
    for (std::size_t k = 1; k <= K; ++k) {
        const EigenSystem es = hermitian_eig(rotate_hamiltonian(h, f.phi[k], cfg));
        double overlap = 0.0;
        const std::size_t pick = best_overlap(es, f.vectors.back(), overlap);
        if (overlap < threshold) {
            std::ostringstream msg;
            msg << "eig_family: step overlap " << overlap << " below threshold " << threshold << " at phi node " << k
                << " (phi = " << f.phi[k] << "); ambiguous continuation, increase the number of phi nodes";
            throw TrackingError(msg.str(), k);
        }
        f.min_step_overlap = std::min(f.min_step_overlap, overlap);
        f.vectors.push_back(es.vectors[pick]);
        f.energies.push_back(es.values[pick]);
    }
    return f;
}

TrackedFamily gauge_fix(const TrackedFamily& f, const GaugeConvention& gauge) {
    require_family(f);
    TrackedFamily out = f;
    out.gauge = gauge;
    switch (gauge.kind) {
        case GaugeConvention::Kind::raw:
            break;
        case GaugeConvention::Kind::parallel_transport:
            for (std::size_t k = 1; k < out.vectors.size(); ++k) {
                const Complex ov = inner(out.vectors[k - 1], out.vectors[k]);
                const double m = std::abs(ov);
                if (m == 0.0) {
                    std::ostringstream msg;
                    msg << "gauge_fix: zero overlap at node " << k << "; parallel transport undefined";
                    throw NumericalError(msg.str());
                }
                scale(out.vectors[k], std::conj(ov) / m);
            }
            break;
        case GaugeConvention::Kind::anchor_component: {
            const std::size_t idx = gauge.anchor_index ? *gauge.anchor_index : argmax_abs(out.vectors[0]);
            if (idx >= out.vectors[0].size()) throw std::invalid_argument("gauge_fix: anchor index out of range");
            out.gauge.anchor_index = idx;
            for (std::size_t k = 0; k < out.vectors.size(); ++k) {
                const Complex c = out.vectors[k][idx];
                const double m = std::abs(c);
                if (m < anchor_floor) {
                    std::ostringstream msg;
                    msg << "gauge_fix: anchor component " << idx << " has magnitude " << m << " at node " << k
                        << "; choose another anchor index";
                    throw std::invalid_argument(msg.str());
                }
                scale(out.vectors[k], std::conj(c) / m);
                out.vectors[k][idx] = Complex(std::abs(out.vectors[k][idx]), 0.0);
            }
            break;
        }
    }
    return out;
}

TrackedFamily subsample(const TrackedFamily& f, std::size_t stride) {
    require_family(f);
    const std::size_t K = f.intervals();
    if (stride == 0 || K % stride != 0 || K / stride < 2)
        throw std::invalid_argument("subsample: stride must divide the interval count and leave two intervals");
    TrackedFamily out = f;
    out.phi.clear();
    out.vectors.clear();
    out.energies.clear();
    for (std::size_t k = 0; k <= K; k += stride) {
        out.phi.push_back(f.phi[k]);
        out.vectors.push_back(f.vectors[k]);
        if (k < f.energies.size()) out.energies.push_back(f.energies[k]);
    }
    return out;
}

LoopResult wilson_loop(const TrackedFamily& f) {
    require_family(f);
    LoopResult r;
    r.gauge = f.gauge;
    r.gamma_unwrapped = wilson_sum(f, &r.curve);
    r.gamma = wrap_phase(r.gamma_unwrapped);
    const std::size_t K = f.intervals();
    double change = 0.0;
    if (K % 2 == 0 && K >= 4) change = phase_distance(r.gamma_unwrapped, wilson_sum(subsample(f, 2), nullptr));
    r.residual = std::max(change, rounding_floor(K));
    return r;
}

LoopResult connection_curve(const TrackedFamily& f, const GaugeConvention& gauge) {
    require_family(f);
    if (gauge.kind == GaugeConvention::Kind::raw)
        throw std::invalid_argument(
            "connection_curve: the connection is gauge dependent; fix a parallel or anchor gauge first");
    const TrackedFamily fixed = gauge_fix(f, gauge);
    LoopResult r;
    r.gauge = fixed.gauge;
    r.gamma_unwrapped = connection_sum(fixed, &r.curve, &r.closure);
    r.gamma = wrap_phase(r.gamma_unwrapped);
    const std::size_t K = f.intervals();
    double change = 0.0;
    if (K % 2 == 0 && K >= 4) {
        const TrackedFamily coarse = gauge_fix(subsample(f, 2), fixed.gauge);
        change = phase_distance(r.gamma_unwrapped, connection_sum(coarse, nullptr, nullptr));
    }
    r.residual = std::max(change, rounding_floor(K));
    return r;
}

double photon_number(std::span<const Complex> v, const TruncationConfig& cfg) {
    if (v.size() != cfg.joint_dim()) throw std::invalid_argument("photon_number: vector size does not match cfg");
    const std::size_t d = cfg.field_dim();
    double n = 0.0, total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = std::norm(v[i]);
        n += w * static_cast<double>(i % d);
        total += w;
    }
    return n / total;
}

double generator_phase(ModelKind kind, const ModelParams& p, std::size_t level, const TruncationConfig& cfg) {
    p.validate();
    cfg.validate();
    if (level >= cfg.joint_dim()) throw std::invalid_argument("generator_phase: level outside the spectrum");
    const EigenSystem es = hermitian_eig(build_hamiltonian(kind, p, cfg));
    double gap = std::numeric_limits<double>::infinity();
    if (level > 0) gap = std::min(gap, es.values[level] - es.values[level - 1]);
    if (level + 1 < es.values.size()) gap = std::min(gap, es.values[level + 1] - es.values[level]);
    if (gap < 1e-10) {
        std::ostringstream msg;
        msg << "generator_phase: level " << level << " is degenerate (gap " << gap << "); <n> is basis dependent";
        throw NumericalError(msg.str());
    }
    return two_pi * photon_number(es.vectors[level], cfg);
}

std::size_t resolve_weak_coupling_level(ModelKind kind, const ModelParams& p, std::size_t weak_level,
                                        const TruncationConfig& cfg, std::size_t steps) {
    if (weak_level >= cfg.joint_dim()) throw std::invalid_argument("resolve_weak_coupling_level: level outside spectrum");
    if (steps == 0) throw std::invalid_argument("resolve_weak_coupling_level: steps must be positive");
    const double g_ref = weak_coupling_reference;
    if (std::abs(p.g - g_ref) == 0.0 || p.g == 0.0) return weak_level;
    EigenSystem es = hermitian_eig(build_hamiltonian(kind, p.with_coupling(g_ref), cfg));
    ComplexVector tracked = es.vectors[weak_level];
    std::size_t index = weak_level;
    for (std::size_t s = 1; s <= steps; ++s) {
        const double g = g_ref + (p.g - g_ref) * static_cast<double>(s) / static_cast<double>(steps);
        es = hermitian_eig(build_hamiltonian(kind, p.with_coupling(g), cfg));
        double overlap = 0.0;
        index = best_overlap(es, tracked, overlap);
        if (overlap < 0.5) {
            std::ostringstream msg;
            msg << "resolve_weak_coupling_level: lost the level at g = " << g << " (overlap " << overlap << ")";
            throw NumericalError(msg.str());
        }
        tracked = es.vectors[index];
    }
    return index;
}

BerryEstimates berry_estimates(ModelKind kind, const ModelParams& p, std::size_t level, std::size_t K,
                               const TruncationConfig& cfg, const GaugeConvention& gauge) {
    BerryEstimates b;
    b.family = eig_family(kind, p, level, K, cfg);
    b.wilson = wilson_loop(b.family);
    b.connection = connection_curve(b.family, gauge);
    b.generator = generator_phase(kind, p, level, cfg);
    return b;
}

}  // namespace rwa
