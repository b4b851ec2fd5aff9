// berry.hpp: geometric phases of the rotated families H'(phi) = U(phi) H U(phi)^dag
// over phi in [0, 2 pi]: eigenpath tracking, gauge fixing, Wilson loop,
// connection integration and the generator oracle 2 pi <n>.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rwa/fock.hpp"
#include "rwa/linalg.hpp"
#include "rwa/models.hpp"

namespace rwa {

/// Continuation failure; carries the phi node where the overlap dropped.
class TrackingError : public NumericalError {
public:
    TrackingError(const std::string& what, std::size_t node) : NumericalError(what), node_(node) {}
    std::size_t node() const noexcept { return node_; }

private:
    std::size_t node_;
};

struct GaugeConvention {
    enum class Kind { parallel_transport, anchor_component, raw };
    Kind kind = Kind::anchor_component;
    std::optional<std::size_t> anchor_index;  // defaults to argmax |psi(0)|

    static GaugeConvention parallel() { return {Kind::parallel_transport, std::nullopt}; }
    static GaugeConvention anchor(std::optional<std::size_t> index = std::nullopt) {
        return {Kind::anchor_component, index};
    }
    static GaugeConvention raw() { return {Kind::raw, std::nullopt}; }
};

std::string_view to_string(GaugeConvention::Kind kind);
/// Accepts parallel / parallel_transport / anchor / anchor_component / raw.
GaugeConvention parse_gauge(std::string_view name);

inline constexpr double default_continuity_threshold = 0.99;
inline constexpr std::size_t min_phi_nodes = 16;

struct TrackedFamily {
    std::vector<double> phi;             // K + 1 nodes, phi[0] = 0, phi[K] = 2 pi
    std::vector<ComplexVector> vectors;  // one per node
    std::vector<double> energies;
    std::size_t level = 0;  // energy index at phi = 0
    double min_step_overlap = 1.0;
    ModelKind model = ModelKind::jc_lab;
    ModelParams params;
    TruncationConfig cfg;
    GaugeConvention gauge = GaugeConvention::raw();

    std::size_t intervals() const noexcept { return phi.empty() ? 0 : phi.size() - 1; }
};

/// Diagonalizes H'(phi_k) at K + 1 uniform nodes and follows the level by
/// maximal overlap. K must be even and >= 16. Throws TrackingError when a
/// step overlap falls below the threshold.
TrackedFamily eig_family(ModelKind kind, const ModelParams& p, std::size_t level, std::size_t K,
                         const TruncationConfig& cfg, double threshold = default_continuity_threshold);

/// Rephases the vectors; |<psi_k|psi_k+1>| is unchanged. Throws
/// std::invalid_argument when the anchor component drops below 1e-8.
TrackedFamily gauge_fix(const TrackedFamily& f, const GaugeConvention& gauge);

/// Every stride-th node of a family (stride must divide the interval count).
TrackedFamily subsample(const TrackedFamily& f, std::size_t stride);

/// Wraps to (-pi, pi].
double wrap_phase(double x);
/// Distance between two phases modulo 2 pi, in [0, pi].
double phase_distance(double a, double b);

struct LoopResult {
    double gamma = 0.0;            // wrapped to (-pi, pi]
    double gamma_unwrapped = 0.0;
    std::vector<std::pair<double, double>> curve;  // (phi, partial phase), starts at 0
    double closure = 0.0;          // arg <psi_0|psi_K> (connection integration only)
    GaugeConvention gauge = GaugeConvention::raw();
    double residual = 0.0;         // |gamma(K) - gamma(K/2)| with a rounding floor
};

/// gamma = -Im sum_k log <psi_k|psi_k+1>, closing with psi_K = psi_0.
/// Throws NumericalError if any step overlap is below 0.5.
LoopResult wilson_loop(const TrackedFamily& f);

/// Integrates A = -Im <psi|d psi/d phi> (central differences, trapezoid rule)
/// on a gauge-fixed copy of f and adds the closure arg <psi_0|psi_K>.
/// Throws std::invalid_argument for the raw gauge.
LoopResult connection_curve(const TrackedFamily& f, const GaugeConvention& gauge);

/// <n> of a joint-space vector (field occupation, qubit traced).
double photon_number(std::span<const Complex> v, const TruncationConfig& cfg);

/// 2 pi <psi_level|n|psi_level> at phi = 0 (unwrapped). Throws NumericalError
/// when the level is closer than 1e-10 to a neighbour.
double generator_phase(ModelKind kind, const ModelParams& p, std::size_t level, const TruncationConfig& cfg);

inline constexpr double weak_coupling_reference = 1e-3;

/// Energy index at p.g of the state that is energy index weak_level at
/// g = 1e-3, followed by maximal overlap along a linear coupling ramp.
std::size_t resolve_weak_coupling_level(ModelKind kind, const ModelParams& p, std::size_t weak_level,
                                        const TruncationConfig& cfg, std::size_t steps = 64);

struct BerryEstimates {
    TrackedFamily family;
    LoopResult wilson;
    LoopResult connection;
    double generator = 0.0;  // unwrapped 2 pi <n>
};

BerryEstimates berry_estimates(ModelKind kind, const ModelParams& p, std::size_t level, std::size_t K,
                               const TruncationConfig& cfg, const GaugeConvention& gauge);

}  // namespace rwa
