// acceptance.hpp: the release acceptance suite (criteria 1-12), shared by the
// `verify` subcommand and the acceptance test binary.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rwa::acceptance {

// Pinned tolerances.
inline constexpr double eig_tol = 1e-10;
inline constexpr double symmetry_tol = 1e-12;
inline constexpr double jc_oracle_tol = 1e-8;
inline constexpr double bs_weak_max = 1e-4;
inline constexpr double bs_bracket_lo = 3e-4;
inline constexpr double bs_bracket_hi = 3e-3;
inline constexpr double crossing_agreement_tol = 1e-6;
inline constexpr double berry_tol = 5e-3;
inline constexpr double gauge_invariance_tol = 1e-10;
inline constexpr double convergence_tol = 1e-8;
inline constexpr double analytic_chain_tol = 1e-9;

inline constexpr std::size_t berry_n_max = 150;
inline constexpr std::size_t berry_nodes = 720;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string summary;  // one line with the decisive numbers
};

struct Options {
    std::optional<std::filesystem::path> artifact_dir;  // closed-loop curves are written here when set
};

/// Runs all criteria, streaming details to out, and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const Options& options, std::ostream& out);

/// Prints the "criterion N: PASS|FAIL name (summary)" block; returns true if all pass.
bool print_summary(const std::vector<CriterionResult>& results, std::ostream& out);

// Pure decision helpers (unit tested for mutation sensitivity).

/// Phases equal modulo 2 pi within tol.
bool check_phase_match(double a, double b, double tol);
/// lo <= value <= hi.
bool check_bracket(double value, double lo, double hi);
/// Strictly decreasing sequence.
bool check_decreasing(const std::vector<double>& values);
/// The analytic oracle chain: 2 pi <n> of the n = 1 lower JC doublet against
/// the closed-form exact phase, both evaluated from the formulas.
bool check_oracle_chain(double generator_phase, double exact_phase);

enum class LoopVerdict { zero, generator, both, neither };
std::string to_string(LoopVerdict v);
LoopVerdict classify_closed_loop(double closed_loop, double generator_phase, double tol);

}  // namespace rwa::acceptance
