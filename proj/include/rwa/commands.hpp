// commands.hpp: run configuration and the file-producing subcommands.

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rwa/berry.hpp"
#include "rwa/models.hpp"
#include "rwa/report.hpp"

namespace rwa::cli {

inline constexpr std::size_t default_n_max = 200;
inline constexpr std::size_t default_berry_n_max = 150;

struct RunConfig {
    std::string model = "jc";  // jc | rabi | both | full kind names
    double omega = 1.0;
    double Omega = 1.0;
    std::vector<double> g{0.1};
    std::optional<std::size_t> n_max;  // unset: 200, or 150 for berry runs
    std::size_t k_levels = 11;
    std::size_t phi_nodes = 720;
    std::string gauge = "anchor";
    std::size_t level = 1;
    bool energy_index = false;  // level is a raw energy index instead of the weak-coupling label
    std::filesystem::path output_dir = ".";
    std::string format = "csv";  // csv | json

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
    std::vector<ModelKind> kinds() const;
    ModelParams params(double coupling) const { return {omega, Omega, coupling}; }
    std::size_t resolved_n_max(bool berry_run) const {
        return n_max ? *n_max : (berry_run ? default_berry_n_max : default_n_max);
    }
};

/// Applies keys of a JSON config object on top of cfg; unknown keys are rejected.
void apply_json_config(RunConfig& cfg, const nlohmann::json& doc);
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

/// All RunConfig fields plus the toolkit version and the command name.
report::Metadata metadata(const RunConfig& cfg, const std::string& command, bool berry_run = false);

std::string version();
/// "jc" or "rabi".
std::string model_tag(ModelKind kind);

struct SpectrumRange {
    double g_min = 0.0;
    double g_max = 1.5;
    double g_step = 0.01;
    bool svg = false;
};

struct SurfaceRange {
    std::array<double, 2> x_range{-3.0, 3.0};
    std::array<double, 2> p_range{-3.0, 3.0};
    std::size_t resolution = 61;
    bool svg = false;
};

/// Each command returns the files it wrote.
std::vector<std::filesystem::path> cmd_spectrum(const RunConfig& cfg, const SpectrumRange& range);
std::vector<std::filesystem::path> cmd_berry(const RunConfig& cfg);
std::vector<std::filesystem::path> cmd_surfaces(const RunConfig& cfg, const SurfaceRange& range);
std::vector<std::filesystem::path> cmd_convergence(const RunConfig& cfg, const std::vector<std::size_t>& n_list);
std::vector<std::filesystem::path> cmd_crossing(const RunConfig& cfg, double g_lo, double g_hi);

}  // namespace rwa::cli
