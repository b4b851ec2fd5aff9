#include "rwa/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "rwa/acceptance.hpp"
#include "rwa/commands.hpp"

namespace rwa::cli {

namespace {

// Raw flag values; only the ones given on the command line override the config.
struct Flags {
    std::optional<std::string> model;
    std::optional<double> omega, Omega;
    std::vector<double> g;
    std::optional<std::size_t> n_max, k_levels, phi_nodes, level;
    std::optional<std::string> gauge, out, format, config;
    bool energy_index = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--model", f.model, "jc, rabi or both (full names jc_lab, rabi_quadrature, ... accepted)");
    sub->add_option("--g", f.g, "coupling(s)")->delimiter(',');
    sub->add_option("--omega", f.omega, "resonator frequency (default 1)");
    sub->add_option("--Omega", f.Omega, "qubit splitting (default 1)");
    sub->add_option("--nmax", f.n_max, "Fock truncation (default 200, berry 150)");
    sub->add_option("--levels", f.k_levels, "number of levels (default 11)");
    sub->add_option("--phi-nodes", f.phi_nodes, "phi intervals K (default 720)");
    sub->add_option("--gauge", f.gauge, "parallel or anchor (default anchor)");
    sub->add_option("--level", f.level, "tracked level, labelled at weak coupling (default 1)");
    sub->add_flag("--energy-index", f.energy_index, "treat --level as the energy index at the target coupling");
    sub->add_option("--out", f.out, "output directory (default .)");
    sub->add_option("--format", f.format, "csv or json (tables)");
    sub->add_option("--config", f.config, "JSON config file; flags override it");
}

RunConfig resolve(const Flags& f) {
    RunConfig cfg;
    if (f.config) cfg = load_config_file(*f.config, cfg);
    if (f.model) cfg.model = *f.model;
    if (f.omega) cfg.omega = *f.omega;
    if (f.Omega) cfg.Omega = *f.Omega;
    if (!f.g.empty()) cfg.g = f.g;
    if (f.n_max) cfg.n_max = *f.n_max;
    if (f.k_levels) cfg.k_levels = *f.k_levels;
    if (f.phi_nodes) cfg.phi_nodes = *f.phi_nodes;
    if (f.level) cfg.level = *f.level;
    if (f.energy_index) cfg.energy_index = true;
    if (f.gauge) cfg.gauge = *f.gauge;
    if (f.out) cfg.output_dir = *f.out;
    if (f.format) cfg.format = *f.format;
    cfg.validate();
    return cfg;
}

void list(const std::vector<std::filesystem::path>& files) {
    for (const auto& p : files) std::cout << "wrote " << p.string() << "\n";
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Jaynes-Cummings and Rabi spectra, BOA surfaces and Berry phases"};
    app.set_version_flag("--version", "rwa " + version());
    app.require_subcommand(1);

    Flags flags;
    SpectrumRange spectrum;
    SurfaceRange surfaces;
    std::vector<std::size_t> n_list{50, 100, 200, 300};
    double g_lo = 0.0, g_hi = 2.0;
    std::optional<std::string> artifacts;

    auto* sp = app.add_subcommand("spectrum", "lowest levels over a coupling grid");
    add_common(sp, flags);
    sp->add_option("--g-min", spectrum.g_min, "first coupling (default 0)");
    sp->add_option("--g-max", spectrum.g_max, "last coupling (default 1.5)");
    sp->add_option("--g-step", spectrum.g_step, "grid step (default 0.01)");
    sp->add_flag("--svg", spectrum.svg, "also write an SVG plot");

    auto* be = app.add_subcommand("berry", "geometric phase of the rotated family for each --g");
    add_common(be, flags);

    auto* su = app.add_subcommand("surfaces", "BOA surfaces and gap-locus report");
    add_common(su, flags);
    su->add_option("--x-range", surfaces.x_range, "x min and max")->expected(2);
    su->add_option("--p-range", surfaces.p_range, "p min and max")->expected(2);
    su->add_option("--resolution", surfaces.resolution, "points per axis (>= 2)");
    su->add_flag("--svg", surfaces.svg, "also write a gap heatmap");

    auto* co = app.add_subcommand("convergence", "level changes with the Fock truncation");
    add_common(co, flags);
    co->add_option("--nlist", n_list, "ascending truncations")->delimiter(',');

    auto* cr = app.add_subcommand("crossing", "JC ground-state crossing coupling");
    add_common(cr, flags);
    cr->add_option("--g-lo", g_lo, "bracket start (default 0)");
    cr->add_option("--g-hi", g_hi, "bracket end (default 2)");

    auto* ve = app.add_subcommand("verify", "run the acceptance suite");
    ve->add_option("--artifacts", artifacts, "directory for investigation curves");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (ve->parsed()) {
            acceptance::Options opts;
            if (artifacts) opts.artifact_dir = *artifacts;
            const auto results = acceptance::run_acceptance(opts, std::cout);
            return acceptance::print_summary(results, std::cout) ? ok : acceptance_failure;
        }
        const RunConfig cfg = resolve(flags);
        if (sp->parsed()) list(cmd_spectrum(cfg, spectrum));
        else if (be->parsed()) list(cmd_berry(cfg));
        else if (su->parsed()) list(cmd_surfaces(cfg, surfaces));
        else if (co->parsed()) list(cmd_convergence(cfg, n_list));
        else if (cr->parsed()) list(cmd_crossing(cfg, g_lo, g_hi));
        return ok;
    } catch (const report::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return numerical_failure;
    }
}

}  // namespace rwa::cli
