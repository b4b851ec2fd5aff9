#include "rwa/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rwa/spectra.hpp"
#include "rwa/surfaces.hpp"

namespace rwa::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string version() { return RWA_VERSION; }

std::string model_tag(ModelKind kind) { return is_jc(kind) ? "jc" : "rabi"; }

std::vector<ModelKind> RunConfig::kinds() const {
    if (model == "both") return {ModelKind::jc_lab, ModelKind::rabi_lab};
    return {parse_model_kind(model)};
}

void RunConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!std::isfinite(v) || !(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
    };
    (void)kinds();
    positive(omega, "omega");
    positive(Omega, "Omega");
    if (g.empty()) throw std::invalid_argument("g: at least one coupling is required");
    for (double v : g)
        if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("g: couplings must be finite and >= 0");
    if (n_max && *n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (k_levels < 1) throw std::invalid_argument("k_levels must be >= 1");
    if (phi_nodes < min_phi_nodes || phi_nodes % 2 != 0)
        throw std::invalid_argument("phi_nodes must be even and >= 16");
    const GaugeConvention gc = parse_gauge(gauge);
    if (gc.kind == GaugeConvention::Kind::raw) throw std::invalid_argument("gauge must be parallel or anchor");
    if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
    if (output_dir.empty()) throw std::invalid_argument("output_dir must not be empty");
}

void apply_json_config(RunConfig& cfg, const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "model") cfg.model = value.get<std::string>();
            else if (key == "omega") cfg.omega = value.get<double>();
            else if (key == "Omega") cfg.Omega = value.get<double>();
            else if (key == "g") cfg.g = value.is_array() ? value.get<std::vector<double>>() : std::vector<double>{value.get<double>()};
            else if (key == "n_max") cfg.n_max = value.get<std::size_t>();
            else if (key == "k_levels") cfg.k_levels = value.get<std::size_t>();
            else if (key == "phi_nodes") cfg.phi_nodes = value.get<std::size_t>();
            else if (key == "gauge") cfg.gauge = value.get<std::string>();
            else if (key == "level") cfg.level = value.get<std::size_t>();
            else if (key == "energy_index") cfg.energy_index = value.get<bool>();
            else if (key == "output_dir") cfg.output_dir = value.get<std::string>();
            else if (key == "format") cfg.format = value.get<std::string>();
            else throw std::invalid_argument("config: unknown key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config: bad value for '" + key + "': " + e.what());
        }
    }
}

RunConfig load_config_file(const fs::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw report::IoError("cannot read config file '" + path.string() + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    apply_json_config(base, doc);
    return base;
}

namespace {

std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string join(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + report::format_number(v[i]);
    return out;
}

fs::path prepare(const RunConfig& cfg) {
    cfg.validate();
    report::ensure_writable_dir(cfg.output_dir);
    return cfg.output_dir;
}

std::vector<std::string> level_header(std::size_t k) {
    std::vector<std::string> h;
    for (std::size_t i = 1; i <= k; ++i) h.push_back("E" + std::to_string(i));
    return h;
}

fs::path write_table(const fs::path& stem, const RunConfig& cfg, const report::Metadata& meta,
                     const report::Table& table) {
    if (cfg.format == "json") {
        ordered_json payload;
        payload["columns"] = table.header;
        ordered_json rows = ordered_json::array();
        for (const auto& r : table.rows) rows.push_back(r);
        payload["rows"] = rows;
        fs::path path = stem;
        path += ".json";
        report::write_text(path, report::render_json(report::with_metadata(meta, payload)));
        return path;
    }
    fs::path path = stem;
    path += ".csv";
    report::write_text(path, report::render_csv(meta, table));
    return path;
}

}  // namespace

report::Metadata metadata(const RunConfig& cfg, const std::string& command, bool berry_run) {
    return {
        {"toolkit", "rwa " + version()},
        {"command", command},
        {"model", cfg.model},
        {"omega", report::format_number(cfg.omega)},
        {"Omega", report::format_number(cfg.Omega)},
        {"g", join(cfg.g)},
        {"n_max", std::to_string(cfg.resolved_n_max(berry_run))},
        {"k_levels", std::to_string(cfg.k_levels)},
        {"phi_nodes", std::to_string(cfg.phi_nodes)},
        {"gauge", std::string(to_string(parse_gauge(cfg.gauge).kind))},
        {"level", std::to_string(cfg.level)},
        {"level_mode", cfg.energy_index ? "energy_index" : "weak_coupling_label"},
        {"output_dir", cfg.output_dir.string()},
        {"format", cfg.format},
    };
}

std::vector<fs::path> cmd_spectrum(const RunConfig& cfg, const SpectrumRange& range) {
    const fs::path dir = prepare(cfg);
    const std::vector<double> grid = uniform_grid(range.g_min, range.g_max, range.g_step);
    const TruncationConfig tc{cfg.resolved_n_max(false)};
    report::Metadata meta = metadata(cfg, "spectrum");
    meta.emplace_back("g_range", report::format_number(range.g_min) + ":" + report::format_number(range.g_step) + ":" +
                                     report::format_number(range.g_max));

    std::vector<fs::path> written;
    std::vector<SpectrumTable> tables;
    for (ModelKind kind : cfg.kinds()) {
        SpectrumTable t = spectrum_sweep(kind, cfg.params(0.0), grid, cfg.k_levels, tc);
        report::Table table;
        table.header = {"g"};
        for (auto& h : level_header(cfg.k_levels)) table.header.push_back(h);
        for (std::size_t r = 0; r < t.g_values.size(); ++r) {
            std::vector<double> row{t.g_values[r]};
            row.insert(row.end(), t.levels[r].begin(), t.levels[r].end());
            table.rows.push_back(std::move(row));
        }
        written.push_back(write_table(dir / ("spectrum_" + model_tag(kind)), cfg, meta, table));
        tables.push_back(std::move(t));
    }
    if (range.svg) {
        std::vector<report::Series> series;
        for (const SpectrumTable& t : tables) {
            const bool jc = is_jc(t.model);
            for (std::size_t k = 0; k < cfg.k_levels; ++k) {
                report::Series s;
                s.label = k == 0 ? (jc ? "JC" : "Rabi") : "";
                s.color = jc ? "#1f5fbf" : "#c0392b";
                s.dashed = jc && tables.size() > 1;
                s.x = t.g_values;
                for (const auto& row : t.levels) s.y.push_back(row[k]);
                series.push_back(std::move(s));
            }
        }
        const std::string name = tables.size() > 1 ? "spectrum_overlay.svg" : "spectrum_" + model_tag(tables[0].model) + ".svg";
        report::write_text(dir / name, report::render_line_svg(meta, "Lowest levels vs coupling", "g", "E", series));
        written.push_back(dir / name);
    }
    return written;
}

std::vector<fs::path> cmd_berry(const RunConfig& cfg) {
    const fs::path dir = prepare(cfg);
    const TruncationConfig tc{cfg.resolved_n_max(true)};
    const GaugeConvention gauge = parse_gauge(cfg.gauge);
    const report::Metadata base_meta = metadata(cfg, "berry", true);
    const std::vector<ModelKind> kinds = cfg.kinds();
    const bool single = kinds.size() == 1 && cfg.g.size() == 1;

    std::vector<fs::path> written;
    ordered_json runs = ordered_json::array();
    for (ModelKind kind : kinds) {
        for (double g : cfg.g) {
            const ModelParams p = cfg.params(g);
            const std::size_t index =
                cfg.energy_index ? cfg.level : resolve_weak_coupling_level(kind, p, cfg.level, tc);
            const BerryEstimates b = berry_estimates(kind, p, index, cfg.phi_nodes, tc, gauge);

            const std::string file = single ? "berry_curve.csv"
                                            : "berry_curve_" + model_tag(kind) + "_g" + shortest(g) + ".csv";
            report::Metadata meta = base_meta;
            meta.emplace_back("run_model", model_tag(kind));
            meta.emplace_back("run_g", report::format_number(g));
            meta.emplace_back("energy_index", std::to_string(index));
            report::Table table{{"phi", "partial_phase"}, {}};
            for (const auto& [phi, phase] : b.connection.curve) table.rows.push_back({phi, phase});
            report::write_text(dir / file, report::render_csv(meta, table));
            written.push_back(dir / file);

            ordered_json run;
            run["model"] = model_tag(kind);
            run["g"] = g;
            run["level"] = cfg.level;
            run["energy_index"] = index;
            run["photon_number"] = b.generator / (2.0 * std::acos(-1.0));
            run["wilson_gamma"] = b.wilson.gamma;
            run["wilson_gamma_unwrapped"] = b.wilson.gamma_unwrapped;
            run["connection_gamma"] = b.connection.gamma;
            run["connection_gamma_unwrapped"] = b.connection.gamma_unwrapped;
            run["connection_closure"] = b.connection.closure;
            run["generator_gamma"] = wrap_phase(b.generator);
            run["generator_gamma_unwrapped"] = b.generator;
            run["residual"] = std::max(b.wilson.residual, b.connection.residual);
            run["wilson_residual"] = b.wilson.residual;
            run["connection_residual"] = b.connection.residual;
            run["gauge"] = std::string(to_string(b.connection.gauge.kind));
            if (b.connection.gauge.anchor_index) run["anchor_index"] = *b.connection.gauge.anchor_index;
            run["min_step_overlap"] = b.family.min_step_overlap;
            run["curve_file"] = file;
            run["curve_rows"] = b.connection.curve.size();
            runs.push_back(run);
        }
    }
    ordered_json payload;
    for (const char* key : {"wilson_gamma", "connection_gamma", "generator_gamma", "residual", "gauge"})
        payload[key] = runs[0][key];
    payload["runs"] = runs;
    report::write_text(dir / "berry_summary.json", report::render_json(report::with_metadata(base_meta, payload)));
    written.push_back(dir / "berry_summary.json");
    return written;
}

namespace {

std::vector<double> axis(const std::array<double, 2>& range, std::size_t n) {
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = range[0] + (range[1] - range[0]) * static_cast<double>(i) / static_cast<double>(n - 1);
    return a;
}

}  // namespace

std::vector<fs::path> cmd_surfaces(const RunConfig& cfg, const SurfaceRange& range) {
    if (range.resolution < 2) throw std::invalid_argument("surfaces: resolution must be >= 2 per axis");
    if (!(range.x_range[1] > range.x_range[0]) || !(range.p_range[1] > range.p_range[0]))
        throw std::invalid_argument("surfaces: ranges must be increasing");
    const fs::path dir = prepare(cfg);
    const std::vector<double> xs = axis(range.x_range, range.resolution);
    const std::vector<double> ps = axis(range.p_range, range.resolution);
    report::Metadata meta = metadata(cfg, "surfaces");
    meta.emplace_back("x_range", report::format_number(range.x_range[0]) + ":" + report::format_number(range.x_range[1]));
    meta.emplace_back("p_range", report::format_number(range.p_range[0]) + ":" + report::format_number(range.p_range[1]));
    meta.emplace_back("resolution", std::to_string(range.resolution));

    const std::vector<ModelKind> kinds = cfg.kinds();
    const bool single_g = cfg.g.size() == 1;
    std::vector<fs::path> written;
    for (ModelKind kind : kinds) {
        for (double g : cfg.g) {
            const std::string suffix = model_tag(kind) + (single_g ? "" : "_g" + shortest(g));
            const SurfaceGrid s = boa_surface(kind, cfg.params(g), xs, ps);
            report::Metadata m = meta;
            m.emplace_back("run_g", report::format_number(g));

            report::Table table{{"x", "p", "E_minus", "E_plus", "gap"}, {}};
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = 0; j < ps.size(); ++j)
                    table.rows.push_back({xs[i], ps[j], s.lower[i][j], s.upper[i][j], s.gap[i][j]});
            written.push_back(write_table(dir / ("surface_" + suffix), cfg, m, table));

            ordered_json payload;
            payload["model"] = model_tag(kind);
            payload["g"] = g;
            try {
                const DegeneracyReport r = classify_degeneracy(s);
                payload["min_gap"] = r.min_gap;
                payload["tol_gap"] = r.tol_gap;
                payload["locus"] = std::string(to_string(r.locus));
                if (r.locus == Locus::line) payload["line"] = std::string(r.line_axis);
                ordered_json coords = ordered_json::array();
                for (const auto& [x, q] : r.coordinates) coords.push_back({x, q});
                payload["coordinates"] = coords;
            } catch (const std::invalid_argument& e) {
                payload["locus"] = "unclassified";
                payload["reason"] = e.what();
            }
            report::write_text(dir / ("degeneracy_" + suffix + ".json"),
                               report::render_json(report::with_metadata(m, payload)));
            written.push_back(dir / ("degeneracy_" + suffix + ".json"));

            if (range.svg) {
                const std::string name = "surface_gap_" + suffix + ".svg";
                report::write_text(dir / name, report::render_heatmap_svg(m, "Gap E+ - E- (" + model_tag(kind) + ")",
                                                                          xs, ps, s.gap));
                written.push_back(dir / name);
            }
        }
    }
    return written;
}

std::vector<fs::path> cmd_convergence(const RunConfig& cfg, const std::vector<std::size_t>& n_list) {
    if (n_list.empty()) throw std::invalid_argument("convergence: n list is empty");
    const fs::path dir = prepare(cfg);
    report::Metadata meta = metadata(cfg, "convergence");
    std::string nl;
    for (std::size_t i = 0; i < n_list.size(); ++i) nl += (i ? "," : "") + std::to_string(n_list[i]);
    meta.emplace_back("n_list", nl);

    std::vector<fs::path> written;
    for (ModelKind kind : cfg.kinds()) {
        report::Table table{{"g", "n_max", "max_change"}, {}};
        for (auto& h : level_header(cfg.k_levels)) table.header.push_back(h);
        for (double g : cfg.g) {
            for (const ConvergenceRow& row : convergence_study(kind, cfg.params(0.0), g, cfg.k_levels, n_list)) {
                std::vector<double> r{g, static_cast<double>(row.n_max), row.max_change};
                r.insert(r.end(), row.levels.begin(), row.levels.end());
                table.rows.push_back(std::move(r));
            }
        }
        written.push_back(write_table(dir / ("convergence_" + model_tag(kind)), cfg, meta, table));
    }
    return written;
}

std::vector<fs::path> cmd_crossing(const RunConfig& cfg, double g_lo, double g_hi) {
    const fs::path dir = prepare(cfg);
    const TruncationConfig tc{cfg.resolved_n_max(false)};
    const CrossingReport r = ground_crossing(cfg.params(0.0), tc, g_lo, g_hi);
    report::Metadata meta = metadata(cfg, "crossing");
    meta.emplace_back("bracket", report::format_number(g_lo) + ":" + report::format_number(g_hi));
    ordered_json payload;
    payload["model"] = "jc";
    payload["analytic_g"] = r.analytic_g;
    payload["numerical_g"] = r.numerical_g;
    payload["analytic_vs_numerical"] = std::abs(r.analytic_g - r.numerical_g);
    payload["closed_form_g"] = r.closed_form_g;
    payload["quoted_g"] = r.quoted_g;
    payload["discrepancy"] = r.discrepancy;
    payload["quoted_value_discrepant"] = r.quoted_value_discrepant;
    payload["tolerance"] = crossing_tolerance;
    report::write_text(dir / "crossing.json", report::render_json(report::with_metadata(meta, payload)));
    return {dir / "crossing.json"};
}

}  // namespace rwa::cli
