#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>
#include <sys/wait.h>

#include <json.hpp>

#include "rwa/acceptance.hpp"
#include "rwa/berry.hpp"
#include "rwa/commands.hpp"
#include "rwa/report.hpp"
#include "rwa/surfaces.hpp"

using namespace rwa;
using Catch::Matchers::WithinAbs;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("rwa_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_tool(const std::string& args) {
    const std::string cmd = std::string(RWA_EXE) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Csv {
    std::vector<std::string> meta;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Csv read_csv(const fs::path& p) {
    Csv c;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) {
            c.meta.push_back(line);
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (c.header.empty()) {
            c.header = cells;
        } else {
            std::vector<double> row;
            for (const auto& s : cells) row.push_back(std::stod(s));
            c.rows.push_back(row);
        }
    }
    return c;
}

nlohmann::json read_json(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

}  // namespace

TEST_CASE("number formatting and CSV rendering") {
    CHECK(report::format_number(0.1) == "0.10000000000000001");
    CHECK(report::format_number(-0.5) == "-0.5");
    CHECK(report::format_number(1e-20) == "9.9999999999999995e-21");
    const std::string csv = report::render_csv({{"model", "jc"}}, report::Table{{"g", "E1"}, {{0.0, -0.5}}});
    CHECK(csv == "# model: jc\ng,E1\n0,-0.5\n");
    CHECK_THROWS_AS(report::render_csv({}, report::Table{{"a"}, {{1.0, 2.0}}}), std::invalid_argument);
    const auto doc = report::with_metadata({{"k", "v"}}, nlohmann::ordered_json{{"x", 1}});
    CHECK(doc.begin().key() == "metadata");
}

TEST_CASE("run config validation and JSON precedence") {
    cli::RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.resolved_n_max(false) == 200);
    CHECK(cfg.resolved_n_max(true) == 150);
    CHECK(cfg.k_levels == 11);
    CHECK(cfg.phi_nodes == 720);
    CHECK(cfg.gauge == "anchor");
    CHECK(cfg.level == 1);

    cli::RunConfig bad = cfg;
    bad.omega = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.phi_nodes = 15;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.model = "dicke";
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.gauge = "raw";
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    cli::apply_json_config(cfg, nlohmann::json{{"model", "rabi"}, {"g", {0.1, 0.2}}, {"n_max", 40}});
    CHECK(cfg.model == "rabi");
    CHECK(cfg.g.size() == 2);
    CHECK(cfg.resolved_n_max(true) == 40);
    CHECK_THROWS_AS(cli::apply_json_config(cfg, nlohmann::json{{"nmax", 40}}), std::invalid_argument);
    CHECK_THROWS_AS(cli::apply_json_config(cfg, nlohmann::json{{"omega", "fast"}}), std::invalid_argument);
}

TEST_CASE("spectrum command") {
    const fs::path dir = scratch_dir("spectrum");
    REQUIRE(run_tool("spectrum --model both --nmax 20 --svg --out " + dir.string()) == 0);
    const Csv jc = read_csv(dir / "spectrum_jc.csv");
    const Csv rabi = read_csv(dir / "spectrum_rabi.csv");
    CHECK(jc.rows.size() == 151);
    CHECK(rabi.rows.size() == 151);
    REQUIRE(jc.header.size() == 12);
    CHECK(jc.header.front() == "g");
    CHECK(jc.header.back() == "E11");
    CHECK(jc.rows[0][1] == -0.5);
    CHECK_THAT(jc.rows[10][0], WithinAbs(0.1, 1e-15));
    CHECK(std::abs(jc.rows[10][2] - rabi.rows[10][2]) > 0.0);
    CHECK(fs::exists(dir / "spectrum_overlay.svg"));
    CHECK(slurp(dir / "spectrum_overlay.svg").find("<!--") != std::string::npos);
    bool has_version = false;
    for (const auto& m : jc.meta) has_version = has_version || m.find("# toolkit: rwa ") == 0;
    CHECK(has_version);

    REQUIRE(run_tool("spectrum --model jc --nmax 20 --g-max 0.2 --format json --out " + dir.string()) == 0);
    const auto doc = read_json(dir / "spectrum_jc.json");
    CHECK(doc.contains("metadata"));
    CHECK(doc["rows"].size() == 21);
}

TEST_CASE("outputs are byte-identical across reruns") {
    const fs::path a = scratch_dir("rerun_a"), b = scratch_dir("rerun_b");
    REQUIRE(run_tool("spectrum --model rabi --nmax 15 --g-max 0.3 --out " + a.string()) == 0);
    REQUIRE(run_tool("spectrum --model rabi --nmax 15 --g-max 0.3 --out " + b.string()) == 0);
    // output_dir itself is recorded, so compare everything after that line
    auto strip = [](std::string s) {
        const auto pos = s.find("# output_dir:");
        const auto end = s.find('\n', pos);
        return s.erase(pos, end - pos);
    };
    CHECK(strip(slurp(a / "spectrum_rabi.csv")) == strip(slurp(b / "spectrum_rabi.csv")));
    REQUIRE(run_tool("spectrum --model rabi --nmax 15 --g-max 0.3 --out " + a.string()) == 0);
    CHECK(strip(slurp(a / "spectrum_rabi.csv")) == strip(slurp(b / "spectrum_rabi.csv")));
}

TEST_CASE("surfaces command") {
    const fs::path dir = scratch_dir("surfaces");
    REQUIRE(run_tool("surfaces --model jc --g 0.5 --resolution 2 --out " + dir.string()) == 0);
    CHECK(read_csv(dir / "surface_jc.csv").rows.size() == 4);

    REQUIRE(run_tool("surfaces --model both --g 1 --resolution 41 --svg --out " + dir.string()) == 0);
    const auto jc = read_json(dir / "degeneracy_jc.json");
    CHECK(jc["locus"] == "point");
    CHECK(jc["min_gap"].get<double>() == 0.0);
    const auto rabi = read_json(dir / "degeneracy_rabi.json");
    CHECK(rabi["locus"] == "line");
    CHECK_THAT(rabi["min_gap"].get<double>(), WithinAbs(1.0, 1e-14));
    CHECK(fs::exists(dir / "surface_gap_rabi.svg"));
    const Csv s = read_csv(dir / "surface_rabi.csv");
    CHECK((s.header == std::vector<std::string>{"x", "p", "E_minus", "E_plus", "gap"}));
}

TEST_CASE("berry command") {
    const fs::path dir = scratch_dir("berry");
    REQUIRE(run_tool("berry --model jc --g 0.1 --nmax 30 --phi-nodes 128 --out " + dir.string()) == 0);
    const auto sum = read_json(dir / "berry_summary.json");
    for (const char* key : {"wilson_gamma", "connection_gamma", "generator_gamma"})
        CHECK(phase_distance(sum[key].get<double>(), pi) < 5e-3);
    CHECK(sum["gauge"] == "anchor_component");
    CHECK(sum.contains("residual"));
    const Csv curve = read_csv(dir / "berry_curve.csv");
    CHECK(curve.rows.size() == 129);
    CHECK((curve.header == std::vector<std::string>{"phi", "partial_phase"}));
    CHECK(curve.rows.front()[1] == 0.0);

    const fs::path dir2 = scratch_dir("berry_rabi");
    REQUIRE(run_tool("berry --model rabi --g 0.5,1 --nmax 30 --phi-nodes 64 --gauge parallel --out " + dir2.string()) ==
            0);
    const auto s2 = read_json(dir2 / "berry_summary.json");
    REQUIRE(s2["runs"].size() == 2);
    for (const auto& run : s2["runs"]) {
        CHECK(run.contains("wilson_gamma"));
        CHECK(run.contains("connection_gamma"));
        CHECK(run.contains("generator_gamma"));
        CHECK(read_csv(dir2 / run["curve_file"].get<std::string>()).rows.size() == 65);
    }
    CHECK(fs::exists(dir2 / "berry_curve_rabi_g0.5.csv"));
}

TEST_CASE("crossing and convergence commands") {
    const fs::path dir = scratch_dir("misc");
    REQUIRE(run_tool("crossing --nmax 10 --out " + dir.string()) == 0);
    const auto c = read_json(dir / "crossing.json");
    CHECK_THAT(c["analytic_g"].get<double>(), WithinAbs(std::sqrt(0.5), 1e-9));
    CHECK(c["quoted_value_discrepant"].get<bool>());
    REQUIRE(run_tool("convergence --model rabi --g 1 --levels 3 --nlist 10,20,40 --out " + dir.string()) == 0);
    CHECK(read_csv(dir / "convergence_rabi.csv").rows.size() == 3);
}

TEST_CASE("config file with flag override") {
    const fs::path dir = scratch_dir("config");
    const fs::path conf = dir / "run.json";
    std::ofstream(conf) << R"({"model": "rabi", "n_max": 12, "k_levels": 3, "output_dir": ")" << dir.string() << "\"}";
    REQUIRE(run_tool("spectrum --config " + conf.string() + " --levels 2 --g-max 0.05") == 0);
    const Csv csv = read_csv(dir / "spectrum_rabi.csv");
    CHECK(csv.header.size() == 3);
    bool nmax_recorded = false;
    for (const auto& m : csv.meta) nmax_recorded = nmax_recorded || m == "# n_max: 12";
    CHECK(nmax_recorded);
}

TEST_CASE("exit codes") {
    const fs::path dir = scratch_dir("exit");
    CHECK(run_tool("--version") == 0);
    CHECK(run_tool("") == 1);
    CHECK(run_tool("spectrum --bogus") == 1);
    CHECK(run_tool("spectrum --model dicke --out " + dir.string()) == 1);
    CHECK(run_tool("spectrum --nmax 5 --out /proc/rwa_forbidden") == 1);
    CHECK(run_tool("spectrum --config /nonexistent/run.json") == 1);
    CHECK(run_tool("crossing --g-hi 0.1 --out " + dir.string()) == 1);
    // a degenerate level has no well-defined generator phase
    CHECK(run_tool("berry --model jc --g 0 --level 1 --energy-index --nmax 5 --phi-nodes 16 --out " + dir.string()) == 2);
}

TEST_CASE("acceptance decision helpers") {
    using namespace rwa::acceptance;
    CHECK(check_phase_match(pi, -pi, 1e-12));
    CHECK(check_bracket(1e-3, bs_bracket_lo, bs_bracket_hi));
    CHECK_FALSE(check_bracket(2.7e-2, bs_bracket_lo, bs_bracket_hi));
    CHECK(check_decreasing({3.0, 2.0, 1.0}));
    CHECK_FALSE(check_decreasing({0.15, 0.39, 0.21}));

    // oracle chain detects a 1e-2 perturbation of the closed form
    const ModelParams p{1.0, 1.5, 0.1};
    const double exact = berry_exact_jc(1, p, Branch::minus);
    const DressedDoublet d = jc_doublet_analytic(1, p);
    const double gen = 2 * pi * d.coefficients[0][1] * d.coefficients[0][1];
    CHECK(check_oracle_chain(gen, exact));
    CHECK_FALSE(check_oracle_chain(gen, exact * (1 + 1e-2)));
    CHECK_FALSE(check_oracle_chain(gen, exact + 1e-2));

    CHECK(classify_closed_loop(0.0, 3.0, 5e-3) == LoopVerdict::zero);
    CHECK(classify_closed_loop(3.0, 3.0 + 2 * pi, 5e-3) == LoopVerdict::generator);
    CHECK(classify_closed_loop(1e-4, 2 * pi, 5e-3) == LoopVerdict::both);
    CHECK(classify_closed_loop(1.0, 2.0, 5e-3) == LoopVerdict::neither);
}
