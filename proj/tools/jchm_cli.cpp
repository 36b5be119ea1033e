// jchm_cli.cpp — Command-line front end: spectra, lobe boundaries, critical
// hopping, detuning sweeps, ansatz checks and exact-diagonalization runs.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jchm/commands.hpp"
#include "jchm/errors.hpp"
#include "jchm/version.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kNoCrossing = 3,
    kSolver = 4,
    kResource = 5,
    kCheckFailed = 6,
};

struct OutputFlags {
    std::string format{"csv"};
    std::string path{"-"};
    bool timing{false};
};

void add_output_flags(CLI::App* cmd, OutputFlags& out) {
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", out.path, "Output file ('-' for stdout)");
    cmd->add_flag("--timing", out.timing, "Record wall-clock duration in the manifest (breaks byte-identity)");
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad number '" + item + "' in list");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

int emit(jchm::cli::Emission e, const OutputFlags& out, std::chrono::steady_clock::time_point t0) {
    if (out.timing)
        e.manifest.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto format = jchm::io::parse_format(out.format);
    if (out.path == "-") {
        jchm::io::write(std::cout, format, e.manifest, e.table);
        std::cout.flush();
    } else {
        std::ofstream file(out.path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file '" + out.path + "'");
        jchm::io::write(file, format, e.manifest, e.table);
    }
    if (!e.checks_passed) {
        std::cerr << "jchm: one or more checks exceeded tolerance\n";
        return kCheckFailed;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace jchm;

    CLI::App app{"Mott-lobe phase diagram of the 1D Jaynes-Cummings-Hubbard chain"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    OutputFlags out;
    std::string kind_text = "bare";
    std::string boundary_text = "periodic";
    std::string j_grid_text = "0,0.05,0.1,0.15";
    std::vector<double> seeds{1.0, 0.0, 1.0, 0.0};
    double ed_J = 0.0;

    cli::SpectrumOptions spec_o;
    auto* spectrum = app.add_subcommand("spectrum", "Dressed-state ladder E_{n,-}, E_{n,+}, sin(theta/2)");
    spectrum->add_option("--delta", spec_o.delta_over_g, "Detuning delta/g");
    spectrum->add_option("--g", spec_o.g, "Coupling g (absolute)")->check(CLI::PositiveNumber);
    spectrum->add_option("--omega-c", spec_o.omega_c, "Cavity frequency (absolute)");
    spectrum->add_option("--levels", spec_o.levels, "Highest excitation number")->check(CLI::PositiveNumber);
    spectrum->add_option("--kind", kind_text, "bare | particle | hole")
        ->check(CLI::IsMember({"bare", "particle", "hole"}));
    spectrum->add_option("--J", spec_o.J_over_g, "Hopping J/g")->check(CLI::NonNegativeNumber);
    add_output_flags(spectrum, out);

    cli::BoundaryOptions bnd_o;
    auto* boundary = app.add_subcommand("boundary", "Particle and hole lobe boundaries on a J/g grid");
    boundary->add_option("--delta", bnd_o.delta_over_g, "Detuning delta/g");
    boundary->add_option("--lobe", bnd_o.lobe, "Lobe index n")->check(CLI::PositiveNumber);
    boundary->add_option("--j-min", bnd_o.j_min, "Smallest J/g");
    boundary->add_option("--j-max", bnd_o.j_max, "Largest J/g");
    boundary->add_option("--steps", bnd_o.steps, "Number of grid points");
    add_output_flags(boundary, out);

    cli::CriticalOptions crit_o;
    auto* critical = app.add_subcommand("critical", "Critical hopping J_c/g at the lobe tip");
    critical->add_option("--delta", crit_o.delta_over_g, "Detuning delta/g");
    critical->add_option("--lobe", crit_o.lobe, "Lobe index n")->check(CLI::PositiveNumber);
    critical->add_option("--j-min", crit_o.bracket.j_min, "Bracket lower end, J/g");
    critical->add_option("--j-max", crit_o.bracket.j_max, "Bracket upper end, J/g");
    critical->add_option("--scan-points", crit_o.bracket.scan_points, "Coarse scan points before bisection");
    add_output_flags(critical, out);

    cli::SweepOptions sweep_o;
    auto* sweep = app.add_subcommand("sweep", "J_c/g as a function of detuning");
    sweep->add_option("--delta-min", sweep_o.delta_min, "Smallest delta/g");
    sweep->add_option("--delta-max", sweep_o.delta_max, "Largest delta/g");
    sweep->add_option("--steps", sweep_o.steps, "Number of detuning points");
    sweep->add_option("--lobe", sweep_o.lobe, "Lobe index n")->check(CLI::PositiveNumber);
    sweep->add_option("--j-max", sweep_o.bracket.j_max, "Bracket upper end, J/g");
    sweep->add_option("--threads", sweep_o.threads, "Worker threads")->check(CLI::PositiveNumber);
    add_output_flags(sweep, out);

    cli::AnsatzCheckOptions ans_o;
    std::string ans_kind = "particle";
    auto* ansatz = app.add_subcommand("ansatz-check", "Hopping-sum coefficients and window identity");
    ansatz->add_option("--kind", ans_kind, "particle | hole")->check(CLI::IsMember({"particle", "hole"}));
    ansatz->add_option("--K", ans_o.K, "Largest hopping distance");
    ansatz->add_option("--window", ans_o.window, "Window length L");
    ansatz->add_option("--seeds", seeds, "re0 im0 re1 im1")->expected(4);
    add_output_flags(ansatz, out);

    cli::EdOptionsCli ed_o;
    auto add_chain_flags = [&](CLI::App* cmd) {
        cmd->add_option("--L", ed_o.L, "Chain length")->check(CLI::PositiveNumber);
        cmd->add_option("--n-max", ed_o.n_max, "Boson cutoff per site")->check(CLI::PositiveNumber);
        cmd->add_option("--delta", ed_o.delta_over_g, "Detuning delta/g");
        cmd->add_option("--boundary", boundary_text, "periodic | open")
            ->check(CLI::IsMember({"periodic", "open"}));
        cmd->add_option("--filling", ed_o.filling, "Excitations per site n")->check(CLI::PositiveNumber);
        add_output_flags(cmd, out);
    };
    auto* ed_cmd = app.add_subcommand("ed", "Exact-diagonalization chemical potentials");
    add_chain_flags(ed_cmd);
    ed_cmd->add_option("--J", ed_J, "Hopping J/g")->check(CLI::NonNegativeNumber);
    auto* ed_compare = app.add_subcommand("ed-compare", "Ansatz vs exact diagonalization on a J/g grid");
    add_chain_flags(ed_compare);
    ed_compare->add_option("--j-grid", j_grid_text, "Comma-separated ascending J/g values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*spectrum) {
            spec_o.kind = parse_excitation_kind(kind_text);
            return emit(cli::cmd_spectrum(spec_o), out, t0);
        }
        if (*boundary) return emit(cli::cmd_boundary(bnd_o), out, t0);
        if (*critical) return emit(cli::cmd_critical(crit_o), out, t0);
        if (*sweep) return emit(cli::cmd_sweep(sweep_o), out, t0);
        if (*ansatz) {
            ans_o.kind = parse_excitation_kind(ans_kind);
            ans_o.seed0 = {seeds[0], seeds[1]};
            ans_o.seed1 = {seeds[2], seeds[3]};
            return emit(cli::cmd_ansatz_check(ans_o), out, t0);
        }
        ed_o.boundary = ed::parse_boundary(boundary_text);
        ed_o.memory_limit_bytes = ed::memory_limit_from_env();
        if (*ed_cmd) return emit(cli::cmd_ed(ed_o, ed_J), out, t0);
        if (*ed_compare) return emit(cli::cmd_ed_compare(ed_o, parse_list(j_grid_text)), out, t0);
    } catch (const NoCrossingError& e) {
        std::cerr << "jchm: " << e.what() << '\n';
        return kNoCrossing;
    } catch (const SolverError& e) {
        std::cerr << "jchm: solver error after " << e.iterations() << " iterations: " << e.what() << '\n';
        return kSolver;
    } catch (const ResourceError& e) {
        std::cerr << "jchm: resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "jchm: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "jchm: internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
