// commands.hpp — Table-producing bodies of the jchm CLI subcommands.
//
// Flag parsing lives in tools/jchm_cli.cpp; everything here takes plain
// option structs so the tests can drive the same code paths in-process.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "jchm/ansatz_reduction.hpp"
#include "jchm/ed_oracle.hpp"
#include "jchm/jc_spectrum.hpp"
#include "jchm/output.hpp"
#include "jchm/phase_boundary.hpp"

namespace jchm::cli {

struct Emission {
    io::RunManifest manifest;
    io::Table table;
    bool checks_passed{true};  // only ansatz-check can clear this
};

/// n points from lo to hi inclusive; the last point is exactly hi.
inline std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("need at least 2 grid points");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.back() = hi;
    return out;
}

inline void note_extension(io::RunManifest& m, int lobe) {
    if (lobe >= 2) m.note("extension: lobe n >= 2 uses the same energy-difference definitions as n = 1");
}

struct SpectrumOptions {
    double delta_over_g{0.0};
    double g{1.0};
    double omega_c{0.0};
    int levels{kDefaultMaxLevel};
    ExcitationKind kind{ExcitationKind::bare};
    double J_over_g{0.0};
};

inline Emission cmd_spectrum(const SpectrumOptions& o) {
    if (o.levels < 1) throw std::invalid_argument("--levels must be >= 1");
    const SystemParams params = SystemParams::from_detuning(o.omega_c, o.delta_over_g * o.g, o.g);

    Emission e;
    e.manifest.command = "spectrum";
    e.manifest.add("delta_over_g", o.delta_over_g);
    e.manifest.add("g", o.g);
    e.manifest.add("omega_c", o.omega_c);
    e.manifest.add("levels", o.levels);
    e.manifest.add("kind", std::string(to_string(o.kind)));
    e.manifest.add("J_over_g", o.J_over_g);

    e.table.columns = {"n", "E_lower", "E_upper", "sin_half_theta"};
    for (const auto& row : spectrum_table(o.kind, o.J_over_g * o.g, params, o.levels))
        e.table.add_row({row.n, row.energy_lower, row.energy_upper, row.sin_half_theta});
    return e;
}

struct BoundaryOptions {
    double delta_over_g{0.0};
    int lobe{1};
    double j_min{0.0};
    double j_max{0.25};
    int steps{101};
};

inline Emission cmd_boundary(const BoundaryOptions& o) {
    if (!(o.j_min < o.j_max)) throw std::invalid_argument("--j-min must be smaller than --j-max");
    if (o.j_min < 0.0) throw std::invalid_argument("--j-min must be non-negative");
    if (o.steps < 2) throw std::invalid_argument("--steps must be >= 2");

    const auto grid = linspace(o.j_min, o.j_max, o.steps);
    const BoundaryCurve curve = boundary_curve(o.delta_over_g, o.lobe, grid);

    Emission e;
    e.manifest.command = "boundary";
    e.manifest.add("delta_over_g", o.delta_over_g);
    e.manifest.add("lobe", o.lobe);
    e.manifest.add("j_min", o.j_min);
    e.manifest.add("j_max", o.j_max);
    e.manifest.add("steps", o.steps);
    note_extension(e.manifest, o.lobe);

    e.table.columns = {"J_over_g", "mu_upper_minus_wc_over_g", "mu_lower_minus_wc_over_g"};
    for (const auto& s : curve.samples) e.table.add_row({s.J_over_g, s.mu_upper, s.mu_lower});
    return e;
}

struct CriticalOptions {
    double delta_over_g{0.0};
    int lobe{1};
    BracketOptions bracket{};
};

inline Emission cmd_critical(const CriticalOptions& o) {
    const CriticalPoint cp = critical_hopping(o.delta_over_g, o.lobe, o.bracket);

    Emission e;
    e.manifest.command = "critical";
    e.manifest.add("delta_over_g", o.delta_over_g);
    e.manifest.add("lobe", o.lobe);
    e.manifest.add("j_min", o.bracket.j_min);
    e.manifest.add("j_max", o.bracket.j_max);
    e.manifest.add("scan_points", o.bracket.scan_points);
    note_extension(e.manifest, o.lobe);

    e.table.columns = {"delta_over_g", "lobe", "jc_over_g", "mu_minus_wc_over_g", "solver_residual"};
    e.table.add_row({cp.delta_over_g, cp.lobe, cp.jc_over_g, cp.mu_at_crossing, cp.solver_residual});
    return e;
}

struct SweepOptions {
    double delta_min{-10.0};
    double delta_max{0.0};
    int steps{41};
    int lobe{1};
    BracketOptions bracket{};
    unsigned threads{1};
};

inline Emission cmd_sweep(const SweepOptions& o) {
    if (!(o.delta_min < o.delta_max)) throw std::invalid_argument("--delta-min must be smaller than --delta-max");
    if (o.steps < 2) throw std::invalid_argument("--steps must be >= 2");

    const auto grid = linspace(o.delta_min, o.delta_max, o.steps);
    const auto points = jc_vs_detuning(grid, o.lobe, o.bracket, o.threads);

    Emission e;
    e.manifest.command = "sweep";
    e.manifest.add("delta_min", o.delta_min);
    e.manifest.add("delta_max", o.delta_max);
    e.manifest.add("steps", o.steps);
    e.manifest.add("lobe", o.lobe);
    e.manifest.add("j_max", o.bracket.j_max);
    note_extension(e.manifest, o.lobe);

    e.table.columns = {"delta_over_g", "jc_over_g"};
    for (const auto& p : points) {
        if (p.point) {
            e.table.add_row({p.delta_over_g, p.point->jc_over_g});
        } else {
            e.table.add_row({p.delta_over_g, io::Cell::empty()});
            e.manifest.note("delta_over_g=" + io::format_number(p.delta_over_g) + ": " + p.error);
        }
    }
    return e;
}

struct AnsatzCheckOptions {
    ExcitationKind kind{ExcitationKind::particle};
    int K{8};
    int window{32};
    std::complex<double> seed0{1.0, 0.0};
    std::complex<double> seed1{1.0, 0.0};
};

inline Emission cmd_ansatz_check(const AnsatzCheckOptions& o) {
    const AnsatzTable table = build_table(o.kind, o.K);
    const double defect = recurrence_defect(table);
    const double cancel = cancellation_residual(table);
    const WindowCheckReport win = window_identity_check(o.kind, o.window, o.seed0, o.seed1);

    Emission e;
    e.manifest.command = "ansatz-check";
    e.manifest.add("kind", std::string(to_string(o.kind)));
    e.manifest.add("K", o.K);
    e.manifest.add("window", o.window);
    e.manifest.add("seed0", io::format_number(o.seed0.real()) + "+" + io::format_number(o.seed0.imag()) + "i");
    e.manifest.add("seed1", io::format_number(o.seed1.real()) + "+" + io::format_number(o.seed1.imag()) + "i");

    e.table.columns = {"quantity", "k", "value"};
    for (std::size_t k = 0; k < table.lambda.size(); ++k) e.table.add_row({"lambda", k, table.lambda[k]});
    e.table.add_row({"recurrence_defect", io::Cell::empty(), defect});
    e.table.add_row({"cancellation_residual", io::Cell::empty(), cancel});
    e.table.add_row({"window_residual", io::Cell::empty(), win.residual});
    e.table.add_row({"window_scale", io::Cell::empty(), win.scale});
    e.table.add_row({"window_relative_residual", io::Cell::empty(), win.relative_residual()});

    const bool ok_defect = defect <= kRecurrenceTolerance;
    const bool ok_cancel = cancel <= kCoefficientTolerance;
    const bool ok_window = win.passed();
    e.manifest.note(std::string("recurrence: ") + (ok_defect ? "pass" : "FAIL"));
    e.manifest.note(std::string("cancellation: ") + (ok_cancel ? "pass" : "FAIL"));
    e.manifest.note(std::string("window identity: ") + (ok_window ? "pass" : "FAIL"));
    e.checks_passed = ok_defect && ok_cancel && ok_window;
    return e;
}

struct EdOptionsCli {
    int L{4};
    int n_max{3};
    double delta_over_g{0.0};
    ed::Boundary boundary{ed::Boundary::periodic};
    int filling{1};
    double memory_limit_bytes{ed::kDefaultMemoryLimit};
};

inline ed::ChainSpec chain_for(const EdOptionsCli& o, double J_over_g) {
    ed::ChainSpec spec;
    spec.L = o.L;
    spec.n_max = o.n_max;
    spec.boundary = o.boundary;
    spec.J = J_over_g;
    spec.params = SystemParams::unit(o.delta_over_g);
    spec.validate();
    return spec;
}

inline void describe_chain(io::RunManifest& m, const EdOptionsCli& o) {
    m.add("L", o.L);
    m.add("n_max", o.n_max);
    m.add("delta_over_g", o.delta_over_g);
    m.add("boundary", std::string(ed::to_string(o.boundary)));
    m.add("filling", o.filling);
    m.note("energies in units of g with omega_c = 0");
}

inline Emission cmd_ed(const EdOptionsCli& o, double J_over_g) {
    ed::EdOptions eo;
    eo.memory_limit_bytes = o.memory_limit_bytes;
    const ed::EdResult r = ed::chemical_potentials_ed(chain_for(o, J_over_g), o.filling, eo);

    Emission e;
    e.manifest.command = "ed";
    describe_chain(e.manifest, o);
    e.manifest.add("J_over_g", J_over_g);
    for (const auto& w : r.warnings) e.manifest.note("warning: " + w);

    e.table.columns = {"J_over_g",    "mu_particle_minus_wc_over_g", "mu_hole_minus_wc_over_g", "gap_over_g",
                       "N_hole",      "dim_hole",                    "E0_hole",                 "N_filled",
                       "dim_filled",  "E0_filled",                   "N_particle",              "dim_particle",
                       "E0_particle"};
    std::vector<io::Cell> row{J_over_g, r.mu_particle, r.mu_hole, r.gap()};
    for (const auto& s : r.sectors) {
        row.emplace_back(s.total_excitation);
        row.emplace_back(s.dimension);
        row.emplace_back(s.energy);
    }
    e.table.add_row(std::move(row));
    return e;
}

inline Emission cmd_ed_compare(const EdOptionsCli& o, const std::vector<double>& j_grid) {
    require_ascending_grid(j_grid, "ed-compare");
    if (j_grid.front() < 0.0) throw std::invalid_argument("--j-grid values must be non-negative");
    ed::EdOptions eo;
    eo.memory_limit_bytes = o.memory_limit_bytes;

    Emission e;
    e.manifest.command = "ed-compare";
    describe_chain(e.manifest, o);
    note_extension(e.manifest, o.filling);

    e.table.columns = {"J_over_g", "mu_p_ansatz", "mu_p_ed", "mu_h_ansatz", "mu_h_ed", "gap_ansatz", "gap_ed"};
    std::vector<double> gaps;
    std::vector<std::string> warnings;
    for (double J : j_grid) {
        const ed::EdResult r = ed::chemical_potentials_ed(chain_for(o, J), o.filling, eo);
        const LobeQuery q{o.delta_over_g, o.filling, J};
        const double mp = mu_particle(q);
        const double mh = mu_hole(q);
        e.table.add_row({J, mp, r.mu_particle, mh, r.mu_hole, mp - mh, r.gap()});
        gaps.push_back(r.gap());
        if (warnings.empty()) warnings = r.warnings;
    }
    for (const auto& w : warnings) e.manifest.note("warning: " + w);

    bool decreasing = true;
    for (std::size_t i = 1; i < gaps.size(); ++i) decreasing = decreasing && gaps[i] < gaps[i - 1];
    e.manifest.note(std::string("ED gap strictly decreasing over grid: ") + (decreasing ? "yes" : "no"));
    return e;
}

}  // namespace jchm::cli
