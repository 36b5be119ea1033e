// phase_boundary.hpp — Particle/hole chemical potentials, Mott-lobe
// boundaries and the critical hopping where they meet.
//
// Chemical potentials are always energy differences of the renormalized
// lower polaritons:
//   mu_P(n) = E^P_{n+1,-} - E^P_{n,-},   mu_H(n) = E^H_{n,-} - E^H_{n-1,-},
// with E_{0,-} = 0. For n = 1 at zero detuning this is
//   (mu_P - w_c)/g = -(sqrt3+1) J/g - sqrt((2+sqrt3) J^2/2g^2 + 2)
//                                   + sqrt((2+sqrt3) J^2/2g^2 + 1)
// Note the leading -(sqrt3+1), not -(sqrt3-1): only the former follows from
// the energy difference and puts the lobe tip at J_c/g = 0.193.
// All results are reported as (mu - w_c)/g and J/g.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "jchm/errors.hpp"
#include "jchm/jc_spectrum.hpp"

namespace jchm {

struct LobeQuery {
    double delta_over_g{0.0};
    int lobe{1};
    double J_over_g{0.0};

    void validate() const {
        if (lobe < 1) throw std::invalid_argument("lobe index must be >= 1");
        if (!(J_over_g >= 0.0) || !std::isfinite(J_over_g))
            throw std::invalid_argument("J/g must be finite and non-negative");
        if (!std::isfinite(delta_over_g)) throw std::invalid_argument("delta/g must be finite");
    }
};

/// (mu_P - w_c)/g for absolute parameters and absolute hopping J.
inline double mu_particle(const SystemParams& params, double J, int lobe) {
    if (lobe < 1) throw std::invalid_argument("lobe index must be >= 1");
    const SystemParams p = effective_params(ExcitationKind::particle, J, params);
    const double e_hi = dressed_level(lobe + 1, Branch::lower, p).energy;
    const double e_lo = dressed_level(lobe, Branch::lower, p).energy;
    return (e_hi - e_lo - params.omega_c()) / params.g();
}

/// (mu_H - w_c)/g for absolute parameters and absolute hopping J.
inline double mu_hole(const SystemParams& params, double J, int lobe) {
    if (lobe < 1) throw std::invalid_argument("lobe index must be >= 1");
    const double e_hi = lower_energy(lobe, ExcitationKind::hole, J, params);
    const double e_lo = lower_energy(lobe - 1, ExcitationKind::hole, J, params);
    return (e_hi - e_lo - params.omega_c()) / params.g();
}

/// Lobe width (mu_P - mu_H)/g; positive inside the Mott lobe.
inline double lobe_gap(const SystemParams& params, double J, int lobe) {
    return mu_particle(params, J, lobe) - mu_hole(params, J, lobe);
}

inline double mu_particle(const LobeQuery& q) {
    q.validate();
    return mu_particle(SystemParams::unit(q.delta_over_g), q.J_over_g, q.lobe);
}

inline double mu_hole(const LobeQuery& q) {
    q.validate();
    return mu_hole(SystemParams::unit(q.delta_over_g), q.J_over_g, q.lobe);
}

inline double lobe_gap(const LobeQuery& q) { return mu_particle(q) - mu_hole(q); }

struct BoundarySample {
    double J_over_g;
    double mu_upper;  // particle branch, (mu - w_c)/g
    double mu_lower;  // hole branch, (mu - w_c)/g

    double gap() const noexcept { return mu_upper - mu_lower; }
};

struct BoundaryCurve {
    double delta_over_g{0.0};
    int lobe{1};
    std::vector<BoundarySample> samples;
};

inline void require_ascending_grid(std::span<const double> grid, const char* what) {
    if (grid.empty()) throw std::invalid_argument(std::string(what) + ": grid must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw std::invalid_argument(std::string(what) + ": grid values must be finite");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument(std::string(what) + ": grid must be strictly ascending");
    }
}

inline BoundaryCurve boundary_curve(double delta_over_g, int lobe, std::span<const double> j_grid) {
    require_ascending_grid(j_grid, "boundary_curve");
    if (j_grid.front() < 0.0) throw std::invalid_argument("boundary_curve: J/g must be non-negative");

    BoundaryCurve curve{delta_over_g, lobe, {}};
    curve.samples.reserve(j_grid.size());
    for (double J : j_grid) {
        const LobeQuery q{delta_over_g, lobe, J};
        curve.samples.push_back({J, mu_particle(q), mu_hole(q)});
    }
    return curve;
}

/// Search bracket for the lobe tip, in units of g.
struct BracketOptions {
    double j_min{0.0};
    double j_max{2.0};
    int scan_points{64};
    // Bisection continues to full double precision unless a coarser
    // tolerance is requested; 1e-15 keeps J_c/g scale-covariant to 1e-12.
    double j_tolerance{1e-15};
    double residual_tolerance{1e-10};
};

struct CriticalPoint {
    double delta_over_g{0.0};
    int lobe{1};
    double jc_over_g{0.0};
    double jc{0.0};              // absolute hopping, jc_over_g * g
    double mu_at_crossing{0.0};  // (mu - w_c)/g at the tip
    double solver_residual{0.0}; // |gap(J_c)|
    double bracket_lo{0.0};      // sign-change cell found by the scan, J/g
    double bracket_hi{0.0};
    int iterations{0};
};

/// Smallest root of the lobe gap inside [j_min, j_max] * g: coarse scan for
/// the first sign change, then bisection.
inline CriticalPoint critical_hopping(const SystemParams& params, int lobe, const BracketOptions& opts = {}) {
    if (lobe < 1) throw std::invalid_argument("lobe index must be >= 1");
    if (!(opts.j_min >= 0.0) || !(opts.j_max > opts.j_min) || !std::isfinite(opts.j_max))
        throw std::invalid_argument("critical_hopping: bracket must satisfy 0 <= j_min < j_max");
    if (opts.scan_points < 2) throw std::invalid_argument("critical_hopping: scan_points must be >= 2");

    const double g = params.g();
    auto gap = [&](double J) { return lobe_gap(params, J, lobe); };
    auto bracket_text = [&] {
        return "[" + std::to_string(opts.j_min) + ", " + std::to_string(opts.j_max) + "]";
    };

    const double lo0 = opts.j_min * g;
    const double hi0 = opts.j_max * g;
    double gap_prev = gap(lo0);
    if (!(gap_prev > 0.0))
        throw NoCrossingError("no particle/hole crossing: gap is not positive at the lower end of J/g bracket " +
                                  bracket_text(),
                              opts.j_min, opts.j_max);

    double lo = lo0;
    double hi = lo0;
    bool found = false;
    for (int i = 1; i < opts.scan_points; ++i) {
        const double J = lo0 + (hi0 - lo0) * static_cast<double>(i) / static_cast<double>(opts.scan_points - 1);
        const double value = gap(J);
        if (value <= 0.0) {
            hi = J;
            found = true;
            break;
        }
        lo = J;
        gap_prev = value;
    }
    if (!found)
        throw NoCrossingError("no particle/hole crossing: gap stays positive over J/g bracket " + bracket_text(),
                              opts.j_min, opts.j_max);

    CriticalPoint cp;
    cp.delta_over_g = params.detuning() / g;
    cp.lobe = lobe;
    cp.bracket_lo = lo / g;
    cp.bracket_hi = hi / g;

    // invariant: gap(lo) > 0 >= gap(hi)
    double gap_lo = gap_prev;
    double gap_hi = gap(hi);
    int iter = 0;
    while (hi - lo > opts.j_tolerance * g && iter < 400) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double value = gap(mid);
        ++iter;
        if (value > 0.0) {
            lo = mid;
            gap_lo = value;
        } else {
            hi = mid;
            gap_hi = value;
        }
    }

    const bool take_hi = std::abs(gap_hi) <= std::abs(gap_lo);
    const double jc = take_hi ? hi : lo;
    cp.jc = jc;
    cp.jc_over_g = jc / g;
    cp.solver_residual = take_hi ? std::abs(gap_hi) : std::abs(gap_lo);
    cp.mu_at_crossing = mu_particle(params, jc, lobe);
    cp.iterations = iter;
    if (!(cp.solver_residual <= opts.residual_tolerance))
        throw SolverError("bisection ended with gap residual " + std::to_string(cp.solver_residual) +
                              " above tolerance",
                          static_cast<std::size_t>(iter));
    return cp;
}

inline CriticalPoint critical_hopping(double delta_over_g, int lobe, const BracketOptions& opts = {}) {
    return critical_hopping(SystemParams::unit(delta_over_g), lobe, opts);
}

struct SweepPoint {
    double delta_over_g{0.0};
    std::optional<CriticalPoint> point;
    std::string error;  // set when no crossing was found
};

/// J_c(delta) over a detuning grid. A failure at one detuning is recorded
/// on that sample and does not abort the sweep. Results do not depend on
/// the thread count.
inline std::vector<SweepPoint> jc_vs_detuning(std::span<const double> delta_grid, int lobe,
                                              const BracketOptions& opts = {}, unsigned threads = 1) {
    require_ascending_grid(delta_grid, "jc_vs_detuning");
    if (lobe < 1) throw std::invalid_argument("lobe index must be >= 1");
    if (!(opts.j_min >= 0.0) || !(opts.j_max > opts.j_min) || opts.scan_points < 2)
        throw std::invalid_argument("jc_vs_detuning: invalid bracket options");
    std::vector<SweepPoint> out(delta_grid.size());

    auto solve = [&](std::size_t i) {
        SweepPoint& sp = out[i];
        sp.delta_over_g = delta_grid[i];
        try {
            sp.point = critical_hopping(delta_grid[i], lobe, opts);
        } catch (const NoCrossingError& e) {
            sp.error = e.what();
        } catch (const SolverError& e) {
            sp.error = e.what();
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, out.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < out.size(); ++i) solve(i);
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < out.size(); i += workers) solve(i);
        });
    pool.clear();  // joins
    return out;
}

}  // namespace jchm
