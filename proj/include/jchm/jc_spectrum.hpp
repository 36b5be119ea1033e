// jc_spectrum.hpp — Closed-form Jaynes-Cummings doublets and their
// hopping-renormalized particle/hole variants.
//
// Under the recurrence ansatz the whole hopping term of the chain collapses
// to -J * c * N_boson, so the reduced Hamiltonian is a single-cavity JC model
// with boson energy w_c - c J. Every particle/hole quantity here is therefore
// the bare JC formula evaluated at effective_params(kind, J, params).

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "jchm/excitation.hpp"

namespace jchm {

inline constexpr int kDefaultMaxLevel = 64;

/// Cavity frequency, qubit splitting and light-matter coupling (g > 0).
/// The detuning is always derived, never stored.
class SystemParams {
public:
    SystemParams(double omega_c, double omega_z, double g)
        : omega_c_(omega_c), omega_z_(omega_z), g_(g) {
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::invalid_argument("coupling g must be positive and finite");
        if (!std::isfinite(omega_c) || !std::isfinite(omega_z))
            throw std::invalid_argument("frequencies must be finite");
    }

    /// omega_z = omega_c - delta.
    static SystemParams from_detuning(double omega_c, double delta, double g) {
        return SystemParams(omega_c, omega_c - delta, g);
    }

    /// g = 1, omega_c = 0: the frame all ratio-valued results are computed in.
    static SystemParams unit(double delta_over_g) {
        return from_detuning(0.0, delta_over_g, 1.0);
    }

    double omega_c() const noexcept { return omega_c_; }
    double omega_z() const noexcept { return omega_z_; }
    double g() const noexcept { return g_; }
    double detuning() const noexcept { return omega_c_ - omega_z_; }

    SystemParams scaled(double s) const { return {s * omega_c_, s * omega_z_, s * g_}; }

    bool operator==(const SystemParams&) const = default;

private:
    double omega_c_;
    double omega_z_;
    double g_;
};

struct DressedLevel {
    int n{1};
    Branch branch{Branch::lower};
    double energy{0.0};
    double sin_half_theta{0.0};
    double cos_half_theta{1.0};

    bool operator==(const DressedLevel&) const = default;
};

/// Doublet splitting sqrt(delta^2 + 4 g^2 n).
inline double chi(int n, double delta_eff, double g) {
    if (n < 1) throw std::invalid_argument("chi: excitation number must be >= 1");
    if (!(g > 0.0)) throw std::invalid_argument("chi: coupling g must be positive");
    return std::sqrt(delta_eff * delta_eff + 4.0 * g * g * static_cast<double>(n));
}

/// Replace w_c by w_c - c J, where c is the recurrence coefficient of `kind`
/// (particle: w_c - (sqrt3+1) J, hole: w_c + (sqrt3-1) J, bare: unchanged).
inline SystemParams effective_params(ExcitationKind kind, double J, const SystemParams& params) {
    if (!(J >= 0.0)) throw std::invalid_argument("hopping J must be non-negative");
    if (kind == ExcitationKind::bare || J == 0.0) return params;
    const double shift = recurrence_coefficient(kind) * J;
    return {params.omega_c() - shift, params.omega_z(), params.g()};
}

/// Bare JC doublet member |n, +/-> for the given parameters.
inline DressedLevel dressed_level(int n, Branch branch, const SystemParams& p) {
    if (n < 1) throw std::invalid_argument("dressed_level: n must be >= 1 (use ground_energy for n = 0)");
    const double delta = p.detuning();
    const double x = chi(n, delta, p.g());
    const double sign = branch == Branch::upper ? 1.0 : -1.0;

    DressedLevel level;
    level.n = n;
    level.branch = branch;
    level.energy = (n - 0.5) * p.omega_c() + 0.5 * p.omega_z() + sign * 0.5 * x;
    level.sin_half_theta = std::sqrt(std::max(0.0, 0.5 * (1.0 - delta / x)));
    level.cos_half_theta = std::sqrt(std::max(0.0, 0.5 * (1.0 + delta / x)));
    return level;
}

inline DressedLevel dressed_level(int n, Branch branch, ExcitationKind kind, double J,
                                  const SystemParams& params) {
    return dressed_level(n, branch, effective_params(kind, J, params));
}

/// Energy of |0, down>. Zero for every kind: with no boson present the
/// hopping shift has nothing to act on.
inline double ground_energy(ExcitationKind /*kind*/, double /*J*/, const SystemParams& /*params*/) noexcept {
    return 0.0;
}

/// Lower-branch energy including the n = 0 ground state.
inline double lower_energy(int n, ExcitationKind kind, double J, const SystemParams& params) {
    if (n == 0) return ground_energy(kind, J, params);
    return dressed_level(n, Branch::lower, kind, J, params).energy;
}

/// Numerically diagonalizes the single-site JC block on {|n,down>, |n-1,up>}
/// and returns max |numeric - closed form| over both eigenvalues.
inline double jc_numeric_check(int n, const SystemParams& p) {
    if (n < 1) throw std::invalid_argument("jc_numeric_check: n must be >= 1");
    const double coupling = p.g() * std::sqrt(static_cast<double>(n));
    Eigen::Matrix2d block;
    block << n * p.omega_c(), coupling,
             coupling, (n - 1) * p.omega_c() + p.omega_z();

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(block, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();  // ascending
    const double lo = dressed_level(n, Branch::lower, p).energy;
    const double hi = dressed_level(n, Branch::upper, p).energy;
    return std::max(std::abs(ev(0) - lo), std::abs(ev(1) - hi));
}

struct SpectrumRow {
    int n;
    double energy_lower;
    double energy_upper;
    double sin_half_theta;
};

/// Rows n = 1..levels of the (possibly renormalized) JC ladder.
inline std::vector<SpectrumRow> spectrum_table(ExcitationKind kind, double J, const SystemParams& params,
                                               int levels = kDefaultMaxLevel) {
    if (levels < 1) throw std::invalid_argument("spectrum_table: levels must be >= 1");
    const SystemParams p = effective_params(kind, J, params);
    std::vector<SpectrumRow> rows;
    rows.reserve(static_cast<std::size_t>(levels));
    for (int n = 1; n <= levels; ++n) {
        const auto lo = dressed_level(n, Branch::lower, p);
        const auto hi = dressed_level(n, Branch::upper, p);
        rows.push_back({n, lo.energy, hi.energy, lo.sin_half_theta});
    }
    return rows;
}

}  // namespace jchm
