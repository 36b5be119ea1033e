// ansatz_reduction.hpp — Hopping-sum reduction under the particle/hole
// recurrence ansatz.
//
// With S_k = sum_j (a+_{j+k} a_j + a+_j a_{j+k}) the ansatz gives the sum
// recurrence S_{k+1} = c S_k - S_{k-1}, S_0 = 2 N. Every S_k is then
// lambda_k N with lambda_0 = 2, lambda_1 = c.
//
// The ansatz is not an operator identity (it breaks the canonical
// commutators), so everything here works on c-number amplitude sequences and
// on the coefficients lambda_k.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "jchm/errors.hpp"
#include "jchm/excitation.hpp"

namespace jchm {

/// Tolerances for the algebraic coefficient identities and window checks.
inline constexpr double kCoefficientTolerance = 1e-14;
inline constexpr double kWindowTolerance = 1e-10;
inline constexpr double kRecurrenceTolerance = 1e-12;

inline constexpr int kMaxWindow = 4096;
// |largest root| of the particle recurrence is ~2.297; 200 sites keeps
// |alpha|^2 near 1e145, far from overflow.
inline constexpr int kMaxParticleWindow = 200;

struct AnsatzTable {
    ExcitationKind kind{ExcitationKind::particle};
    double c{0.0};
    std::vector<double> lambda;  // lambda_0 .. lambda_K

    int max_distance() const noexcept { return static_cast<int>(lambda.size()) - 1; }
};

inline void require_ansatz_kind(ExcitationKind kind) {
    if (kind == ExcitationKind::bare)
        throw std::invalid_argument("ansatz requires kind particle or hole");
}

/// lambda_0..lambda_K for the given kind. K >= 2.
inline AnsatzTable build_table(ExcitationKind kind, int K) {
    require_ansatz_kind(kind);
    if (K < 2) throw std::invalid_argument("build_table: K must be >= 2");

    AnsatzTable t;
    t.kind = kind;
    t.c = recurrence_coefficient(kind);
    t.lambda.resize(static_cast<std::size_t>(K) + 1);
    t.lambda[0] = 2.0;
    t.lambda[1] = t.c;
    for (std::size_t k = 1; k + 1 < t.lambda.size(); ++k)
        t.lambda[k + 1] = t.c * t.lambda[k] - t.lambda[k - 1];
    return t;
}

/// Largest |lambda_{k+1} - c lambda_k + lambda_{k-1}| over the table,
/// relative to max(1, |lambda_{k+1}|) since particle coefficients grow
/// geometrically.
inline double recurrence_defect(const AnsatzTable& t) {
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < t.lambda.size(); ++k) {
        const double d = std::abs(t.lambda[k + 1] - t.c * t.lambda[k] + t.lambda[k - 1]);
        worst = std::max(worst, d / std::max(1.0, std::abs(t.lambda[k + 1])));
    }
    return worst;
}

/// Coefficient of N left after adding a next-nearest-neighbour hopping +J/2
/// to the nearest-neighbour -J term: |-lambda_1 + lambda_2 / 2|.
inline double cancellation_residual(const AnsatzTable& t) {
    if (t.lambda.size() < 3) throw std::invalid_argument("cancellation_residual: table needs K >= 2");
    return std::abs(-t.lambda[1] + 0.5 * t.lambda[2]);
}

inline double cancellation_residual(ExcitationKind kind) {
    return cancellation_residual(build_table(kind, 2));
}

struct WindowCheckReport {
    ExcitationKind kind{ExcitationKind::particle};
    int length{0};
    std::complex<double> seed0;
    std::complex<double> seed1;
    double bilinear_sum{0.0};       // T = sum_{j=0}^{L-2} 2 Re(conj(a_j) a_{j+1})
    double interior_occupancy{0.0}; // sum_{j=1}^{L-2} |a_j|^2
    std::complex<double> boundary;  // conj(a_0) a_1 + conj(a_{L-1}) a_{L-2}
    double residual{0.0};
    double scale{0.0};              // max_j |a_j|^2

    double relative_residual() const noexcept { return residual / std::max(scale, 1.0); }
    bool passed() const noexcept { return relative_residual() <= kWindowTolerance; }
};

/// Amplitudes a_0..a_{L-1} generated by a_{j+1} = c a_j - a_{j-1}.
inline std::vector<std::complex<double>> recurrence_amplitudes(ExcitationKind kind, int L,
                                                               std::complex<double> seed0,
                                                               std::complex<double> seed1) {
    require_ansatz_kind(kind);
    if (L < 3 || L > kMaxWindow)
        throw std::invalid_argument("window length must lie in [3, " + std::to_string(kMaxWindow) + "]");
    if (seed0 == 0.0 && seed1 == 0.0) throw std::invalid_argument("window seeds must not both be zero");
    if (kind == ExcitationKind::particle && L > kMaxParticleWindow)
        throw OverflowGuardError("particle amplitudes grow geometrically; window length " + std::to_string(L) +
                                 " exceeds the limit " + std::to_string(kMaxParticleWindow));

    const double c = recurrence_coefficient(kind);
    std::vector<std::complex<double>> a(static_cast<std::size_t>(L));
    a[0] = seed0;
    a[1] = seed1;
    for (std::size_t j = 1; j + 1 < a.size(); ++j) a[j + 1] = c * a[j] - a[j - 1];
    return a;
}

/// Finite-window form of sum_j (a+_j a_{j+1} + h.c.) = c sum_j a+_j a_j.
///
/// Multiplying the recurrence a_{j+1} + a_{j-1} = c a_j by conj(a_j) and
/// summing over the interior j = 1..L-2 gives exactly
///   T = c * sum_{j=1}^{L-2} |a_j|^2 + conj(a_0) a_1 + conj(a_{L-1}) a_{L-2},
/// so the residual is |T - c * occupancy - boundary|.
inline WindowCheckReport window_identity_check(ExcitationKind kind, int L, std::complex<double> seed0,
                                               std::complex<double> seed1) {
    const auto a = recurrence_amplitudes(kind, L, seed0, seed1);
    const double c = recurrence_coefficient(kind);

    WindowCheckReport r;
    r.kind = kind;
    r.length = L;
    r.seed0 = seed0;
    r.seed1 = seed1;
    for (std::size_t j = 0; j + 1 < a.size(); ++j)
        r.bilinear_sum += 2.0 * std::real(std::conj(a[j]) * a[j + 1]);
    for (std::size_t j = 1; j + 1 < a.size(); ++j) r.interior_occupancy += std::norm(a[j]);
    r.boundary = std::conj(a.front()) * a[1] + std::conj(a.back()) * a[a.size() - 2];
    for (const auto& x : a) r.scale = std::max(r.scale, std::norm(x));

    r.residual = std::abs(std::complex<double>(r.bilinear_sum - c * r.interior_occupancy) - r.boundary);
    if (!std::isfinite(r.residual) || !std::isfinite(r.scale))
        throw OverflowGuardError("window amplitudes left the finite range");
    return r;
}

}  // namespace jchm
