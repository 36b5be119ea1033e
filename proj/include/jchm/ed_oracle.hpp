// ed_oracle.hpp — Exact diagonalization of the finite JCH chain in fixed
// total-excitation sectors.
//
// H = w_c sum n_j + w_z sum (s_z+1)/2 + g sum (a+_j s-_j + s+_j a_j)
//     - J sum_j (a+_j a_{j+1} + a+_{j+1} a_j)
// conserves N = sum_j (n_j + s_j), so each sector is assembled and solved on
// its own. Bosons are hard-truncated at n_max per site.
//
// Periodic chains keep both directed hopping terms for every bond j -> j+1
// (mod L). For L = 2 the bonds 0->1 and 1->0 are the same pair of sites, so
// that pair carries twice the hopping amplitude. L = 1 has no bonds.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jchm/errors.hpp"
#include "jchm/jc_spectrum.hpp"

namespace jchm::ed {

enum class Boundary { periodic, open };

inline std::string_view to_string(Boundary b) noexcept { return b == Boundary::periodic ? "periodic" : "open"; }

inline Boundary parse_boundary(std::string_view s) {
    if (s == "periodic") return Boundary::periodic;
    if (s == "open") return Boundary::open;
    throw std::invalid_argument("unknown boundary '" + std::string(s) + "'");
}

struct ChainSpec {
    int L{4};
    int n_max{3};
    Boundary boundary{Boundary::periodic};
    double J{0.0};
    SystemParams params{SystemParams::unit(0.0)};

    void validate() const {
        if (L < 1) throw std::invalid_argument("chain length L must be >= 1");
        if (n_max < 1) throw std::invalid_argument("boson cutoff n_max must be >= 1");
        if (n_max > 255) throw std::invalid_argument("boson cutoff n_max must be <= 255");
        if (!(J >= 0.0) || !std::isfinite(J)) throw std::invalid_argument("hopping J must be finite and >= 0");
    }
};

/// Site occupations and qubit flags (1 = up). Ordering is lexicographic on
/// (occupations, up), which is the canonical basis order.
struct BasisState {
    std::vector<std::uint8_t> occupations;
    std::vector<std::uint8_t> up;

    int excitation() const noexcept {
        int total = 0;
        for (auto n : occupations) total += n;
        for (auto s : up) total += s;
        return total;
    }

    int up_count() const noexcept {
        int total = 0;
        for (auto s : up) total += s;
        return total;
    }

    auto operator<=>(const BasisState&) const = default;
    bool operator==(const BasisState&) const = default;
};

class SectorBasis {
public:
    SectorBasis() = default;

    /// Accepts any ordering; rejects duplicates and states outside the sector.
    SectorBasis(int total_excitation, std::vector<BasisState> states)
        : total_(total_excitation), states_(std::move(states)) {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            if (states_[i].excitation() != total_)
                throw std::invalid_argument("basis state outside the requested excitation sector");
            if (!index_.emplace(states_[i], i).second) throw std::invalid_argument("duplicate basis state");
        }
    }

    int total_excitation() const noexcept { return total_; }
    std::size_t size() const noexcept { return states_.size(); }
    bool empty() const noexcept { return states_.empty(); }
    const std::vector<BasisState>& states() const noexcept { return states_; }
    const BasisState& operator[](std::size_t i) const { return states_[i]; }

    std::optional<std::size_t> find(const BasisState& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool is_canonical() const { return std::is_sorted(states_.begin(), states_.end()); }

private:
    int total_{0};
    std::vector<BasisState> states_;
    std::map<BasisState, std::size_t> index_;
};

/// Sector dimension by dynamic programming over sites. Returned as double so
/// oversized requests can be measured without overflow.
inline double sector_dimension(int L, int N, int n_max) {
    if (L < 1 || n_max < 0 || N < 0) return 0.0;
    std::vector<double> ways(static_cast<std::size_t>(N) + 1, 0.0);
    ways[0] = 1.0;
    for (int site = 0; site < L; ++site) {
        std::vector<double> next(ways.size(), 0.0);
        for (int have = 0; have <= N; ++have) {
            if (ways[have] == 0.0) continue;
            for (int n = 0; n <= n_max; ++n)
                for (int s = 0; s <= 1; ++s)
                    if (have + n + s <= N) next[have + n + s] += ways[have];
        }
        ways = std::move(next);
    }
    return ways[N];
}

/// All states of L sites with total excitation N, canonically ordered.
inline SectorBasis enumerate_sector(int L, int N, int n_max) {
    if (L < 1) throw std::invalid_argument("enumerate_sector: L must be >= 1");
    if (n_max < 1 || n_max > 255) throw std::invalid_argument("enumerate_sector: n_max must lie in [1, 255]");
    if (N < 0) throw std::invalid_argument("enumerate_sector: N must be >= 0");
    if (N > L * (n_max + 1)) return SectorBasis(N, {});

    std::vector<BasisState> states;
    BasisState cur{std::vector<std::uint8_t>(L, 0), std::vector<std::uint8_t>(L, 0)};

    // Occupations are the leading key, so generate them in lexicographic
    // order and expand each into its flag patterns (also lexicographic).
    auto emit_flags = [&](auto&& self, int site, int ups_left) -> void {
        if (site == L) {
            if (ups_left == 0) states.push_back(cur);
            return;
        }
        if (L - site > ups_left) {
            cur.up[site] = 0;
            self(self, site + 1, ups_left);
        }
        if (ups_left > 0) {
            cur.up[site] = 1;
            self(self, site + 1, ups_left - 1);
            cur.up[site] = 0;
        }
    };
    auto emit_occ = [&](auto&& self, int site, int bosons_left) -> void {
        if (site == L) {
            const int ups = N - [&] {
                int s = 0;
                for (auto n : cur.occupations) s += n;
                return s;
            }();
            if (ups >= 0 && ups <= L) emit_flags(emit_flags, 0, ups);
            return;
        }
        const int top = std::min(n_max, bosons_left);
        for (int n = 0; n <= top; ++n) {
            cur.occupations[site] = static_cast<std::uint8_t>(n);
            self(self, site + 1, bosons_left - n);
        }
        cur.occupations[site] = 0;
    };
    emit_occ(emit_occ, 0, N);
    return SectorBasis(N, std::move(states));
}

/// Real symmetric matrix in triplet form; both triangles are stored and
/// duplicate (row, col) entries add.
struct SparseHamiltonian {
    std::size_t dimension{0};
    std::vector<Eigen::Triplet<double>> entries;
    bool symmetric_storage{false};  // false: full matrix, not one triangle

    Eigen::SparseMatrix<double, Eigen::RowMajor> to_sparse() const {
        Eigen::SparseMatrix<double, Eigen::RowMajor> m(static_cast<Eigen::Index>(dimension),
                                                       static_cast<Eigen::Index>(dimension));
        m.setFromTriplets(entries.begin(), entries.end());
        return m;
    }

    Eigen::MatrixXd to_dense() const { return Eigen::MatrixXd(to_sparse()); }

    /// max |H - H^T|; exactly 0 for matrices from build_hamiltonian.
    double max_asymmetry() const {
        const auto m = to_sparse();
        const Eigen::SparseMatrix<double, Eigen::RowMajor> t = m.transpose();
        const Eigen::SparseMatrix<double, Eigen::RowMajor> d = m - t;
        double worst = 0.0;
        for (int k = 0; k < d.outerSize(); ++k)
            for (decltype(d)::InnerIterator it(d, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
        return worst;
    }
};

inline std::vector<std::pair<int, int>> hopping_bonds(const ChainSpec& spec) {
    std::vector<std::pair<int, int>> bonds;
    for (int j = 0; j + 1 < spec.L; ++j) bonds.emplace_back(j, j + 1);
    if (spec.boundary == Boundary::periodic && spec.L > 1) bonds.emplace_back(spec.L - 1, 0);
    return bonds;
}

inline SparseHamiltonian build_hamiltonian(const ChainSpec& spec, const SectorBasis& basis) {
    spec.validate();
    const auto& p = spec.params;
    const auto bonds = hopping_bonds(spec);

    SparseHamiltonian h;
    h.dimension = basis.size();
    h.entries.reserve(basis.size() * (1 + 2 * static_cast<std::size_t>(spec.L) + 2 * bonds.size()));

    auto connect = [&](const BasisState& target, std::size_t col, double value) {
        const auto row = basis.find(target);
        if (!row) throw std::logic_error("Hamiltonian term left the excitation sector");
        h.entries.emplace_back(static_cast<int>(*row), static_cast<int>(col), value);
    };

    for (std::size_t col = 0; col < basis.size(); ++col) {
        const BasisState& s = basis[col];
        if (static_cast<int>(s.occupations.size()) != spec.L)
            throw std::invalid_argument("basis does not match chain length");

        int bosons = 0;
        for (auto n : s.occupations) bosons += n;
        h.entries.emplace_back(static_cast<int>(col), static_cast<int>(col),
                               p.omega_c() * bosons + p.omega_z() * s.up_count());

        // g (a+ s- + s+ a) on each site
        for (int j = 0; j < spec.L; ++j) {
            const int n = s.occupations[j];
            BasisState t = s;
            if (s.up[j] && n + 1 <= spec.n_max) {
                t.up[j] = 0;
                t.occupations[j] = static_cast<std::uint8_t>(n + 1);
                connect(t, col, p.g() * std::sqrt(static_cast<double>(n + 1)));
            } else if (!s.up[j] && n >= 1) {
                t.up[j] = 1;
                t.occupations[j] = static_cast<std::uint8_t>(n - 1);
                connect(t, col, p.g() * std::sqrt(static_cast<double>(n)));
            }
        }

        if (spec.J == 0.0) continue;
        // -J (a+_i a_k + a+_k a_i) on each bond
        for (auto [i, k] : bonds) {
            for (auto [dst, src] : {std::pair{i, k}, std::pair{k, i}}) {
                const int n_dst = s.occupations[dst];
                const int n_src = s.occupations[src];
                if (n_src < 1 || n_dst + 1 > spec.n_max) continue;
                BasisState t = s;
                t.occupations[dst] = static_cast<std::uint8_t>(n_dst + 1);
                t.occupations[src] = static_cast<std::uint8_t>(n_src - 1);
                connect(t, col, -spec.J * std::sqrt(static_cast<double>((n_dst + 1) * n_src)));
            }
        }
    }
    return h;
}

struct SolverOptions {
    double tolerance{1e-10};
    std::size_t dense_threshold{2000};
    std::size_t max_iterations{500};
};

inline double dense_ground_energy(const SparseHamiltonian& h) {
    if (h.dimension == 0) throw std::invalid_argument("ground_energy: empty Hamiltonian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.to_dense(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw SolverError("dense eigensolver failed", 0);
    return solver.eigenvalues()(0);
}

/// Lanczos with full re-orthogonalization (two Gram-Schmidt passes per step
/// against every stored Krylov vector). Converged when the Ritz residual
/// beta_k |s_k| drops below tolerance * max(1, |theta|), or when the Krylov
/// space becomes invariant. An empty `start` means the all-ones vector.
inline double lanczos_ground_energy(const SparseHamiltonian& h, const SolverOptions& opts = {},
                                    std::span<const double> start = {}) {
    if (h.dimension == 0) throw std::invalid_argument("ground_energy: empty Hamiltonian");
    const auto n = static_cast<Eigen::Index>(h.dimension);
    const auto m = h.to_sparse();

    Eigen::VectorXd v(n);
    if (start.empty()) {
        v.setOnes();
    } else {
        if (start.size() != h.dimension) throw std::invalid_argument("lanczos: start vector has wrong size");
        v = Eigen::Map<const Eigen::VectorXd>(start.data(), n);
    }
    if (v.norm() == 0.0) throw std::invalid_argument("lanczos: start vector must be nonzero");
    v.normalize();

    const std::size_t max_iter = std::min<std::size_t>(opts.max_iterations, h.dimension);
    std::vector<Eigen::VectorXd> basis;
    basis.reserve(max_iter);
    std::vector<double> alpha;
    std::vector<double> beta;
    double theta = 0.0;

    for (std::size_t k = 0; k < max_iter; ++k) {
        basis.push_back(v);
        Eigen::VectorXd w = m * v;
        alpha.push_back(v.dot(w));
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) w -= q.dot(w) * q;
        const double b = w.norm();

        const auto size = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), size);
        Eigen::VectorXd sub = size > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), size - 1))
                                       : Eigen::VectorXd();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        theta = tri.eigenvalues()(0);
        const double ritz_residual = b * std::abs(tri.eigenvectors()(size - 1, 0));

        if (ritz_residual <= opts.tolerance * std::max(1.0, std::abs(theta))) return theta;
        if (b <= 1e-14 * std::max(1.0, std::abs(theta))) return theta;  // invariant subspace
        beta.push_back(b);
        v = w / b;
    }
    if (max_iter == h.dimension) return theta;  // full Krylov space spanned
    throw SolverError("Lanczos did not converge after " + std::to_string(max_iter) + " iterations", max_iter);
}

/// Lowest eigenvalue: dense below opts.dense_threshold, Lanczos above.
inline double ground_energy(const SparseHamiltonian& h, const SolverOptions& opts = {},
                            std::span<const double> start = {}) {
    if (h.dimension <= opts.dense_threshold) return dense_ground_energy(h);
    return lanczos_ground_energy(h, opts, start);
}

/// (-1)^{#up} on every basis state, normalized. Conjugating H by this sign
/// makes every off-diagonal element non-positive (for J >= 0, g > 0), so the
/// ground state has strictly positive overlap with it. The plain all-ones
/// vector can be exactly orthogonal to the ground state (L = 1 at resonance).
inline std::vector<double> gauge_start_vector(const SectorBasis& basis) {
    std::vector<double> v(basis.size());
    const double norm = basis.empty() ? 1.0 : 1.0 / std::sqrt(static_cast<double>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = (basis[i].up_count() % 2 == 0 ? 1.0 : -1.0) * norm;
    return v;
}

inline constexpr double kDefaultMemoryLimit = 2.0 * 1024.0 * 1024.0 * 1024.0;  // 2 GiB
inline constexpr const char* kMemoryLimitEnv = "JCHM_ED_MEMORY_LIMIT";

/// Memory ceiling in bytes from JCHM_ED_MEMORY_LIMIT, else 2 GiB.
inline double memory_limit_from_env() {
    if (const char* raw = std::getenv(kMemoryLimitEnv)) {
        char* end = nullptr;
        const double v = std::strtod(raw, &end);
        if (end != raw && v > 0.0 && std::isfinite(v)) return v;
        throw std::invalid_argument(std::string(kMemoryLimitEnv) + " must be a positive byte count");
    }
    return kDefaultMemoryLimit;
}

/// Rough peak memory for assembling and solving one sector.
inline double estimate_sector_bytes(const ChainSpec& spec, int N, const SolverOptions& opts) {
    const double dim = sector_dimension(spec.L, N, spec.n_max);
    const double per_state = 96.0 + 2.0 * spec.L;  // state vectors plus map node
    const double nnz = dim * (1.0 + spec.L + 2.0 * static_cast<double>(hopping_bonds(spec).size()));
    double bytes = dim * per_state + nnz * (16.0 + 12.0);
    if (dim <= static_cast<double>(opts.dense_threshold))
        bytes += 3.0 * dim * dim * 8.0;
    else
        bytes += std::min(dim, static_cast<double>(opts.max_iterations)) * dim * 8.0;
    return bytes;
}

struct EdOptions {
    SolverOptions solver{};
    double memory_limit_bytes{kDefaultMemoryLimit};
};

inline void check_resources(const ChainSpec& spec, int N, const EdOptions& opts) {
    const double bytes = estimate_sector_bytes(spec, N, opts.solver);
    if (bytes > opts.memory_limit_bytes) {
        const double dim = sector_dimension(spec.L, N, spec.n_max);
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "sector N=%d of L=%d, n_max=%d has dimension %.6g (about %.3g bytes), above the memory "
                      "ceiling of %.3g bytes",
                      N, spec.L, spec.n_max, dim, bytes, opts.memory_limit_bytes);
        throw ResourceError(buf, dim);
    }
}

struct SectorEnergy {
    int total_excitation;
    std::size_t dimension;
    double energy;
};

/// Ground energy of one sector (resource-checked).
inline SectorEnergy sector_ground_energy(const ChainSpec& spec, int N, const EdOptions& opts = {}) {
    spec.validate();
    check_resources(spec, N, opts);
    const SectorBasis basis = enumerate_sector(spec.L, N, spec.n_max);
    if (basis.empty()) throw std::invalid_argument("sector N=" + std::to_string(N) + " is empty");
    const SparseHamiltonian h = build_hamiltonian(spec, basis);
    const auto start = gauge_start_vector(basis);
    return {N, basis.size(), ground_energy(h, opts.solver, start)};
}

struct EdResult {
    ChainSpec spec;
    int filling{1};
    std::vector<SectorEnergy> sectors;  // N = L n - 1, L n, L n + 1
    double mu_particle{0.0};            // (mu_P - w_c)/g
    double mu_hole{0.0};                // (mu_H - w_c)/g
    std::vector<std::string> warnings;

    double gap() const noexcept { return mu_particle - mu_hole; }
};

/// mu_P = E_0(Ln+1) - E_0(Ln), mu_H = E_0(Ln) - E_0(Ln-1), reported as
/// (mu - w_c)/g.
inline EdResult chemical_potentials_ed(const ChainSpec& spec, int filling = 1, const EdOptions& opts = {}) {
    spec.validate();
    if (filling < 1) throw std::invalid_argument("filling must be >= 1");

    EdResult r;
    r.spec = spec;
    r.filling = filling;
    if (spec.n_max < filling + 2)
        r.warnings.push_back("boson cutoff n_max=" + std::to_string(spec.n_max) + " < filling+2=" +
                             std::to_string(filling + 2) + "; particle sector may be truncation-limited");

    const int base = spec.L * filling;
    for (int N : {base - 1, base, base + 1}) check_resources(spec, N, opts);
    for (int N : {base - 1, base, base + 1}) r.sectors.push_back(sector_ground_energy(spec, N, opts));

    const double wc = spec.params.omega_c();
    const double g = spec.params.g();
    r.mu_particle = (r.sectors[2].energy - r.sectors[1].energy - wc) / g;
    r.mu_hole = (r.sectors[1].energy - r.sectors[0].energy - wc) / g;
    return r;
}

}  // namespace jchm::ed
