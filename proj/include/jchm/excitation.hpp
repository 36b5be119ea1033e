// excitation.hpp — Particle/hole/bare tags and the recurrence coefficients

#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jchm {

enum class ExcitationKind { bare, particle, hole };

enum class Branch { upper, lower };

// Coefficient c in the amplitude recurrence a_{j+1} = c a_j - a_{j-1}.
// The hole value is negative: this is the sign under which the hole sum
// recurrence, its closed nearest/next-nearest values and the shifted boson
// energy w_c + (sqrt3 - 1) J all agree.
inline constexpr double kParticleCoefficient = std::numbers::sqrt3 + 1.0;
inline constexpr double kHoleCoefficient = -(std::numbers::sqrt3 - 1.0);

/// Recurrence coefficient for particle or hole; bare has no ansatz (0).
constexpr double recurrence_coefficient(ExcitationKind kind) noexcept {
    switch (kind) {
        case ExcitationKind::particle: return kParticleCoefficient;
        case ExcitationKind::hole: return kHoleCoefficient;
        case ExcitationKind::bare: break;
    }
    return 0.0;
}

inline std::string_view to_string(ExcitationKind kind) noexcept {
    switch (kind) {
        case ExcitationKind::particle: return "particle";
        case ExcitationKind::hole: return "hole";
        case ExcitationKind::bare: break;
    }
    return "bare";
}

inline ExcitationKind parse_excitation_kind(std::string_view s) {
    if (s == "bare") return ExcitationKind::bare;
    if (s == "particle") return ExcitationKind::particle;
    if (s == "hole") return ExcitationKind::hole;
    throw std::invalid_argument("unknown excitation kind '" + std::string(s) + "'");
}

inline std::string_view to_string(Branch b) noexcept {
    return b == Branch::upper ? "upper" : "lower";
}

}  // namespace jchm
