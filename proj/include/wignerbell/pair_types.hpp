#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "wignerbell/axis.hpp"

namespace wignerbell {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

enum class AxisLabel : std::uint8_t { A = 0, B = 1, C = 2 };

constexpr std::array<AxisLabel, 3> kAxisLabels{AxisLabel::A, AxisLabel::B, AxisLabel::C};

constexpr char to_char(AxisLabel label) noexcept {
    return "ABC"[static_cast<int>(label)];
}

const Axis& axis_for(const AxisTriple& axes, AxisLabel label) noexcept;

// Alice always holds particle 1, Bob particle 2.
enum class Particle : std::uint8_t { First = 1, Second = 2 };

inline constexpr int kPairTypeCount = 8;

/// One of the eight deterministic hidden-variable pair types. Outcomes are
/// ordered (a, b, c); particle 2 is the componentwise negation of particle 1.
struct PairType {
    int index;
    std::array<Sign, 3> particle1;
    std::array<Sign, 3> particle2;

    Sign outcome(Particle particle, AxisLabel label) const noexcept {
        const auto& signs = particle == Particle::First ? particle1 : particle2;
        return signs[static_cast<int>(label)];
    }
};

namespace detail {
constexpr PairType make_pair_type(int index, Sign a, Sign b, Sign c) {
    return PairType{index, {a, b, c}, {-a, -b, -c}};
}
inline constexpr Sign P = Sign::Plus;
inline constexpr Sign M = Sign::Minus;
}  // namespace detail

inline constexpr std::array<PairType, kPairTypeCount> kPairTypes{
    detail::make_pair_type(1, detail::P, detail::P, detail::P),
    detail::make_pair_type(2, detail::P, detail::P, detail::M),
    detail::make_pair_type(3, detail::P, detail::M, detail::P),
    detail::make_pair_type(4, detail::P, detail::M, detail::M),
    detail::make_pair_type(5, detail::M, detail::P, detail::P),
    detail::make_pair_type(6, detail::M, detail::P, detail::M),
    detail::make_pair_type(7, detail::M, detail::M, detail::P),
    detail::make_pair_type(8, detail::M, detail::M, detail::M),
};

/// The eight pair types in index order 1..8.
const std::array<PairType, kPairTypeCount>& pair_type_table() noexcept;

/// Throws DomainError unless 1 <= alpha <= 8.
const PairType& pair_type(int alpha);

Sign lhv_outcome(int alpha, Particle particle, AxisLabel label);

/// (Alice's sign on particle 1, Bob's sign on particle 2).
std::pair<Sign, Sign> joint_lhv_outcome(int alpha, AxisLabel alice, AxisLabel bob);

/// "+,+,+" style rendering of a sign triple.
std::string format_signs(const std::array<Sign, 3>& signs);

}  // namespace wignerbell
