#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "wignerbell/inequality.hpp"
#include "wignerbell/pair_types.hpp"

namespace wignerbell {

using Count = std::int64_t;

/// Macrostate counts N_1..N_8, one per pair type. Doubles as the particle
/// population of each bin (one pair per source).
class Population {
public:
    Population() = default;

    /// Throws DomainError if any count is negative.
    explicit Population(const std::array<Count, kPairTypeCount>& counts);
    Population(std::initializer_list<Count> counts);

    /// 1-based access by pair-type index.
    Count operator[](int alpha) const;
    Count count(int alpha) const { return (*this)[alpha]; }

    const std::array<Count, kPairTypeCount>& counts() const noexcept { return counts_; }

    Count total() const noexcept;
    bool empty() const noexcept { return total() == 0; }

    friend bool operator==(const Population&, const Population&) = default;

private:
    std::array<Count, kPairTypeCount> counts_{};
};

/// p_alpha = N_alpha / total, exact.
using Distribution = std::array<Rational, kPairTypeCount>;

/// N3 + N4 <= (N2 + N4) + (N3 + N7), exact integers.
ExactInequalityReport multiplicity_inequality(const Population& pop);

/// Fraction of pairs whose (Alice particle 1, Bob particle 2) outcomes on
/// the given labels equal (alice_sign, bob_sign).
/// Throws EmptyPopulationError when pop.total() == 0.
Rational joint_probability(const Population& pop, AxisLabel alice, Sign alice_sign,
                           AxisLabel bob, Sign bob_sign);

/// Same selection summed over an already normalized distribution.
Rational joint_probability(const Distribution& dist, AxisLabel alice, Sign alice_sign,
                           AxisLabel bob, Sign bob_sign);

/// P(a+; b+) <= P(a+; c+) + P(c+; b+), exact.
ExactInequalityReport wigner_inequality(const Population& pop);

/// Throws DomainError unless the distribution is non-negative and sums to 1.
ExactInequalityReport wigner_inequality(const Distribution& dist);

Distribution normalize(const Population& pop);

/// Z = sum over alpha of exp(ln N_alpha); empty bins contribute 0, so Z is
/// the exact total count.
Count partition_function(const Population& pop) noexcept;

}  // namespace wignerbell
