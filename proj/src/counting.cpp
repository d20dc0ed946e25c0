#include "wignerbell/counting.hpp"

#include <algorithm>
#include <numeric>

#include "wignerbell/errors.hpp"

namespace wignerbell {

Population::Population(const std::array<Count, kPairTypeCount>& counts) : counts_(counts) {
    for (int i = 0; i < kPairTypeCount; ++i) {
        if (counts_[i] < 0) {
            throw DomainError("population count N_" + std::to_string(i + 1) + " is negative");
        }
    }
}

Population::Population(std::initializer_list<Count> counts) {
    if (counts.size() != kPairTypeCount) {
        throw DomainError("population needs exactly 8 counts, got " +
                          std::to_string(counts.size()));
    }
    std::array<Count, kPairTypeCount> tmp{};
    std::copy(counts.begin(), counts.end(), tmp.begin());
    *this = Population(tmp);
}

Count Population::operator[](int alpha) const {
    if (alpha < 1 || alpha > kPairTypeCount) {
        throw DomainError("pair type index " + std::to_string(alpha) + " outside 1..8");
    }
    return counts_[alpha - 1];
}

Count Population::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

namespace {

// Sum of weights over the pair types whose joint outcome on (alice, bob)
// equals (alice_sign, bob_sign).
template <class T>
T select_joint(const std::array<T, kPairTypeCount>& weights, AxisLabel alice, Sign alice_sign,
               AxisLabel bob, Sign bob_sign) {
    T sum{0};
    for (const PairType& type : pair_type_table()) {
        if (type.outcome(Particle::First, alice) == alice_sign &&
            type.outcome(Particle::Second, bob) == bob_sign) {
            sum += weights[type.index - 1];
        }
    }
    return sum;
}

template <class T>
ExactInequalityReport wigner_from(const std::array<T, kPairTypeCount>& weights, Rational scale) {
    using enum AxisLabel;
    const Rational ab = Rational(select_joint(weights, A, Sign::Plus, B, Sign::Plus)) * scale;
    const Rational ac = Rational(select_joint(weights, A, Sign::Plus, C, Sign::Plus)) * scale;
    const Rational cb = Rational(select_joint(weights, C, Sign::Plus, B, Sign::Plus)) * scale;
    return ExactInequalityReport::make(ab, ac + cb);
}

}  // namespace

ExactInequalityReport multiplicity_inequality(const Population& pop) {
    const Count lhs = pop[3] + pop[4];
    const Count rhs = (pop[2] + pop[4]) + (pop[3] + pop[7]);
    return ExactInequalityReport::make(Rational(lhs), Rational(rhs));
}

Rational joint_probability(const Population& pop, AxisLabel alice, Sign alice_sign, AxisLabel bob,
                           Sign bob_sign) {
    const Count total = pop.total();
    if (total == 0) throw EmptyPopulationError();
    return Rational(select_joint(pop.counts(), alice, alice_sign, bob, bob_sign), total);
}

Rational joint_probability(const Distribution& dist, AxisLabel alice, Sign alice_sign,
                           AxisLabel bob, Sign bob_sign) {
    return select_joint(dist, alice, alice_sign, bob, bob_sign);
}

ExactInequalityReport wigner_inequality(const Population& pop) {
    const Count total = pop.total();
    if (total == 0) throw EmptyPopulationError();
    return wigner_from(pop.counts(), Rational(1, total));
}

ExactInequalityReport wigner_inequality(const Distribution& dist) {
    Rational sum{0};
    for (const Rational& p : dist) {
        if (p < Rational(0)) throw DomainError("distribution has a negative entry");
        sum += p;
    }
    if (sum != Rational(1)) throw DomainError("distribution does not sum to 1");
    return wigner_from(dist, Rational(1));
}

Distribution normalize(const Population& pop) {
    const Count total = pop.total();
    if (total == 0) throw EmptyPopulationError();
    Distribution dist;
    for (int i = 0; i < kPairTypeCount; ++i) dist[i] = Rational(pop.counts()[i], total);
    return dist;
}

Count partition_function(const Population& pop) noexcept {
    // exp(ln N) == N for N >= 1; empty bins are the exp(-inf) == 0 limit.
    Count z = 0;
    for (Count n : pop.counts()) {
        if (n > 0) z += n;
    }
    return z;
}

}  // namespace wignerbell
