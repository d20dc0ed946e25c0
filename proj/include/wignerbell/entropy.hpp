#pragma once

#include <span>
#include <vector>

#include "wignerbell/counting.hpp"
#include "wignerbell/inequality.hpp"

namespace wignerbell {

/// S_alpha / k_B = ln N_alpha for N_alpha equiprobable microstates.
struct MacrostateEntropy {
    int alpha = 1;
    double value = 0.0;

    /// Report in physical units. Comparisons always use `value`.
    double scaled(double boltzmann_constant) const noexcept { return value * boltzmann_constant; }
};

/// Throws UndefinedEntropyError when N_alpha == 0.
MacrostateEntropy boltzmann_entropy(const Population& pop, int alpha);

/// -sum p_i ln p_i with 0 ln 0 = 0. Throws DomainError on negative entries
/// or when the sum differs from 1 by more than 1e-12.
double gibbs_entropy(std::span<const double> probabilities);

/// ln N3 + ln N4 <= (ln N2 + ln N4) + (ln N3 + ln N7).
/// Requires N2, N3, N4, N7 >= 1.
InequalityReport entropy_inequality(const Population& pop);

/// A collection of macrostates (with repetition) and its summed entropy.
class AggregateState {
public:
    /// Throws UndefinedEntropyError if any member bin is empty, DomainError
    /// on an out-of-range index.
    AggregateState(const Population& pop, std::vector<int> members);

    const std::vector<int>& members() const noexcept { return members_; }
    double total_entropy() const noexcept { return total_entropy_; }

private:
    std::vector<int> members_;
    double total_entropy_ = 0.0;
};

/// Adiabatic accessibility x -< y, i.e. S(x) <= S(y) + 1e-12.
bool accessible(const AggregateState& x, const AggregateState& y) noexcept;

/// The multiplicity and probability inequalities side by side, plus the
/// entropy inequality divided by the partition function. The two forms are
/// not algebraically related in general; this exposes the comparison.
struct EntropyProbabilityComparison {
    ExactInequalityReport probability;
    InequalityReport entropy;
    InequalityReport entropy_over_partition;
    bool same_lhs;
    bool same_rhs;
};

EntropyProbabilityComparison compare_entropy_and_probability(const Population& pop);

}  // namespace wignerbell
