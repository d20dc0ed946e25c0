#include "wignerbell/entropy.hpp"

#include <cmath>
#include <utility>

#include "wignerbell/errors.hpp"

namespace wignerbell {

MacrostateEntropy boltzmann_entropy(const Population& pop, int alpha) {
    const Count n = pop[alpha];
    if (n == 0) throw UndefinedEntropyError(alpha);
    return {alpha, std::log(static_cast<double>(n))};
}

double gibbs_entropy(std::span<const double> probabilities) {
    if (probabilities.empty()) throw DomainError("empty probability vector");
    double sum = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw DomainError("probabilities must be finite and non-negative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw DomainError("probabilities do not sum to 1");

    double s = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

InequalityReport entropy_inequality(const Population& pop) {
    const double s2 = boltzmann_entropy(pop, 2).value;
    const double s3 = boltzmann_entropy(pop, 3).value;
    const double s4 = boltzmann_entropy(pop, 4).value;
    const double s7 = boltzmann_entropy(pop, 7).value;
    return InequalityReport::make(s3 + s4, (s2 + s4) + (s3 + s7));
}

AggregateState::AggregateState(const Population& pop, std::vector<int> members)
    : members_(std::move(members)) {
    for (int alpha : members_) total_entropy_ += boltzmann_entropy(pop, alpha).value;
}

bool accessible(const AggregateState& x, const AggregateState& y) noexcept {
    return x.total_entropy() <= y.total_entropy() + kInequalityTolerance;
}

EntropyProbabilityComparison compare_entropy_and_probability(const Population& pop) {
    const ExactInequalityReport probability = wigner_inequality(pop);
    const InequalityReport entropy = entropy_inequality(pop);
    const auto z = static_cast<double>(partition_function(pop));
    const InequalityReport scaled = InequalityReport::make(entropy.lhs / z, entropy.rhs / z);
    const InequalityReport real = probability.to_real();
    return {
        .probability = probability,
        .entropy = entropy,
        .entropy_over_partition = scaled,
        .same_lhs = std::abs(real.lhs - scaled.lhs) <= kInequalityTolerance,
        .same_rhs = std::abs(real.rhs - scaled.rhs) <= kInequalityTolerance,
    };
}

}  // namespace wignerbell
