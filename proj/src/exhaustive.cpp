#include "wignerbell/exhaustive.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wignerbell/entropy.hpp"
#include "wignerbell/errors.hpp"

namespace wignerbell {

std::string_view to_string(InequalityKind kind) noexcept {
    switch (kind) {
        case InequalityKind::Multiplicity: return "eq1";
        case InequalityKind::Wigner: return "eq2";
        case InequalityKind::Entropy: break;
    }
    return "eq3";
}

InequalityKind parse_inequality_kind(std::string_view name) {
    if (name == "eq1") return InequalityKind::Multiplicity;
    if (name == "eq2") return InequalityKind::Wigner;
    if (name == "eq3") return InequalityKind::Entropy;
    throw DomainError("unknown inequality '" + std::string(name) + "' (expected eq1, eq2, eq3)");
}

ExhaustiveCheckResult check_exhaustive(InequalityKind kind, int max_sum) {
    if (max_sum < 1 || max_sum > kMaxExhaustiveSum) {
        throw DomainError("max-sum " + std::to_string(max_sum) + " outside 1..20");
    }
    ExhaustiveCheckResult result{kind, max_sum};

    switch (kind) {
        case InequalityKind::Multiplicity:
            for_each_population(max_sum, {}, [&](const Population& pop) {
                ++result.checked;
                if (!multiplicity_inequality(pop).satisfied) ++result.violations;
            });
            break;
        case InequalityKind::Wigner:
            for_each_population(max_sum, {}, [&](const Population& pop) {
                if (pop.empty()) return;
                ++result.checked;
                if (!wigner_inequality(pop).satisfied) ++result.violations;
            });
            break;
        case InequalityKind::Entropy:
            for_each_population(max_sum, {0, 1, 1, 1, 0, 0, 1, 0}, [&](const Population& pop) {
                ++result.checked;
                const InequalityReport report = entropy_inequality(pop);
                if (!report.satisfied) ++result.violations;
                const double expected = std::log(static_cast<double>(pop[2] * pop[7]));
                result.max_slack_deviation =
                    std::max(result.max_slack_deviation, std::abs(report.slack - expected));
            });
            break;
    }
    return result;
}

}  // namespace wignerbell
