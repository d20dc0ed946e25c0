#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "wignerbell/counting.hpp"

namespace wignerbell {

enum class InequalityKind { Multiplicity, Wigner, Entropy };

/// "eq1" / "eq2" / "eq3".
std::string_view to_string(InequalityKind kind) noexcept;
/// Throws DomainError on any other name.
InequalityKind parse_inequality_kind(std::string_view name);

inline constexpr int kMaxExhaustiveSum = 20;

/// Calls fn(const Population&) for every 8-tuple with count[i] >= minimum[i]
/// and total <= max_sum, in lexicographic order.
template <class Fn>
void for_each_population(int max_sum, const std::array<Count, kPairTypeCount>& minimum, Fn&& fn) {
    std::array<Count, kPairTypeCount> counts{};
    Count floor = 0;
    for (Count m : minimum) floor += m;
    if (floor > max_sum) return;

    auto recurse = [&](auto& self, int index, Count remaining) -> void {
        if (index == kPairTypeCount) {
            fn(Population(counts));
            return;
        }
        Count reserved = 0;
        for (int j = index + 1; j < kPairTypeCount; ++j) reserved += minimum[j];
        for (Count n = minimum[index]; n <= remaining - reserved; ++n) {
            counts[index] = n;
            self(self, index + 1, remaining - n);
        }
    };
    recurse(recurse, 0, max_sum);
}

struct ExhaustiveCheckResult {
    InequalityKind kind;
    int max_sum;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    // Entropy only: largest |slack - ln(N2*N7)| seen.
    double max_slack_deviation = 0.0;
};

/// Enumerates every population admissible for `kind` with total <= max_sum
/// (non-empty for eq2, N2,N3,N4,N7 >= 1 for eq3) and counts violations.
/// Throws DomainError unless 1 <= max_sum <= 20.
ExhaustiveCheckResult check_exhaustive(InequalityKind kind, int max_sum);

}  // namespace wignerbell
