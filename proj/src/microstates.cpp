#include "wignerbell/microstates.hpp"

#include "wignerbell/errors.hpp"

namespace wignerbell {

std::uint64_t microstate_count(int m, const Population& macro) {
    if (m < 0 || m > kMaxSources) {
        throw DomainError("source count " + std::to_string(m) + " outside 0..20");
    }
    if (macro.total() != m) {
        throw DomainError("macrostate counts sum to " + std::to_string(macro.total()) +
                          ", expected " + std::to_string(m));
    }
    // Each partial product is a multinomial over `placed` items, bounded by
    // 8^placed, so result * placed < 8^19 * 20 < 2^64.
    std::uint64_t result = 1;
    std::uint64_t placed = 0;
    for (Count n : macro.counts()) {
        for (Count k = 1; k <= n; ++k) {
            ++placed;
            result = result * placed / static_cast<std::uint64_t>(k);
        }
    }
    return result;
}

}  // namespace wignerbell
