#pragma once

#include <cstdint>

#include "wignerbell/counting.hpp"

namespace wignerbell {

inline constexpr int kMaxSources = 20;

/// Number of ways m distinguishable sources can be assigned to pair types
/// so that bin alpha receives macro[alpha] of them: m! / (n_1! ... n_8!).
/// Throws DomainError if sum(macro) != m or m is outside [0, 20].
std::uint64_t microstate_count(int m, const Population& macro);

}  // namespace wignerbell
