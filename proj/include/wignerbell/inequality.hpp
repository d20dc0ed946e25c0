#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace wignerbell {

// Compare only against other Rationals: mixed rational/integer comparisons
// in Boost 1.74 recurse forever under C++20 rewritten operator candidates.
using Rational = boost::rational<std::int64_t>;

// Tolerance on real-valued inequality comparisons.
inline constexpr double kInequalityTolerance = 1e-12;

/// Result of checking lhs <= rhs in floating point.
struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool satisfied = true;

    static InequalityReport make(double lhs, double rhs) {
        const double slack = rhs - lhs;
        return {lhs, rhs, slack, slack >= -kInequalityTolerance};
    }

    bool violated() const noexcept { return !satisfied; }
};

/// Result of checking lhs <= rhs in exact rational arithmetic.
struct ExactInequalityReport {
    Rational lhs;
    Rational rhs;
    Rational slack;
    bool satisfied = true;

    static ExactInequalityReport make(Rational lhs, Rational rhs) {
        const Rational slack = rhs - lhs;
        return {lhs, rhs, slack, slack >= Rational(0)};
    }

    InequalityReport to_real() const {
        return InequalityReport::make(boost::rational_cast<double>(lhs),
                                      boost::rational_cast<double>(rhs));
    }
};

}  // namespace wignerbell
