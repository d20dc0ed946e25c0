#include "wignerbell/quantum.hpp"

#include <numbers>

#include "wignerbell/errors.hpp"

namespace wignerbell {

QuantumProbabilities QuantumProbabilities::singlet(const Axis& alice, const Axis& bob) noexcept {
    // cos(theta) taken straight from the clamped dot product; identical to
    // cos(angle_between) but exact at theta in {0, pi}.
    const double cos_theta = alice == bob ? 1.0 : clamped_dot(alice, bob);
    const double same = 0.25 * (1.0 - cos_theta);
    const double opposite = 0.25 * (1.0 + cos_theta);
    return {same, opposite, opposite, same};
}

double QuantumProbabilities::operator()(Sign alice, Sign bob) const noexcept {
    if (alice == Sign::Plus) return bob == Sign::Plus ? pPP : pPM;
    return bob == Sign::Plus ? pMP : pMM;
}

double quantum_joint_probability(const Axis& x, const Axis& y, Sign alice, Sign bob) noexcept {
    return QuantumProbabilities::singlet(x, y)(alice, bob);
}

double correlation(const Axis& x, const Axis& y) noexcept {
    const auto p = QuantumProbabilities::singlet(x, y);
    return (p.pPP + p.pMM) - (p.pPM + p.pMP);
}

JointSampler::JointSampler(const QuantumProbabilities& p) noexcept
    : thresholds_{p.pPP, p.pPP + p.pPM, p.pPP + p.pPM + p.pMP} {}

JointOutcome JointSampler::operator()(CounterStream& stream) const noexcept {
    const double u = stream.uniform();
    if (u < thresholds_[0]) return {Sign::Plus, Sign::Plus};
    if (u < thresholds_[1]) return {Sign::Plus, Sign::Minus};
    if (u < thresholds_[2]) return {Sign::Minus, Sign::Plus};
    return {Sign::Minus, Sign::Minus};
}

JointOutcome sample_joint(const Axis& x, const Axis& y, CounterStream& stream) noexcept {
    return JointSampler(x, y)(stream);
}

InequalityReport wigner_quantum(const AxisTriple& axes) noexcept {
    const double lhs = quantum_joint_probability(axes.a, axes.b, Sign::Plus, Sign::Plus);
    const double rhs = quantum_joint_probability(axes.a, axes.c, Sign::Plus, Sign::Plus) +
                       quantum_joint_probability(axes.c, axes.b, Sign::Plus, Sign::Plus);
    return InequalityReport::make(lhs, rhs);
}

std::vector<ScanPoint> coplanar_scan(int steps) {
    if (steps < 2) throw DomainError("scan needs at least 2 steps");
    std::vector<ScanPoint> points;
    points.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i) / (steps - 1);
        points.push_back({theta, wigner_quantum(AxisTriple::coplanar(theta))});
    }
    return points;
}

}  // namespace wignerbell
