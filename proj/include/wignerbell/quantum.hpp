#pragma once

#include <array>
#include <vector>

#include "wignerbell/axis.hpp"
#include "wignerbell/inequality.hpp"
#include "wignerbell/pair_types.hpp"
#include "wignerbell/random.hpp"

namespace wignerbell {

struct JointOutcome {
    Sign alice;
    Sign bob;

    friend bool operator==(const JointOutcome&, const JointOutcome&) = default;
};

/// Joint outcome law of a spin singlet measured along two axes:
/// p(sA, sB) = (1 - sA*sB*cos(theta)) / 4.
struct QuantumProbabilities {
    double pPP = 0.0;
    double pPM = 0.0;
    double pMP = 0.0;
    double pMM = 0.0;

    static QuantumProbabilities singlet(const Axis& alice, const Axis& bob) noexcept;

    double operator()(Sign alice, Sign bob) const noexcept;
};

double quantum_joint_probability(const Axis& x, const Axis& y, Sign alice, Sign bob) noexcept;

/// E(x, y) = sum of sA*sB*p(sA, sB) = -cos(theta).
double correlation(const Axis& x, const Axis& y) noexcept;

/// Inverse-CDF sampler over the outcomes in fixed order PP, PM, MP, MM,
/// consuming exactly one uniform draw per sample.
class JointSampler {
public:
    explicit JointSampler(const QuantumProbabilities& probabilities) noexcept;
    JointSampler(const Axis& alice, const Axis& bob) noexcept
        : JointSampler(QuantumProbabilities::singlet(alice, bob)) {}

    JointOutcome operator()(CounterStream& stream) const noexcept;

private:
    std::array<double, 3> thresholds_;
};

JointOutcome sample_joint(const Axis& x, const Axis& y, CounterStream& stream) noexcept;

/// P(a+; b+) <= P(a+; c+) + P(c+; b+) with singlet probabilities.
InequalityReport wigner_quantum(const AxisTriple& axes) noexcept;

struct ScanPoint {
    double theta;
    InequalityReport report;
};

/// wigner_quantum over AxisTriple::coplanar(theta) for `steps` evenly
/// spaced theta in [0, pi], endpoints included. Throws DomainError if
/// steps < 2.
std::vector<ScanPoint> coplanar_scan(int steps);

}  // namespace wignerbell
