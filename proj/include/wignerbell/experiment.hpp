#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wignerbell/axis.hpp"
#include "wignerbell/counting.hpp"
#include "wignerbell/inequality.hpp"
#include "wignerbell/pair_types.hpp"
#include "wignerbell/quantum.hpp"
#include "wignerbell/random.hpp"

namespace wignerbell {

enum class SourceKind { Lhv, Quantum };

/// Where the pairs come from: a hidden-variable mixture over the eight pair
/// types, or a spin singlet.
class SourceSpec {
public:
    /// Throws ConfigError unless weights are finite, non-negative, and
    /// have positive sum.
    static SourceSpec lhv(const std::array<double, kPairTypeCount>& weights);
    static SourceSpec quantum() noexcept { return SourceSpec(); }

    SourceKind kind() const noexcept { return kind_; }
    /// Raw weights as given (all zero for a quantum source).
    const std::array<double, kPairTypeCount>& weights() const noexcept { return weights_; }
    /// Weights divided by their sum.
    std::array<double, kPairTypeCount> probabilities() const;

private:
    SourceSpec() = default;

    SourceKind kind_ = SourceKind::Quantum;
    std::array<double, kPairTypeCount> weights_{};
};

struct ExperimentConfig {
    SourceSpec source = SourceSpec::quantum();
    AxisTriple axes = AxisTriple::coplanar(0.0);
    std::int64_t pairs_per_setting = 1;
    std::int64_t repetitions = 1;
    std::uint64_t seed = 0;

    /// Throws ConfigError on n < 1 or R < 1.
    void validate() const;
};

/// Which joint probability P(alice_label alice_sign; bob_label bob_sign)
/// a setting estimates.
struct Setting {
    AxisLabel alice;
    Sign alice_sign;
    AxisLabel bob;
    Sign bob_sign;

    /// Stream coordinate: depends only on the two labels.
    std::uint64_t stream_index() const noexcept {
        return static_cast<std::uint64_t>(alice) * 3 + static_cast<std::uint64_t>(bob);
    }
};

/// The three terms of P(a+; b+) <= P(a+; c+) + P(c+; b+) in that order.
inline constexpr std::array<Setting, 3> kWignerSettings{
    Setting{AxisLabel::A, Sign::Plus, AxisLabel::B, Sign::Plus},
    Setting{AxisLabel::A, Sign::Plus, AxisLabel::C, Sign::Plus},
    Setting{AxisLabel::C, Sign::Plus, AxisLabel::B, Sign::Plus},
};

struct SettingEstimate {
    Setting setting;
    std::int64_t pairs = 0;
    // Outcome counts in order PP, PM, MP, MM.
    std::array<std::int64_t, 4> counts{};
    std::int64_t hits = 0;  // count of the setting's own outcome
    double p_hat = 0.0;
    double std_error = 0.0;  // sqrt(p_hat (1 - p_hat) / n)
};

struct EstimateReport {
    ExperimentConfig config;
    std::uint64_t repetition = 0;
    std::array<SettingEstimate, 3> settings;
    /// lhs = p_hat(a+;b+), rhs = p_hat(a+;c+) + p_hat(c+;b+).
    InequalityReport empirical;
    /// Raw comparison at threshold 0, decided on integer counts.
    bool violated = false;
    double slack_std_error = 0.0;
    /// slack < -4 * slack_std_error.
    bool significant_violation = false;
};

/// Categorical inverse-CDF sampler over the eight pair types.
class PairTypeSampler {
public:
    explicit PairTypeSampler(const std::array<double, kPairTypeCount>& probabilities);

    /// Returns a pair-type index in 1..8; one uniform draw.
    int operator()(CounterStream& stream) const noexcept;

private:
    std::array<double, kPairTypeCount> cumulative_{};
    int last_positive_ = kPairTypeCount;
};

/// Draws n pairs at one setting from the stream addressed by
/// (seed, repetition, setting.stream_index()).
SettingEstimate run_setting(const ExperimentConfig& config, const Setting& setting,
                            std::uint64_t repetition = 0);

/// Empirical Wigner inequality from three disjoint per-setting samples.
EstimateReport estimate_wigner(const ExperimentConfig& config, std::uint64_t repetition = 0);

struct ConfidenceInterval {
    double lo;
    double hi;
};

inline constexpr double kWilsonZ95 = 1.959963984540054;

/// Wilson score interval for a binomial proportion.
ConfidenceInterval wilson_interval(std::int64_t successes, std::int64_t trials,
                                   double z = kWilsonZ95);

struct ViolationPoint {
    std::int64_t pairs = 0;
    std::int64_t repetitions = 0;
    std::int64_t violations = 0;
    std::int64_t significant_violations = 0;
    double rate = 0.0;
    ConfidenceInterval interval{0.0, 1.0};
};

struct ViolationCurve {
    std::vector<ViolationPoint> points;
};

/// Repetition identifier used for schedule entry `index`, repetition `r`.
constexpr std::uint64_t curve_repetition_id(std::size_t index, std::int64_t r) noexcept {
    return (static_cast<std::uint64_t>(index) << 32) | static_cast<std::uint64_t>(r);
}

/// For each n in the schedule, runs config.repetitions independent
/// estimates and records how often the raw empirical inequality is
/// violated. Output does not depend on `threads`.
/// Throws ConfigError on an empty or non-increasing schedule.
ViolationCurve violation_curve(const ExperimentConfig& config,
                               std::span<const std::int64_t> schedule, unsigned threads = 1);

/// One multinomial draw of m pairs binned by type.
Population random_population(std::int64_t m, const std::array<double, kPairTypeCount>& weights,
                             CounterStream& stream);

}  // namespace wignerbell
