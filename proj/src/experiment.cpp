#include "wignerbell/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "wignerbell/errors.hpp"

namespace wignerbell {

SourceSpec SourceSpec::lhv(const std::array<double, kPairTypeCount>& weights) {
    double sum = 0.0;
    for (int i = 0; i < kPairTypeCount; ++i) {
        if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
            throw ConfigError("LHV weight for pair type " + std::to_string(i + 1) +
                              " must be finite and non-negative");
        }
        sum += weights[i];
    }
    if (!(sum > 0.0)) throw ConfigError("LHV weights must have a positive sum");
    SourceSpec spec;
    spec.kind_ = SourceKind::Lhv;
    spec.weights_ = weights;
    return spec;
}

std::array<double, kPairTypeCount> SourceSpec::probabilities() const {
    std::array<double, kPairTypeCount> p{};
    double sum = 0.0;
    for (double w : weights_) sum += w;
    if (sum > 0.0) {
        for (int i = 0; i < kPairTypeCount; ++i) p[i] = weights_[i] / sum;
    }
    return p;
}

void ExperimentConfig::validate() const {
    if (pairs_per_setting < 1) throw ConfigError("pairs_per_setting must be >= 1");
    if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
}

PairTypeSampler::PairTypeSampler(const std::array<double, kPairTypeCount>& probabilities) {
    double acc = 0.0;
    for (int i = 0; i < kPairTypeCount; ++i) {
        acc += probabilities[i];
        cumulative_[i] = acc;
        if (probabilities[i] > 0.0) last_positive_ = i + 1;
    }
    if (!(acc > 0.0) || !std::isfinite(acc)) throw ConfigError("pair-type weights sum to zero");
    for (double& c : cumulative_) c /= acc;
}

// A zero-weight type repeats the previous threshold and is never selected;
// draws above a rounded-down final threshold go to the last positive type.
int PairTypeSampler::operator()(CounterStream& stream) const noexcept {
    const double u = stream.uniform();
    for (int i = 0; i < kPairTypeCount; ++i) {
        if (u < cumulative_[i]) return i + 1;
    }
    return last_positive_;
}

namespace {

constexpr int outcome_slot(Sign alice, Sign bob) noexcept {
    return (alice == Sign::Plus ? 0 : 2) + (bob == Sign::Plus ? 0 : 1);
}

SettingEstimate finish(const Setting& setting, std::int64_t n,
                       const std::array<std::int64_t, 4>& counts) {
    SettingEstimate est;
    est.setting = setting;
    est.pairs = n;
    est.counts = counts;
    est.hits = counts[outcome_slot(setting.alice_sign, setting.bob_sign)];
    est.p_hat = static_cast<double>(est.hits) / static_cast<double>(n);
    est.std_error = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n));
    return est;
}

}  // namespace

SettingEstimate run_setting(const ExperimentConfig& config, const Setting& setting,
                            std::uint64_t repetition) {
    config.validate();
    const std::int64_t n = config.pairs_per_setting;
    CounterStream stream = CounterStream::derive(config.seed, repetition, setting.stream_index());
    std::array<std::int64_t, 4> counts{};

    if (config.source.kind() == SourceKind::Quantum) {
        const JointSampler sampler(axis_for(config.axes, setting.alice),
                                   axis_for(config.axes, setting.bob));
        for (std::int64_t i = 0; i < n; ++i) {
            const JointOutcome o = sampler(stream);
            ++counts[outcome_slot(o.alice, o.bob)];
        }
    } else {
        // Precompute the joint outcome of each pair type at this setting.
        std::array<int, kPairTypeCount> slot_of_type{};
        for (const PairType& type : pair_type_table()) {
            slot_of_type[type.index - 1] = outcome_slot(type.outcome(Particle::First, setting.alice),
                                                        type.outcome(Particle::Second, setting.bob));
        }
        const PairTypeSampler sampler(config.source.probabilities());
        for (std::int64_t i = 0; i < n; ++i) ++counts[slot_of_type[sampler(stream) - 1]];
    }
    return finish(setting, n, counts);
}

EstimateReport estimate_wigner(const ExperimentConfig& config, std::uint64_t repetition) {
    EstimateReport report;
    report.config = config;
    report.repetition = repetition;
    for (std::size_t i = 0; i < kWignerSettings.size(); ++i) {
        report.settings[i] = run_setting(config, kWignerSettings[i], repetition);
    }
    const auto& [ab, ac, cb] = report.settings;
    report.empirical = InequalityReport::make(ab.p_hat, ac.p_hat + cb.p_hat);
    // All settings share n, so the sign of the slack is decided exactly on counts.
    report.violated = ac.hits + cb.hits - ab.hits < 0;
    report.slack_std_error = std::sqrt(ab.std_error * ab.std_error + ac.std_error * ac.std_error +
                                       cb.std_error * cb.std_error);
    report.significant_violation = report.empirical.slack < -4.0 * report.slack_std_error;
    return report;
}

ConfidenceInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
    if (trials <= 0 || successes < 0 || successes > trials) {
        throw DomainError("wilson_interval needs 0 <= successes <= trials and trials > 0");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // Clamp against rounding so the interval always contains p.
    return {std::clamp(std::min(centre - half, p), 0.0, 1.0),
            std::clamp(std::max(centre + half, p), 0.0, 1.0)};
}

ViolationCurve violation_curve(const ExperimentConfig& config,
                               std::span<const std::int64_t> schedule, unsigned threads) {
    config.validate();
    if (schedule.empty()) throw ConfigError("violation-curve schedule is empty");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] < 1) throw ConfigError("schedule entries must be >= 1");
        if (i > 0 && schedule[i] <= schedule[i - 1]) {
            throw ConfigError("schedule must be strictly increasing");
        }
    }

    const std::int64_t reps = config.repetitions;
    ViolationCurve curve;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        ExperimentConfig at_n = config;
        at_n.pairs_per_setting = schedule[k];

        // One flag pair per repetition, filled by index; aggregation is a
        // plain sum, so the thread schedule cannot change the result.
        std::vector<char> violated(static_cast<std::size_t>(reps), 0);
        std::vector<char> significant(static_cast<std::size_t>(reps), 0);
        auto work = [&](std::int64_t begin, std::int64_t end) {
            for (std::int64_t r = begin; r < end; ++r) {
                const EstimateReport est = estimate_wigner(at_n, curve_repetition_id(k, r));
                violated[r] = est.violated;
                significant[r] = est.significant_violation;
            }
        };

        const auto workers = static_cast<std::int64_t>(std::max(1u, threads));
        if (workers == 1) {
            work(0, reps);
        } else {
            std::vector<std::jthread> pool;
            const std::int64_t chunk = (reps + workers - 1) / workers;
            for (std::int64_t begin = 0; begin < reps; begin += chunk) {
                pool.emplace_back(work, begin, std::min(reps, begin + chunk));
            }
        }

        ViolationPoint point;
        point.pairs = schedule[k];
        point.repetitions = reps;
        for (std::int64_t r = 0; r < reps; ++r) {
            point.violations += violated[r];
            point.significant_violations += significant[r];
        }
        point.rate = static_cast<double>(point.violations) / static_cast<double>(reps);
        point.interval = wilson_interval(point.violations, reps);
        curve.points.push_back(point);
    }
    return curve;
}

Population random_population(std::int64_t m, const std::array<double, kPairTypeCount>& weights,
                             CounterStream& stream) {
    if (m < 0) throw DomainError("random_population needs m >= 0");
    std::array<Count, kPairTypeCount> counts{};
    if (m == 0) return Population(counts);
    const PairTypeSampler sampler(SourceSpec::lhv(weights).probabilities());
    for (std::int64_t i = 0; i < m; ++i) ++counts[sampler(stream) - 1];
    return Population(counts);
}

}  // namespace wignerbell
