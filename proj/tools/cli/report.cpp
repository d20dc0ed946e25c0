#include "cli/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "wignerbell/version.hpp"

namespace wignerbell::cli {

std::string format_double(double value) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

namespace {

std::string label(AxisLabel l) { return std::string(1, to_char(l)); }
std::string sign(Sign s) { return std::string(1, to_char(s)); }

std::string setting_name(const Setting& s) {
    return label(s.alice) + sign(s.alice_sign) + ";" + label(s.bob) + sign(s.bob_sign);
}

// Expected value of the inequality under the configured source.
InequalityReport model_expectation(const ExperimentConfig& cfg) {
    if (cfg.source.kind() == SourceKind::Quantum) return wigner_quantum(cfg.axes);
    const auto p = cfg.source.probabilities();
    std::array<double, 3> terms{};
    for (std::size_t i = 0; i < kWignerSettings.size(); ++i) {
        const Setting& s = kWignerSettings[i];
        for (const PairType& type : pair_type_table()) {
            if (type.outcome(Particle::First, s.alice) == s.alice_sign &&
                type.outcome(Particle::Second, s.bob) == s.bob_sign) {
                terms[i] += p[type.index - 1];
            }
        }
    }
    return InequalityReport::make(terms[0], terms[1] + terms[2]);
}

}  // namespace

std::string render_table(TableFormat format) {
    std::ostringstream out;
    switch (format) {
        case TableFormat::Text:
            out << "type  particle1 / particle2\n";
            for (const PairType& t : pair_type_table()) {
                out << t.index << "     " << format_signs(t.particle1) << " / "
                    << format_signs(t.particle2) << '\n';
            }
            break;
        case TableFormat::Csv:
            out << "type,p1_a,p1_b,p1_c,p2_a,p2_b,p2_c\n";
            for (const PairType& t : pair_type_table()) {
                out << t.index;
                for (Sign s : t.particle1) out << ',' << to_char(s);
                for (Sign s : t.particle2) out << ',' << to_char(s);
                out << '\n';
            }
            break;
        case TableFormat::Json: {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const PairType& t : pair_type_table()) {
                nlohmann::ordered_json row;
                row["type"] = t.index;
                row["particle1"] = nlohmann::ordered_json::array();
                row["particle2"] = nlohmann::ordered_json::array();
                for (Sign s : t.particle1) row["particle1"].push_back(sign(s));
                for (Sign s : t.particle2) row["particle2"].push_back(sign(s));
                rows.push_back(std::move(row));
            }
            out << rows.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

std::string render_scan_csv(const std::vector<ScanPoint>& points) {
    std::ostringstream out;
    out << "theta,lhs,rhs,slack,violated\n";
    for (const ScanPoint& p : points) {
        out << format_double(p.theta) << ',' << format_double(p.report.lhs) << ','
            << format_double(p.report.rhs) << ',' << format_double(p.report.slack) << ','
            << (p.report.violated() ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string render_estimate_csv(const EstimateReport& report) {
    std::ostringstream out;
    out << "setting,alice,alice_sign,bob,bob_sign,pairs,count_pp,count_pm,count_mp,count_mm,hits,"
           "p_hat,std_error\n";
    for (const SettingEstimate& s : report.settings) {
        out << setting_name(s.setting) << ',' << label(s.setting.alice) << ','
            << sign(s.setting.alice_sign) << ',' << label(s.setting.bob) << ','
            << sign(s.setting.bob_sign) << ',' << s.pairs;
        for (auto c : s.counts) out << ',' << c;
        out << ',' << s.hits << ',' << format_double(s.p_hat) << ',' << format_double(s.std_error)
            << '\n';
    }
    return out.str();
}

nlohmann::ordered_json estimate_to_json(const LoadedConfig& config, const EstimateReport& report) {
    nlohmann::ordered_json j;
    j["tool"] = "wignerbell";
    j["version"] = std::string(kVersion);
    j["config"] = config_to_json(config);
    j["seed"] = report.config.seed;
    j["repetition"] = report.repetition;
    auto& settings = j["settings"] = nlohmann::ordered_json::array();
    for (const SettingEstimate& s : report.settings) {
        nlohmann::ordered_json row;
        row["setting"] = setting_name(s.setting);
        row["alice"] = label(s.setting.alice);
        row["alice_sign"] = sign(s.setting.alice_sign);
        row["bob"] = label(s.setting.bob);
        row["bob_sign"] = sign(s.setting.bob_sign);
        row["pairs"] = s.pairs;
        row["count_pp"] = s.counts[0];
        row["count_pm"] = s.counts[1];
        row["count_mp"] = s.counts[2];
        row["count_mm"] = s.counts[3];
        row["hits"] = s.hits;
        row["p_hat"] = s.p_hat;
        row["std_error"] = s.std_error;
        settings.push_back(std::move(row));
    }
    j["inequality"] = {
        {"lhs", report.empirical.lhs},
        {"rhs", report.empirical.rhs},
        {"slack", report.empirical.slack},
        {"violated", report.violated},
        {"slack_std_error", report.slack_std_error},
        {"significant_violation", report.significant_violation},
    };
    const InequalityReport model = model_expectation(report.config);
    j["model"] = {
        {"lhs", model.lhs},
        {"rhs", model.rhs},
        {"slack", model.slack},
        {"violated", model.violated()},
    };
    return j;
}

std::string render_curve_csv(const ViolationCurve& curve) {
    std::ostringstream out;
    out << "pairs,repetitions,violations,rate,ci_lo,ci_hi,significant_violations\n";
    for (const ViolationPoint& p : curve.points) {
        out << p.pairs << ',' << p.repetitions << ',' << p.violations << ','
            << format_double(p.rate) << ',' << format_double(p.interval.lo) << ','
            << format_double(p.interval.hi) << ',' << p.significant_violations << '\n';
    }
    return out.str();
}

nlohmann::ordered_json curve_to_json(const LoadedConfig& config, const ViolationCurve& curve) {
    nlohmann::ordered_json j;
    j["tool"] = "wignerbell";
    j["version"] = std::string(kVersion);
    j["config"] = config_to_json(config);
    auto& points = j["points"] = nlohmann::ordered_json::array();
    for (const ViolationPoint& p : curve.points) {
        points.push_back({{"pairs", p.pairs},
                          {"repetitions", p.repetitions},
                          {"violations", p.violations},
                          {"rate", p.rate},
                          {"ci_lo", p.interval.lo},
                          {"ci_hi", p.interval.hi},
                          {"significant_violations", p.significant_violations}});
    }
    return j;
}

std::string render_curve_svg(const ViolationCurve& curve) {
    constexpr double kWidth = 640, kHeight = 400;
    constexpr double kLeft = 60, kRight = 20, kTop = 20, kBottom = 50;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    double lo = std::log10(static_cast<double>(curve.points.front().pairs));
    double hi = std::log10(static_cast<double>(curve.points.back().pairs));
    if (hi - lo < 1e-9) {
        lo -= 0.5;
        hi += 0.5;
    }
    auto px = [&](std::int64_t n) {
        return kLeft + (std::log10(static_cast<double>(n)) - lo) / (hi - lo) * plot_w;
    };
    auto py = [&](double rate) { return kTop + (1.0 - rate) * plot_h; };
    auto f = [](double v) {
        std::ostringstream s;
        s.setf(std::ios::fixed);
        s.precision(2);
        s << v;
        return s.str();
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<g stroke=\"black\" fill=\"none\">\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << kTop + plot_h << "\"/>\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kTop + plot_h << "\"/>\n</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << f(py(r) + 4)
            << "\" text-anchor=\"end\">" << f(r) << "</text>\n";
    }
    for (const ViolationPoint& p : curve.points) {
        svg << "<text x=\"" << f(px(p.pairs)) << "\" y=\"" << kTop + plot_h + 18
            << "\" text-anchor=\"middle\">" << p.pairs << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\">pairs per setting (log scale)</text>\n";
    svg << "<text x=\"15\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
        << kTop + plot_h / 2 << ")\">apparent violation rate</text>\n</g>\n";

    svg << "<g stroke=\"#888\">\n";
    for (const ViolationPoint& p : curve.points) {
        svg << "<line x1=\"" << f(px(p.pairs)) << "\" y1=\"" << f(py(p.interval.lo)) << "\" x2=\""
            << f(px(p.pairs)) << "\" y2=\"" << f(py(p.interval.hi)) << "\"/>\n";
    }
    svg << "</g>\n<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        if (i) svg << ' ';
        svg << f(px(curve.points[i].pairs)) << ',' << f(py(curve.points[i].rate));
    }
    svg << "\"/>\n<g fill=\"#1f77b4\">\n";
    for (const ViolationPoint& p : curve.points) {
        svg << "<circle cx=\"" << f(px(p.pairs)) << "\" cy=\"" << f(py(p.rate)) << "\" r=\"3\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace wignerbell::cli
