#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include "wignerbell/errors.hpp"

namespace wignerbell::cli {

using json = nlohmann::json;

namespace {

std::string field_error(std::string_view origin, const std::string& path, const std::string& what) {
    std::string msg(origin);
    msg += ": field '";
    msg += path;
    msg += "': ";
    msg += what;
    return msg;
}

double parse_number(const std::string& s, bool& ok) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    ok = ec == std::errc() && ptr == last;
    return v;
}

double angle_field(const json& node, std::string_view origin, const std::string& path) {
    if (node.is_number()) return node.get<double>();
    if (node.is_string()) {
        try {
            return parse_angle(node.get<std::string>());
        } catch (const ConfigError& e) {
            throw ConfigError(field_error(origin, path, e.what()));
        }
    }
    throw ConfigError(field_error(origin, path, "expected a number or an angle string like \"pi/4\""));
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed,
                    std::string_view origin, const std::string& prefix) {
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) {
            throw ConfigError(field_error(origin, prefix + key, "unknown field"));
        }
    }
}

const json& require(const json& obj, const char* key, std::string_view origin,
                    const std::string& prefix) {
    if (!obj.contains(key)) throw ConfigError(field_error(origin, prefix + key, "missing"));
    return obj.at(key);
}

Axis parse_axis(const json& node, std::string_view origin, const std::string& path) {
    try {
        if (node.is_array()) {
            if (node.size() != 3) throw ConfigError("expected [x, y, z]");
            std::array<double, 3> v{};
            for (std::size_t i = 0; i < 3; ++i) {
                if (!node[i].is_number()) throw ConfigError("components must be numbers");
                v[i] = node[i].get<double>();
            }
            // Unit vectors are kept bit-for-bit so a resolved config echo
            // reproduces the run exactly.
            const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            if (std::abs(norm - 1.0) <= Axis::kNormTolerance) return Axis(v[0], v[1], v[2]);
            return Axis::normalized(v[0], v[1], v[2]);
        }
        if (node.is_object()) {
            reject_unknown(node, {"polar", "azimuth"}, origin, path + ".");
            const double polar = angle_field(require(node, "polar", origin, path + "."), origin,
                                             path + ".polar");
            const double azimuth =
                node.contains("azimuth") ? angle_field(node["azimuth"], origin, path + ".azimuth")
                                         : 0.0;
            return Axis::from_spherical(polar, azimuth);
        }
        throw ConfigError("expected [x, y, z] or {\"polar\": .., \"azimuth\": ..}");
    } catch (const DomainError& e) {
        throw ConfigError(field_error(origin, path, e.what()));
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        if (what.rfind(std::string(origin), 0) == 0) throw;
        throw ConfigError(field_error(origin, path, what));
    }
}

std::int64_t positive_int(const json& node, std::string_view origin, const std::string& path) {
    if (!node.is_number_integer() || node.get<std::int64_t>() < 1) {
        throw ConfigError(field_error(origin, path, "expected an integer >= 1"));
    }
    return node.get<std::int64_t>();
}

}  // namespace

double parse_angle(std::string_view text) {
    static const std::regex kPiForm(
        R"(^\s*([+-]?)\s*(?:(\d+(?:\.\d*)?|\.\d+)\s*\*?\s*)?pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, kPiForm)) {
        bool ok = true;
        double value = std::numbers::pi;
        if (m[2].matched) value *= parse_number(m[2].str(), ok);
        if (ok && m[3].matched) {
            const double d = parse_number(m[3].str(), ok);
            if (d == 0.0) throw ConfigError("angle '" + s + "' divides by zero");
            value /= d;
        }
        if (ok) return m[1].str() == "-" ? -value : value;
    }
    std::string trimmed = s;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (!trimmed.empty() && trimmed.front() == '+') trimmed.erase(0, 1);
    bool ok = false;
    const double v = parse_number(trimmed, ok);
    if (ok && std::isfinite(v)) return v;
    throw ConfigError("cannot parse angle '" + s + "' (radians; forms: 0.5, pi/4, 3*pi/4)");
}

LoadedConfig parse_config(std::string_view text, std::string_view origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line:column.
        const std::size_t byte = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream msg;
        msg << origin << ":" << line << ":" << col << ": malformed JSON: " << e.what();
        throw ConfigError(msg.str());
    }
    if (!root.is_object()) throw ConfigError(std::string(origin) + ": top level must be an object");
    reject_unknown(root, {"source", "axes", "pairs_per_setting", "repetitions", "seed", "threads"},
                   origin, "");

    LoadedConfig out;
    ExperimentConfig& cfg = out.experiment;

    const json& source = require(root, "source", origin, "");
    if (!source.is_object()) throw ConfigError(field_error(origin, "source", "expected an object"));
    const json& kind = require(source, "kind", origin, "source.");
    if (kind == "quantum") {
        reject_unknown(source, {"kind"}, origin, "source.");
        cfg.source = SourceSpec::quantum();
    } else if (kind == "lhv") {
        reject_unknown(source, {"kind", "weights"}, origin, "source.");
        const json& w = require(source, "weights", origin, "source.");
        if (!w.is_array() || w.size() != kPairTypeCount) {
            throw ConfigError(field_error(origin, "source.weights", "expected 8 numbers"));
        }
        std::array<double, kPairTypeCount> weights{};
        for (int i = 0; i < kPairTypeCount; ++i) {
            if (!w[i].is_number()) {
                throw ConfigError(field_error(origin, "source.weights[" + std::to_string(i) + "]",
                                              "expected a number"));
            }
            weights[i] = w[i].get<double>();
        }
        try {
            cfg.source = SourceSpec::lhv(weights);
        } catch (const ConfigError& e) {
            throw ConfigError(field_error(origin, "source.weights", e.what()));
        }
    } else {
        throw ConfigError(field_error(origin, "source.kind", "expected \"quantum\" or \"lhv\""));
    }

    const json& axes = require(root, "axes", origin, "");
    if (!axes.is_object()) throw ConfigError(field_error(origin, "axes", "expected an object"));
    if (axes.contains("coplanar_theta")) {
        reject_unknown(axes, {"coplanar_theta"}, origin, "axes.");
        cfg.axes = AxisTriple::coplanar(angle_field(axes["coplanar_theta"], origin,
                                                    "axes.coplanar_theta"));
    } else {
        reject_unknown(axes, {"a", "b", "c"}, origin, "axes.");
        cfg.axes = AxisTriple{parse_axis(require(axes, "a", origin, "axes."), origin, "axes.a"),
                              parse_axis(require(axes, "b", origin, "axes."), origin, "axes.b"),
                              parse_axis(require(axes, "c", origin, "axes."), origin, "axes.c")};
    }

    cfg.pairs_per_setting =
        positive_int(require(root, "pairs_per_setting", origin, ""), origin, "pairs_per_setting");
    cfg.repetitions = root.contains("repetitions")
                          ? positive_int(root["repetitions"], origin, "repetitions")
                          : 1;
    const json& seed = require(root, "seed", origin, "");
    if (!seed.is_number_unsigned()) {
        throw ConfigError(field_error(origin, "seed", "expected a non-negative 64-bit integer"));
    }
    cfg.seed = seed.get<std::uint64_t>();
    if (root.contains("threads")) {
        out.threads = static_cast<unsigned>(positive_int(root["threads"], origin, "threads"));
    }
    cfg.validate();
    return out;
}

LoadedConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path.string() + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

nlohmann::ordered_json config_to_json(const LoadedConfig& config) {
    const ExperimentConfig& cfg = config.experiment;
    nlohmann::ordered_json j;
    if (cfg.source.kind() == SourceKind::Quantum) {
        j["source"] = {{"kind", "quantum"}};
    } else {
        j["source"] = {{"kind", "lhv"}, {"weights", cfg.source.weights()}};
    }
    j["axes"] = {{"a", cfg.axes.a.components()},
                 {"b", cfg.axes.b.components()},
                 {"c", cfg.axes.c.components()}};
    j["pairs_per_setting"] = cfg.pairs_per_setting;
    j["repetitions"] = cfg.repetitions;
    j["seed"] = cfg.seed;
    j["threads"] = config.threads;
    return j;
}

}  // namespace wignerbell::cli
