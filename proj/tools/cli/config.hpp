#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wignerbell/experiment.hpp"

namespace wignerbell::cli {

/// Radians, either a JSON number or a string such as "pi/4", "3*pi/4",
/// "-pi", "0.25". Throws ConfigError otherwise.
double parse_angle(std::string_view text);

struct LoadedConfig {
    ExperimentConfig experiment;
    unsigned threads = 1;
};

/// Parses and validates a JSON experiment config. `origin` names the
/// source in diagnostics (file path). Errors carry the line/column of
/// syntax errors and the dotted field path of semantic ones.
LoadedConfig parse_config(std::string_view text, std::string_view origin = "<config>");

LoadedConfig load_config(const std::filesystem::path& path);

/// Fully resolved form (axes as unit vectors, weights as given) that
/// parses back to the same ExperimentConfig.
nlohmann::ordered_json config_to_json(const LoadedConfig& config);

}  // namespace wignerbell::cli
