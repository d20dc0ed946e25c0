#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace wignerbell::cli {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

struct ManifestEntry {
    std::string path;  // relative to the output directory
    std::string sha256;
};

/// Provenance record written next to a run's outputs. Everything but the
/// timestamp is a pure function of the command and resolved config.
struct RunManifest {
    std::string command;
    nlohmann::ordered_json config;
    std::uint64_t seed = 0;
    std::string timestamp;  // ISO-8601 UTC
    std::vector<ManifestEntry> outputs;

    nlohmann::ordered_json to_json() const;
};

std::string utc_timestamp();

/// Writes `bytes` to dir/name and records its digest in `manifest`.
void write_output(const std::filesystem::path& dir, const std::string& name,
                  std::string_view bytes, RunManifest& manifest);

/// Writes dir/<name> containing the manifest JSON.
void write_manifest(const std::filesystem::path& dir, const std::string& name,
                    const RunManifest& manifest);

}  // namespace wignerbell::cli
