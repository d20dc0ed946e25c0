#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wignerbell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the default output directory.
inline constexpr const char* kOutputDirEnv = "WIGNERBELL_OUTPUT_DIR";
inline constexpr const char* kDefaultOutputDir = "wignerbell-out";

/// --out if given, else $WIGNERBELL_OUTPUT_DIR, else ./wignerbell-out.
std::filesystem::path resolve_output_dir(const std::optional<std::string>& flag);

/// Parses "10,100,1000". Throws ConfigError on empty or malformed input.
std::vector<std::int64_t> parse_schedule(const std::string& text);

int cmd_table(const std::string& format, std::ostream& out);
int cmd_check(const std::string& which, int max_sum, std::ostream& out, std::ostream& err);
int cmd_quantum_scan(int steps, std::ostream& out, std::ostream& err);
int cmd_simulate(const std::filesystem::path& config, const std::filesystem::path& out_dir,
                 std::ostream& out, std::ostream& err);
int cmd_violation_curve(const std::filesystem::path& config, const std::string& schedule,
                        const std::filesystem::path& out_dir, std::ostream& out,
                        std::ostream& err);

/// Full command line, argv[0] excluded. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wignerbell::cli
