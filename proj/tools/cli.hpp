#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wright::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInconclusive = 1,  // bounded search found nothing
  kUsage = 2,         // usage or parse error
  kMathError = 3,     // mathematical precondition violated
};

/// Flat key = value settings. Lines starting with '#' are comments.
/// Recognized keys: m, alphas, alpha, bound, dmax, cmax, max_degree, coeffs,
/// threads, output (text | json), checkpoint.
struct Config {
  std::map<std::string, std::string> values;

  std::optional<std::string> get(const std::string& key) const;
};

/// Throws wright::ParseError on malformed lines or unknown keys.
Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

/// Environment variable naming a default config file.
inline constexpr const char* kConfigEnv = "WRIGHTKIT_CONFIG";

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wright::cli
