#pragma once

// Run configuration shared by all subcommands. Sources are layered
// defaults < config file < CONFORMAL_COHERENT_SEED < command-line flags.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conformal::cli {

enum class OutputFormat { Csv, Json };

/// Usage or configuration problem; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  static constexpr std::uint64_t kDefaultSeed = 42;

  std::uint64_t seed = kDefaultSeed;
  int samples = 100;
  double fd_step = 1e-5;
  /// Keyed by suite ("su22") or check ("su22.euz"); the longer key wins.
  std::map<std::string, double> tolerance_overrides;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::Json;
  bool timing = false;

  /// samples >= 1 and fd_step in [1e-9, 1e-2].
  void validate() const;

  /// Effective tolerance for a check named "<suite>.<check>".
  double tolerance_for(const std::string& check, double fallback) const;
};

OutputFormat parse_format(std::string_view text);
std::uint64_t parse_seed(std::string_view text);

/// Applies `key = value` lines onto `cfg`. Blank lines and lines starting with
/// '#' are ignored. Keys: seed, samples, fd_step, out, format, timing,
/// tolerance.<name>.
void apply_config_text(std::string_view text, RunConfig& cfg, std::string_view origin = "config");
void apply_config_file(const std::string& path, RunConfig& cfg);

/// Seed from the environment value, if set and non-empty.
std::optional<std::uint64_t> seed_from_env(const char* value);

}  // namespace conformal::cli
