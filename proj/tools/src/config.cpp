#include "conformal_cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace conformal::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("invalid boolean: '" + std::string(text) + "'");
}

}  // namespace

void RunConfig::validate() const {
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (!(fd_step >= 1e-9 && fd_step <= 1e-2)) throw ConfigError("fd-step must lie in [1e-9, 1e-2]");
  for (const auto& [name, tol] : tolerance_overrides) {
    if (!(tol > 0.0)) throw ConfigError("tolerance for '" + name + "' must be positive");
  }
}

double RunConfig::tolerance_for(const std::string& check, double fallback) const {
  if (auto it = tolerance_overrides.find(check); it != tolerance_overrides.end()) return it->second;
  const auto dot = check.find('.');
  if (dot != std::string::npos) {
    if (auto it = tolerance_overrides.find(check.substr(0, dot)); it != tolerance_overrides.end()) {
      return it->second;
    }
  }
  return fallback;
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ConfigError("format must be csv or json, got '" + std::string(text) + "'");
}

std::uint64_t parse_seed(std::string_view text) { return parse_number<std::uint64_t>(trim(text), "seed"); }

void apply_config_text(std::string_view text, RunConfig& cfg, std::string_view origin) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    try {
      if (key == "seed") {
        cfg.seed = parse_seed(value);
      } else if (key == "samples") {
        cfg.samples = parse_number<int>(value, "samples");
      } else if (key == "fd_step" || key == "fd-step") {
        cfg.fd_step = parse_number<double>(value, "fd_step");
      } else if (key == "out") {
        cfg.output_path = std::string(value);
      } else if (key == "format") {
        cfg.format = parse_format(value);
      } else if (key == "timing") {
        cfg.timing = parse_bool(value);
      } else if (key.starts_with("tolerance.") && key.size() > 10) {
        cfg.tolerance_overrides[key.substr(10)] = parse_number<double>(value, "tolerance");
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(buf.str(), cfg, path);
}

std::optional<std::uint64_t> seed_from_env(const char* value) {
  if (value == nullptr || trim(value).empty()) return std::nullopt;
  try {
    return parse_seed(value);
  } catch (const ConfigError&) {
    throw ConfigError("CONFORMAL_COHERENT_SEED is not an unsigned integer: '" + std::string(value) + "'");
  }
}

}  // namespace conformal::cli
