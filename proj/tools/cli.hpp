#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hsdet/exact_rational.hpp"

namespace hsdet::cli {

struct RunConfig {
  unsigned digits = 300;
  unsigned n_moments = 500;
  std::filesystem::path cache_dir;
  bool use_cache = true;
  std::optional<std::filesystem::path> output_path;
};

/// Environment variable that overrides the default cache directory.
inline constexpr const char* kCacheDirEnv = "HSDET_CACHE_DIR";

/// "0.5:35:0.5" (inclusive range) or "0.5,1,2".
std::vector<HalfIntegerAlpha> parse_alpha_list(const std::string& text);

/// Runs one subcommand (args exclude the program name). Returns the exit
/// status; diagnostics go to `err` as a single "error: ..." line.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsdet::cli
