#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hsdet/moments.hpp"

namespace hsdet {

struct CacheEntryInfo {
  std::filesystem::path file;
  MomentFamily family;
  int two_alpha;
  std::size_t max_order;
};

struct CacheVerifyResult {
  std::filesystem::path file;
  bool ok;
  std::string detail;  ///< empty on success, otherwise names the failing entry
};

/// One JSON document per (family, 2*alpha) holding the longest computed
/// prefix of the moment sequence:
///   {"family": "unbalanced", "twoAlpha": 2, "support": ["-1/16", "1/256"],
///    "moments": ["1", "-7/3876", ...], "generatedAt": "...", "checksum": "..."}
/// Writes go to a temporary file in the same directory and are renamed
/// into place, so readers never observe a partial table.
class MomentCache {
 public:
  explicit MomentCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(MomentFamily family, HalfIntegerAlpha alpha) const;

  /// Throws FormatError naming the file when a stored table is corrupt.
  std::optional<MomentSequence> load(MomentFamily family, HalfIntegerAlpha alpha) const;
  void store(const MomentSequence& seq) const;

  std::vector<CacheEntryInfo> list() const;
  std::size_t clear() const;

  /// Checks each table's checksum and exactly re-derives three entries
  /// chosen by a seed derived from (family, 2*alpha).
  std::vector<CacheVerifyResult> verify() const;

  /// Parses a cache document without consulting the directory.
  static MomentSequence read_file(const std::filesystem::path& file);

 private:
  std::filesystem::path dir_;
};

/// 64-bit FNV-1a over the moment strings, each followed by '\n'.
std::string moment_checksum(const std::vector<std::string>& moments);

}  // namespace hsdet
