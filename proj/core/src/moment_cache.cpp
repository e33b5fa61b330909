#include "hsdet/moment_cache.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <locale>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hsdet/error.hpp"

namespace hsdet {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string iso_timestamp(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::chrono::system_clock::time_point parse_timestamp(const std::string& text) {
  std::tm tm{};
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  is >> std::get_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  if (is.fail()) return {};
  return std::chrono::system_clock::from_time_t(timegm(&tm));
}

}  // namespace

std::string moment_checksum(const std::vector<std::string>& moments) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& m : moments) {
    for (unsigned char c : m) mix(c);
    mix('\n');
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

MomentCache::MomentCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path MomentCache::file_for(MomentFamily family, HalfIntegerAlpha alpha) const {
  return dir_ / (std::string(to_string(family)) + "-2alpha-" + std::to_string(alpha.two_alpha()) + ".json");
}

MomentSequence MomentCache::read_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw FormatError("cannot open cache file " + file.string());
  json doc;
  try {
    in >> doc;
    const MomentFamily family = parse_family(doc.at("family").get<std::string>());
    const HalfIntegerAlpha alpha(doc.at("twoAlpha").get<int>());
    const auto& support = doc.at("support");
    const Interval interval{ExactRational::parse(support.at(0).get<std::string>()),
                            ExactRational::parse(support.at(1).get<std::string>())};
    if (interval != family_support(family)) throw FormatError("support does not match family");

    std::vector<std::string> raw = doc.at("moments").get<std::vector<std::string>>();
    if (doc.contains("checksum") && doc["checksum"].get<std::string>() != moment_checksum(raw)) {
      throw FormatError("checksum mismatch");
    }
    MomentSequence seq{family, alpha, interval, {}, {}};
    seq.values.reserve(raw.size());
    for (std::size_t n = 0; n < raw.size(); ++n) {
      try {
        seq.values.push_back(ExactRational::parse(raw[n]));
      } catch (const std::exception& e) {
        throw FormatError("entry " + std::to_string(n) + ": " + e.what());
      }
    }
    if (doc.contains("generatedAt")) seq.generated_at = parse_timestamp(doc["generatedAt"].get<std::string>());
    return seq;
  } catch (const std::exception& e) {
    throw FormatError("corrupt cache file " + file.string() + ": " + e.what());
  }
}

std::optional<MomentSequence> MomentCache::load(MomentFamily family, HalfIntegerAlpha alpha) const {
  const fs::path file = file_for(family, alpha);
  if (!fs::exists(file)) return std::nullopt;
  MomentSequence seq = read_file(file);
  if (seq.family != family || seq.alpha != alpha) {
    throw FormatError("cache file " + file.string() + " holds a different (family, alpha)");
  }
  return seq;
}

void MomentCache::store(const MomentSequence& seq) const {
  fs::create_directories(dir_);
  std::vector<std::string> raw;
  raw.reserve(seq.values.size());
  for (const auto& v : seq.values) raw.push_back(v.str());

  json doc;
  doc["family"] = std::string(to_string(seq.family));
  doc["twoAlpha"] = seq.alpha.two_alpha();
  doc["support"] = {seq.support.lower.str(), seq.support.upper.str()};
  doc["moments"] = raw;
  doc["generatedAt"] = iso_timestamp(seq.generated_at);
  doc["checksum"] = moment_checksum(raw);

  const fs::path target = file_for(seq.family, seq.alpha);
  fs::path tmp = target;
  tmp += ".tmp-" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    if (!out) throw FormatError("cannot write cache file " + tmp.string());
    out << doc.dump(1) << '\n';
    if (!out) throw FormatError("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::vector<CacheEntryInfo> MomentCache::list() const {
  std::vector<CacheEntryInfo> out;
  if (!fs::is_directory(dir_)) throw FormatError("cache directory does not exist: " + dir_.string());
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() != ".json") continue;
    const MomentSequence seq = read_file(entry.path());
    out.push_back({entry.path(), seq.family, seq.alpha.two_alpha(), seq.max_order()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
  return out;
}

std::size_t MomentCache::clear() const {
  if (!fs::is_directory(dir_)) throw FormatError("cache directory does not exist: " + dir_.string());
  std::size_t removed = 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() == ".json") removed += fs::remove(entry.path()) ? 1 : 0;
  }
  return removed;
}

std::vector<CacheVerifyResult> MomentCache::verify() const {
  if (!fs::is_directory(dir_)) throw FormatError("cache directory does not exist: " + dir_.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CacheVerifyResult> results;
  for (const auto& file : files) {
    MomentSequence seq{MomentFamily::Unbalanced, HalfIntegerAlpha(1), {}, {}, {}};
    try {
      seq = read_file(file);
    } catch (const FormatError& e) {
      results.push_back({file, false, e.what()});
      continue;
    }
    std::mt19937_64 rng(static_cast<std::uint64_t>(seq.alpha.two_alpha()) * 1000003ULL +
                        static_cast<std::uint64_t>(seq.family));
    std::vector<std::size_t> picks;
    if (!seq.values.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, seq.values.size() - 1);
      for (int i = 0; i < 3; ++i) picks.push_back(pick(rng));
    }
    std::string failure;
    for (std::size_t n : picks) {
      const ExactRational expected = family_moment(seq.family, seq.alpha, static_cast<unsigned>(n));
      if (expected != seq.values[n]) {
        failure = "entry " + std::to_string(n) + " differs from its re-derived value";
        break;
      }
    }
    results.push_back({file, failure.empty(), failure});
  }
  return results;
}

}  // namespace hsdet
