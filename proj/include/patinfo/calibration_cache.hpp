#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "patinfo/compression.hpp"

namespace patinfo {

/// Persistent store of calibrations, one JSON document mapping
/// "n:k:mode:compressor:seed" to {low_bits, high_bits, samples}.
///
/// Safe for concurrent readers with a single writer. Values are deterministic,
/// so a lost update between processes only costs a recomputation.
class CalibrationCache {
 public:
  /// In-memory only; flush() is a no-op.
  CalibrationCache() = default;
  /// Loads `path` if it exists. A corrupt file is ignored and rewritten on flush.
  explicit CalibrationCache(std::filesystem::path path);

  /// $PATINFO_CACHE, else $XDG_CACHE_HOME/patinfo/calibrations.json, else
  /// $HOME/.cache/patinfo/calibrations.json, else the temp directory.
  static std::filesystem::path default_path();

  std::optional<CompressionCalibration> find(const std::string& key) const;
  void store(const CompressionCalibration& cal);

  /// Cached calibration for the key, computing and storing it on a miss.
  CompressionCalibration get_or_calibrate(std::size_t n, std::size_t k, const Compressor& c,
                                          SerializationMode mode, std::uint64_t seed,
                                          CalibrationFlavor flavor =
                                              CalibrationFlavor::compressed_bits);

  /// Merges with whatever is on disk and atomically replaces the file.
  void flush() const;

  std::size_t size() const;
  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }

 private:
  struct Entry {
    double low_bits = 0.0;
    double high_bits = 0.0;
    std::size_t samples = 0;
  };

  static std::map<std::string, Entry> load(const std::filesystem::path& path);

  std::optional<std::filesystem::path> path_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, Entry> entries_;
};

/// Parses a cache key back into its fields; std::nullopt if malformed.
std::optional<CompressionCalibration> parse_calibration_key(const std::string& key);

}  // namespace patinfo
