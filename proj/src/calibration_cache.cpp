#include "patinfo/calibration_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <system_error>

#include <unistd.h>

#include "json.hpp"

namespace patinfo {

namespace fs = std::filesystem;
using nlohmann::json;

std::optional<CompressionCalibration> parse_calibration_key(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = key.find(':', start);
    parts.push_back(key.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 5) return std::nullopt;

  CompressionCalibration cal;
  std::string mode = parts[2];
  if (mode.ends_with("+mark")) {
    cal.flavor = CalibrationFlavor::mark_of_compressed;
    mode.resize(mode.size() - 5);
  }
  const auto parsed_mode = parse_serialization_mode(mode);
  if (!parsed_mode) return std::nullopt;
  try {
    std::size_t used = 0;
    cal.n = std::stoull(parts[0], &used);
    if (used != parts[0].size()) return std::nullopt;
    cal.k = std::stoull(parts[1], &used);
    if (used != parts[1].size()) return std::nullopt;
    cal.seed = std::stoull(parts[4], &used);
    if (used != parts[4].size()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  cal.mode = *parsed_mode;
  cal.compressor = parts[3];
  return cal;
}

CalibrationCache::CalibrationCache(fs::path path) : path_(std::move(path)) {
  entries_ = load(*path_);
}

fs::path CalibrationCache::default_path() {
  if (const char* env = std::getenv("PATINFO_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "patinfo" / "calibrations.json";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "patinfo" / "calibrations.json";
  }
  return fs::temp_directory_path() / "patinfo-calibrations.json";
}

std::map<std::string, CalibrationCache::Entry> CalibrationCache::load(const fs::path& path) {
  std::map<std::string, Entry> out;
  std::ifstream in(path);
  if (!in) return out;
  const json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object()) return out;
  for (const auto& [key, value] : doc.items()) {
    if (!parse_calibration_key(key) || !value.is_object()) continue;
    try {
      out[key] = Entry{value.at("low_bits").get<double>(), value.at("high_bits").get<double>(),
                       value.at("samples").get<std::size_t>()};
    } catch (const json::exception&) {
      continue;
    }
  }
  return out;
}

std::optional<CompressionCalibration> CalibrationCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  auto cal = parse_calibration_key(key);
  if (!cal) return std::nullopt;
  cal->low_bits = it->second.low_bits;
  cal->high_bits = it->second.high_bits;
  cal->samples = it->second.samples;
  return cal;
}

void CalibrationCache::store(const CompressionCalibration& cal) {
  std::unique_lock lock(mutex_);
  entries_[cal.key()] = Entry{cal.low_bits, cal.high_bits, cal.samples};
}

CompressionCalibration CalibrationCache::get_or_calibrate(std::size_t n, std::size_t k,
                                                          const Compressor& c,
                                                          SerializationMode mode,
                                                          std::uint64_t seed,
                                                          CalibrationFlavor flavor) {
  const std::string key = calibration_key(n, k, mode, flavor, c.id(), seed);
  if (auto hit = find(key); hit && hit->samples == kCalibrationSamples) return *hit;
  auto cal = calibrate(n, k, c, mode, seed, flavor);
  store(cal);
  return cal;
}

void CalibrationCache::flush() const {
  if (!path_) return;
  std::map<std::string, Entry> merged = load(*path_);
  {
    std::shared_lock lock(mutex_);
    for (const auto& [key, e] : entries_) merged[key] = e;
  }
  json doc = json::object();
  for (const auto& [key, e] : merged) {
    doc[key] = {{"low_bits", e.low_bits}, {"high_bits", e.high_bits}, {"samples", e.samples}};
  }

  std::error_code ec;
  if (path_->has_parent_path()) fs::create_directories(path_->parent_path(), ec);
  fs::path tmp = *path_;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write calibration cache " + tmp.string());
    out << doc.dump(2) << '\n';
  }
  fs::rename(tmp, *path_, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot replace calibration cache " + path_->string());
  }
}

std::size_t CalibrationCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace patinfo
