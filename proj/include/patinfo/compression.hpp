#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "patinfo/core.hpp"
#include "patinfo/estimators.hpp"
#include "patinfo/tokenize.hpp"

namespace patinfo {

/// Failure inside a compression backend.
class CompressionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A calibration was applied to a pattern it was not computed for.
class CalibrationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lossless, deterministic byte compressor.
class Compressor {
 public:
  virtual ~Compressor() = default;
  /// Backend name, version and settings; never contains ':'.
  virtual std::string id() const = 0;
  virtual std::vector<std::uint8_t> compress(std::span<const std::uint8_t> in) const = 0;
  virtual std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> in) const = 0;
};

/// zlib deflate in a gzip wrapper at level 9. The header carries no mtime or
/// file name, so output depends only on the input bytes.
class GzipCompressor final : public Compressor {
 public:
  std::string id() const override;
  std::vector<std::uint8_t> compress(std::span<const std::uint8_t> in) const override;
  std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> in) const override;
};

/// How symbols become bytes before compression.
enum class SerializationMode {
  byte,   // each symbol is exactly one byte, written as is
  utf8,   // symbol values concatenated
  u32le,  // dense index by first occurrence, 32-bit little endian
};

std::string_view to_string(SerializationMode m) noexcept;
std::optional<SerializationMode> parse_serialization_mode(std::string_view name) noexcept;
SerializationMode default_serialization(TokenMode mode) noexcept;

/// Throws std::invalid_argument when a symbol does not fit `mode`.
std::vector<std::uint8_t> serialize(const Pattern& p, SerializationMode mode);

/// i-th reference symbol for `mode`; index 0 serializes to zero bytes.
Symbol reference_symbol(std::size_t i, SerializationMode mode);

/// 8 × compressed length of serialize(p, mode).
InfoBits compressed_bits(const Pattern& p, const Compressor& c, SerializationMode mode);

/// What a calibration measures on each pattern.
enum class CalibrationFlavor {
  compressed_bits,     // raw compressed size in bits
  mark_of_compressed,  // modified Shannon information of the compressed bytes
};

double calibration_measure(const Pattern& p, const Compressor& c, SerializationMode mode,
                           CalibrationFlavor flavor);

inline constexpr std::size_t kCalibrationSamples = 11;

struct CompressionCalibration {
  std::size_t n = 0;
  std::size_t k = 0;
  SerializationMode mode = SerializationMode::byte;
  CalibrationFlavor flavor = CalibrationFlavor::compressed_bits;
  std::string compressor;
  double low_bits = 0.0;   // constant reference
  double high_bits = 0.0;  // median of the random references
  std::size_t samples = kCalibrationSamples;
  std::uint64_t seed = 0;

  /// "n:k:mode:compressor:seed"; the mark flavor appends "+mark" to the mode.
  std::string key() const;
  bool degenerate() const noexcept { return high_bits - low_bits <= 1e-9; }
};

std::string calibration_key(std::size_t n, std::size_t k, SerializationMode mode,
                            CalibrationFlavor flavor, std::string_view compressor,
                            std::uint64_t seed);

/// Constant reference of length n (reference symbol 0 repeated).
Pattern constant_reference(std::size_t n, SerializationMode mode);

/// The seeded uniform random references of length n over k reference symbols.
std::vector<Pattern> calibration_references(std::size_t n, std::size_t k, SerializationMode mode,
                                            std::uint64_t seed,
                                            std::size_t samples = kCalibrationSamples);

CompressionCalibration calibrate(std::size_t n, std::size_t k, const Compressor& c,
                                 SerializationMode mode, std::uint64_t seed,
                                 CalibrationFlavor flavor = CalibrationFlavor::compressed_bits,
                                 std::size_t samples = kCalibrationSamples);

/// Rescales the pattern's measure from [low_bits, high_bits] onto
/// [min_info, max_info]; the midpoint when the calibration is degenerate.
/// Throws CalibrationMismatch if `cal` was made for another n, k or backend.
Estimate compression_info(const Pattern& p, const CompressionCalibration& cal,
                          const Compressor& c);

/// Any bit-valued complexity measure standing in for Kolmogorov complexity.
using ComplexityOracle = std::function<double(const Pattern&)>;

/// compressed_bits under `mode`. `c` must outlive the returned oracle.
ComplexityOracle compressed_size_oracle(const Compressor& c, SerializationMode mode);

/// oracle(p) − oracle(constant of length n) + min_info(p). The constant
/// reference repeats p's first symbol, so constant patterns map exactly to
/// min_info. Raw value is kept; the clamped value lies in info_bounds(p).
Estimate oracle_normalized_info(const Pattern& p, const ComplexityOracle& oracle);

}  // namespace patinfo
