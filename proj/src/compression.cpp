#include "patinfo/compression.hpp"

#include <zlib.h>

#include <algorithm>
#include <map>

#include "patinfo/generators.hpp"

namespace patinfo {

namespace {

constexpr int kGzipLevel = 9;
constexpr int kGzipWindowBits = 15 + 16;  // 32K window, gzip wrapper
constexpr int kMemLevel = 8;

}  // namespace

std::string GzipCompressor::id() const {
  return "gzip-" + std::to_string(kGzipLevel) + "-zlib-" + zlibVersion();
}

std::vector<std::uint8_t> GzipCompressor::compress(std::span<const std::uint8_t> in) const {
  z_stream strm{};
  if (deflateInit2(&strm, kGzipLevel, Z_DEFLATED, kGzipWindowBits, kMemLevel,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    throw CompressionError("deflateInit2 failed");
  }
  std::vector<std::uint8_t> out(deflateBound(&strm, static_cast<uLong>(in.size())));
  strm.next_in = const_cast<Bytef*>(in.data());
  strm.avail_in = static_cast<uInt>(in.size());
  strm.next_out = out.data();
  strm.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&strm, Z_FINISH);
  const auto produced = strm.total_out;
  deflateEnd(&strm);
  if (rc != Z_STREAM_END) {
    throw CompressionError("deflate did not finish (code " + std::to_string(rc) + ")");
  }
  out.resize(produced);
  return out;
}

std::vector<std::uint8_t> GzipCompressor::decompress(std::span<const std::uint8_t> in) const {
  z_stream strm{};
  if (inflateInit2(&strm, kGzipWindowBits) != Z_OK) throw CompressionError("inflateInit2 failed");
  std::vector<std::uint8_t> out(std::max<std::size_t>(in.size() * 4, 64));
  strm.next_in = const_cast<Bytef*>(in.data());
  strm.avail_in = static_cast<uInt>(in.size());
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    if (strm.total_out == out.size()) out.resize(out.size() * 2);
    strm.next_out = out.data() + strm.total_out;
    strm.avail_out = static_cast<uInt>(out.size() - strm.total_out);
    rc = inflate(&strm, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&strm);
      throw CompressionError("inflate failed (code " + std::to_string(rc) + ")");
    }
    if (rc == Z_OK && strm.avail_in == 0 && strm.avail_out != 0) {
      inflateEnd(&strm);
      throw CompressionError("truncated gzip stream");
    }
  }
  out.resize(strm.total_out);
  inflateEnd(&strm);
  return out;
}

std::string_view to_string(SerializationMode m) noexcept {
  switch (m) {
    case SerializationMode::byte: return "byte";
    case SerializationMode::utf8: return "utf8";
    case SerializationMode::u32le: return "u32le";
  }
  return "byte";
}

std::optional<SerializationMode> parse_serialization_mode(std::string_view name) noexcept {
  if (name == "byte") return SerializationMode::byte;
  if (name == "utf8") return SerializationMode::utf8;
  if (name == "u32le") return SerializationMode::u32le;
  return std::nullopt;
}

SerializationMode default_serialization(TokenMode mode) noexcept {
  switch (mode) {
    case TokenMode::byte: return SerializationMode::byte;
    case TokenMode::chr: return SerializationMode::utf8;
    case TokenMode::line:
    case TokenMode::token: return SerializationMode::u32le;
  }
  return SerializationMode::byte;
}

std::vector<std::uint8_t> serialize(const Pattern& p, SerializationMode mode) {
  std::vector<std::uint8_t> out;
  switch (mode) {
    case SerializationMode::byte:
      out.reserve(p.size());
      for (const auto& s : p.symbols()) {
        if (s.value.size() != 1) {
          throw std::invalid_argument("byte serialization needs single-byte symbols, got '" +
                                      s.value + "'");
        }
        out.push_back(static_cast<std::uint8_t>(s.value[0]));
      }
      break;
    case SerializationMode::utf8:
      for (const auto& s : p.symbols()) out.insert(out.end(), s.value.begin(), s.value.end());
      break;
    case SerializationMode::u32le: {
      std::map<Symbol, std::uint32_t> index;
      out.reserve(4 * p.size());
      for (const auto& s : p.symbols()) {
        const auto [it, inserted] = index.try_emplace(s, static_cast<std::uint32_t>(index.size()));
        const std::uint32_t v = it->second;
        for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
      }
      break;
    }
  }
  return out;
}

Symbol reference_symbol(std::size_t i, SerializationMode mode) {
  switch (mode) {
    case SerializationMode::byte:
      if (i > 255) throw std::invalid_argument("byte mode supports at most 256 symbols");
      return Symbol(std::string(1, static_cast<char>(static_cast<unsigned char>(i))));
    case SerializationMode::utf8: {
      // Skip the surrogate block so every index is a scalar value.
      auto cp = static_cast<std::uint32_t>(i < 0xD800 ? i : i + 0x800);
      if (cp > 0x10FFFF) throw std::invalid_argument("utf8 reference alphabet exhausted");
      std::string s;
      if (cp < 0x80) {
        s.push_back(static_cast<char>(cp));
      } else if (cp < 0x800) {
        s.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      } else if (cp < 0x10000) {
        s.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      } else {
        s.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        s.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      }
      return Symbol(std::move(s));
    }
    case SerializationMode::u32le:
      return Symbol(std::to_string(i));
  }
  throw std::invalid_argument("unknown serialization mode");
}

InfoBits compressed_bits(const Pattern& p, const Compressor& c, SerializationMode mode) {
  return InfoBits(8.0 * static_cast<double>(c.compress(serialize(p, mode)).size()));
}

double calibration_measure(const Pattern& p, const Compressor& c, SerializationMode mode,
                           CalibrationFlavor flavor) {
  if (flavor == CalibrationFlavor::compressed_bits) return compressed_bits(p, c, mode).value();
  const auto packed = c.compress(serialize(p, mode));
  return modified_shannon_info(
             byte_pattern(std::string_view(reinterpret_cast<const char*>(packed.data()),
                                           packed.size())))
      .value();
}

std::string calibration_key(std::size_t n, std::size_t k, SerializationMode mode,
                            CalibrationFlavor flavor, std::string_view compressor,
                            std::uint64_t seed) {
  std::string mode_id(to_string(mode));
  if (flavor == CalibrationFlavor::mark_of_compressed) mode_id += "+mark";
  return std::to_string(n) + ":" + std::to_string(k) + ":" + mode_id + ":" +
         std::string(compressor) + ":" + std::to_string(seed);
}

std::string CompressionCalibration::key() const {
  return calibration_key(n, k, mode, flavor, compressor, seed);
}

Pattern constant_reference(std::size_t n, SerializationMode mode) {
  return constant_pattern(reference_symbol(0, mode), n);
}

std::vector<Pattern> calibration_references(std::size_t n, std::size_t k, SerializationMode mode,
                                            std::uint64_t seed, std::size_t samples) {
  if (k == 0) throw DegenerateAlphabetError("calibration needs k >= 1");
  std::vector<Symbol> alphabet;
  alphabet.reserve(k);
  for (std::size_t i = 0; i < k; ++i) alphabet.push_back(reference_symbol(i, mode));
  const Alphabet declared(alphabet);

  Rng rng(seed);
  std::vector<Pattern> refs;
  refs.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Symbol> symbols;
    symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) symbols.push_back(alphabet[rng.below(k)]);
    refs.emplace_back(std::move(symbols), declared);
  }
  return refs;
}

CompressionCalibration calibrate(std::size_t n, std::size_t k, const Compressor& c,
                                 SerializationMode mode, std::uint64_t seed,
                                 CalibrationFlavor flavor, std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("calibration needs at least one sample");
  CompressionCalibration cal;
  cal.n = n;
  cal.k = k;
  cal.mode = mode;
  cal.flavor = flavor;
  cal.compressor = c.id();
  cal.samples = samples;
  cal.seed = seed;
  cal.low_bits = calibration_measure(constant_reference(n, mode), c, mode, flavor);

  std::vector<double> highs;
  highs.reserve(samples);
  for (const auto& ref : calibration_references(n, k, mode, seed, samples)) {
    highs.push_back(calibration_measure(ref, c, mode, flavor));
  }
  std::sort(highs.begin(), highs.end());
  // Lower median for even sample counts. A random reference that packs
  // smaller than the constant one is treated as degenerate.
  cal.high_bits = std::max(highs[(samples - 1) / 2], cal.low_bits);
  return cal;
}

Estimate compression_info(const Pattern& p, const CompressionCalibration& cal,
                          const Compressor& c) {
  if (cal.n != p.size() || cal.k != p.k() || cal.compressor != c.id()) {
    throw CalibrationMismatch("calibration " + cal.key() + " does not match pattern (n=" +
                              std::to_string(p.size()) + ", k=" + std::to_string(p.k()) +
                              ", compressor " + c.id() + ")");
  }
  const auto [lo, hi] = info_bounds(p);
  if (cal.degenerate()) return clamp_to_bounds(p, (lo.value() + hi.value()) / 2.0);
  const double measured = calibration_measure(p, c, cal.mode, cal.flavor);
  const double ratio = (measured - cal.low_bits) / (cal.high_bits - cal.low_bits);
  return clamp_to_bounds(p, lo.value() + ratio * (hi.value() - lo.value()));
}

ComplexityOracle compressed_size_oracle(const Compressor& c, SerializationMode mode) {
  return [&c, mode](const Pattern& p) { return compressed_bits(p, c, mode).value(); };
}

Estimate oracle_normalized_info(const Pattern& p, const ComplexityOracle& oracle) {
  const double floor = min_info(p).value();
  if (p.empty()) return clamp_to_bounds(p, 0.0);
  const Pattern reference = constant_pattern(p[0], p.size());
  const double raw = oracle(p) - oracle(reference) + floor;
  return clamp_to_bounds(p, std::max(raw, 0.0));
}

}  // namespace patinfo
