#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "patinfo/core.hpp"
#include "patinfo/tokenize.hpp"

namespace patinfo {

/// Seeded PRNG with platform-independent derived draws. The engine is
/// std::mt19937_64 (fully specified by the standard); bounded integers and
/// unit reals are derived here because the std distributions are not.
class Rng {
 public:
  static constexpr std::string_view algorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), unbiased. `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind {
  constant,
  uniform_random,
  markov,
  fibonacci_digits,
  structured_circles,
  redundant_repeat,
  redundant_random,
  english_text_file,
};

std::string_view to_string(GeneratorKind kind) noexcept;
/// Accepts the enum names plus the short CLI aliases (fib, circles, repeat,
/// uniform, redundant, file).
std::optional<GeneratorKind> parse_generator_kind(std::string_view name) noexcept;

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::constant;
  std::size_t length = 0;
  std::size_t alphabet_size = 2;
  std::uint64_t seed = 0;

  std::optional<std::string> symbol;                // constant
  std::vector<std::vector<double>> transition;      // markov, row-stochastic
  std::optional<Pattern> base;                      // redundant_repeat
  std::size_t repeats = 1;                          // redundant_repeat
  std::size_t width = 40;                           // structured_circles
  std::size_t height = 25;
  std::size_t ring_step = 3;
  std::size_t ring_thickness = 1;
  double copy_probability = 0.3;                    // redundant_random
  std::filesystem::path file;                       // english_text_file
  TokenMode file_mode = TokenMode::chr;
};

/// Symbol i of a generated k-symbol alphabet: "0".."9","a".."z","A".."Z" for
/// k <= 62, otherwise the raw byte i (k <= 256).
Symbol generator_symbol(std::size_t i, std::size_t k);
Alphabet generator_alphabet(std::size_t k);

/// Deterministic pattern for `spec`. Throws std::invalid_argument for an
/// invalid spec and std::runtime_error for an unreadable file.
///
/// Length handling: structured_circles always yields width·height symbols and
/// redundant_repeat yields |base|·repeats; a non-zero `length` must match.
/// english_text_file truncates to `length` when it is non-zero.
Pattern generate(const GeneratorSpec& spec);

/// Decimal digits of 0, 1, 1, 2, 3, 5, 8, 13, ... concatenated, first n kept.
std::string fibonacci_digits(std::size_t n);

}  // namespace patinfo
