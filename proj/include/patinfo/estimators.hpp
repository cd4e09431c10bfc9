#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "patinfo/core.hpp"

namespace patinfo {

enum class EstimatorKind {
  min,
  max,
  shannon_classic,
  modified_shannon,
  compression,
  oracle_normalized,
  ensemble_min,
};

/// CLI names: min, max, shannon, mshannon, gzip, oracle, ensemble.
std::string_view to_string(EstimatorKind kind) noexcept;
std::optional<EstimatorKind> parse_estimator_kind(std::string_view name) noexcept;

/// Raised when a non-empty pattern is measured against an empty alphabet.
class DegenerateAlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// log2(n + 1): the information of a constant pattern of length n.
InfoBits min_info(std::size_t n);
InfoBits min_info(const Pattern& p);

/// log2(sum_{i=0}^{n} k^i): the information of a uniformly random pattern.
InfoBits max_info(std::size_t n, std::size_t k);
InfoBits max_info(const Pattern& p);

/// Unigram entropy h = -sum f_rel log2 f_rel in bits per symbol; 0 if empty.
double unigram_entropy(const FrequencyTable& table);

/// log2(sum_{i=0}^{n} c^i) with c = 2^h. Reduces to min_info for constant
/// patterns and to max_info when all k symbols are equally frequent.
InfoBits modified_shannon_info(const Pattern& p);

/// n·h. Throws std::domain_error for the empty pattern.
InfoBits shannon_classic_info(const Pattern& p);

struct InfoBounds {
  InfoBits lower;
  InfoBits upper;
};

/// [min_info(p), max_info(p)].
InfoBounds info_bounds(const Pattern& p);

/// An estimator output before and after clamping into info_bounds.
struct Estimate {
  double raw = 0.0;
  InfoBits clamped;
};

Estimate clamp_to_bounds(const Pattern& p, double raw);

using Estimator = std::function<InfoBits(const Pattern&)>;

struct EnsembleResult {
  InfoBits bits;
  std::size_t winner = 0;  // first method attaining the minimum
};

/// Minimum over `methods`. Throws std::invalid_argument when empty.
EnsembleResult ensemble_min_info(const Pattern& p, std::span<const Estimator> methods);

/// Combinatorial entropy I / (n + 1), in bits per element.
double entropy_hc(InfoBits info, std::size_t n);
double entropy_hc(const Pattern& p, const Estimator& info);

}  // namespace patinfo
