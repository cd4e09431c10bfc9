#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "patinfo/calibration_cache.hpp"
#include "patinfo/compression.hpp"
#include "patinfo/estimators.hpp"

namespace patinfo {

struct Evaluation {
  EstimatorKind kind = EstimatorKind::min;
  Estimate estimate;
  std::optional<std::string> calibration_key;  // compression only
  std::optional<EstimatorKind> winner;         // ensemble only
};

/// Runs any EstimatorKind against a pattern with shared compressor and
/// calibration state. Every result is clamped into [min_info, max_info], and
/// every estimator reports 0 bits for the empty pattern.
class Evaluator {
 public:
  struct Options {
    SerializationMode mode = SerializationMode::byte;
    std::uint64_t calibration_seed = 1;
    CalibrationFlavor flavor = CalibrationFlavor::compressed_bits;
    std::vector<EstimatorKind> ensemble = {EstimatorKind::modified_shannon,
                                           EstimatorKind::compression,
                                           EstimatorKind::oracle_normalized};
  };

  /// Gzip backend, in-memory calibration cache.
  Evaluator();
  explicit Evaluator(Options options);
  Evaluator(std::shared_ptr<const Compressor> compressor, std::shared_ptr<CalibrationCache> cache,
            Options options);

  Evaluation evaluate(EstimatorKind kind, const Pattern& p) const;
  /// Clamped bits only.
  InfoBits operator()(EstimatorKind kind, const Pattern& p) const {
    return evaluate(kind, p).estimate.clamped;
  }

  const Compressor& compressor() const noexcept { return *compressor_; }
  CalibrationCache& cache() const noexcept { return *cache_; }
  const Options& options() const noexcept { return options_; }

 private:
  std::shared_ptr<const Compressor> compressor_;
  std::shared_ptr<CalibrationCache> cache_;
  Options options_;
};

}  // namespace patinfo
