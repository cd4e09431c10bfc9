#include "patinfo/evaluate.hpp"

#include <stdexcept>

namespace patinfo {

Evaluator::Evaluator() : Evaluator(Options{}) {}

Evaluator::Evaluator(Options options)
    : Evaluator(std::make_shared<GzipCompressor>(), std::make_shared<CalibrationCache>(),
                std::move(options)) {}

Evaluator::Evaluator(std::shared_ptr<const Compressor> compressor,
                     std::shared_ptr<CalibrationCache> cache, Options options)
    : compressor_(std::move(compressor)), cache_(std::move(cache)), options_(std::move(options)) {
  if (!compressor_ || !cache_) throw std::invalid_argument("Evaluator needs a compressor and a cache");
  for (auto k : options_.ensemble) {
    if (k == EstimatorKind::ensemble_min) {
      throw std::invalid_argument("an ensemble cannot contain itself");
    }
  }
}

Evaluation Evaluator::evaluate(EstimatorKind kind, const Pattern& p) const {
  Evaluation out;
  out.kind = kind;
  if (p.empty()) {
    out.estimate = {0.0, InfoBits(0.0)};
    return out;
  }
  switch (kind) {
    case EstimatorKind::min:
      out.estimate = clamp_to_bounds(p, min_info(p).value());
      break;
    case EstimatorKind::max:
      out.estimate = clamp_to_bounds(p, max_info(p).value());
      break;
    case EstimatorKind::shannon_classic:
      out.estimate = clamp_to_bounds(p, shannon_classic_info(p).value());
      break;
    case EstimatorKind::modified_shannon:
      out.estimate = clamp_to_bounds(p, modified_shannon_info(p).value());
      break;
    case EstimatorKind::compression: {
      const auto cal = cache_->get_or_calibrate(p.size(), p.k(), *compressor_, options_.mode,
                                                options_.calibration_seed, options_.flavor);
      out.estimate = compression_info(p, cal, *compressor_);
      out.calibration_key = cal.key();
      break;
    }
    case EstimatorKind::oracle_normalized:
      out.estimate =
          oracle_normalized_info(p, compressed_size_oracle(*compressor_, options_.mode));
      break;
    case EstimatorKind::ensemble_min: {
      if (options_.ensemble.empty()) throw std::invalid_argument("ensemble has no members");
      std::optional<Evaluation> best;
      for (auto member : options_.ensemble) {
        Evaluation e = evaluate(member, p);
        if (!best || e.estimate.clamped < best->estimate.clamped) best = std::move(e);
      }
      out.estimate = {best->estimate.clamped.value(), best->estimate.clamped};
      out.winner = best->kind;
      out.calibration_key = best->calibration_key;
      break;
    }
  }
  return out;
}

}  // namespace patinfo
