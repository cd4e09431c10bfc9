#include "patinfo/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "patinfo/numeric.hpp"

namespace patinfo {

std::string_view to_string(EstimatorKind kind) noexcept {
  switch (kind) {
    case EstimatorKind::min: return "min";
    case EstimatorKind::max: return "max";
    case EstimatorKind::shannon_classic: return "shannon";
    case EstimatorKind::modified_shannon: return "mshannon";
    case EstimatorKind::compression: return "gzip";
    case EstimatorKind::oracle_normalized: return "oracle";
    case EstimatorKind::ensemble_min: return "ensemble";
  }
  return "min";
}

std::optional<EstimatorKind> parse_estimator_kind(std::string_view name) noexcept {
  for (auto k : {EstimatorKind::min, EstimatorKind::max, EstimatorKind::shannon_classic,
                 EstimatorKind::modified_shannon, EstimatorKind::compression,
                 EstimatorKind::oracle_normalized, EstimatorKind::ensemble_min}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

InfoBits min_info(std::size_t n) {
  return InfoBits(std::log2(static_cast<double>(n) + 1.0));
}

InfoBits min_info(const Pattern& p) { return min_info(p.size()); }

InfoBits max_info(std::size_t n, std::size_t k) {
  if (n == 0) return InfoBits(0.0);
  if (k == 0) {
    throw DegenerateAlphabetError("max_info: empty alphabet for a pattern of length " +
                                  std::to_string(n));
  }
  const long double log2k = std::log2(static_cast<long double>(k));
  return InfoBits(static_cast<double>(log2_geometric_sum(log2k, n)));
}

InfoBits max_info(const Pattern& p) { return max_info(p.size(), p.k()); }

double unigram_entropy(const FrequencyTable& table) {
  if (table.n == 0) return 0.0;
  // h = log2 n - (1/n) sum c log2 c keeps h exactly 0 for a single symbol.
  const long double n = static_cast<long double>(table.n);
  long double acc = 0;
  for (const auto& [s, c] : table.counts) {
    const long double cl = static_cast<long double>(c);
    acc += cl * std::log2(cl);
  }
  const long double h = std::log2(n) - acc / n;
  return static_cast<double>(std::max<long double>(h, 0));
}

InfoBits modified_shannon_info(const Pattern& p) {
  if (p.empty()) return InfoBits(0.0);
  const auto table = frequency_table(p);
  if (table.counts.size() == 1) return min_info(p.size());
  // Uniform counts must reproduce max_info bit for bit.
  const auto first = table.counts.begin()->second;
  const bool uniform = std::all_of(table.counts.begin(), table.counts.end(),
                                   [first](const auto& kv) { return kv.second == first; });
  const long double h = uniform ? std::log2(static_cast<long double>(table.counts.size()))
                                : static_cast<long double>(unigram_entropy(table));
  return InfoBits(static_cast<double>(log2_geometric_sum(h, p.size())));
}

InfoBits shannon_classic_info(const Pattern& p) {
  if (p.empty()) throw std::domain_error("classic Shannon information is undefined for n = 0");
  return InfoBits(static_cast<double>(p.size()) * unigram_entropy(frequency_table(p)));
}

InfoBounds info_bounds(const Pattern& p) { return {min_info(p), max_info(p)}; }

Estimate clamp_to_bounds(const Pattern& p, double raw) {
  const auto [lo, hi] = info_bounds(p);
  if (std::isnan(raw)) throw std::domain_error("estimator produced NaN");
  return {raw, InfoBits(std::clamp(raw, lo.value(), hi.value()))};
}

EnsembleResult ensemble_min_info(const Pattern& p, std::span<const Estimator> methods) {
  if (methods.empty()) throw std::invalid_argument("ensemble_min_info: no methods given");
  EnsembleResult best{methods[0](p), 0};
  for (std::size_t i = 1; i < methods.size(); ++i) {
    const InfoBits v = methods[i](p);
    if (v < best.bits) best = {v, i};
  }
  return best;
}

double entropy_hc(InfoBits info, std::size_t n) {
  return info.value() / (static_cast<double>(n) + 1.0);
}

double entropy_hc(const Pattern& p, const Estimator& info) {
  return entropy_hc(info(p), p.size());
}

}  // namespace patinfo
