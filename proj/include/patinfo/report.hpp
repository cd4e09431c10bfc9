#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "patinfo/core.hpp"
#include "patinfo/evaluate.hpp"
#include "patinfo/properties.hpp"
#include "patinfo/tokenize.hpp"

namespace patinfo {

struct EstimateRecord {
  std::string estimator;
  double raw_bits = 0.0;
  double clamped_bits = 0.0;
  double entropy_hc = 0.0;  // clamped_bits / (n + 1)
  std::optional<std::string> winner;

  friend bool operator==(const EstimateRecord&, const EstimateRecord&) = default;
};

struct EstimateReport {
  std::string source;
  std::string tokenization_mode;
  std::size_t n = 0;
  std::size_t k_inferred = 0;
  std::optional<std::size_t> k_declared;
  std::vector<EstimateRecord> estimates;
  std::optional<std::string> compressor;
  std::optional<std::string> calibration_key;

  friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

/// Measures `p` with every estimator in `kinds`, in order.
EstimateReport analyze(std::string source, TokenMode mode, const Pattern& p,
                       std::span<const EstimatorKind> kinds, const Evaluator& evaluator);

void to_json(nlohmann::json& j, const EstimateRecord& r);
void from_json(const nlohmann::json& j, EstimateRecord& r);
void to_json(nlohmann::json& j, const EstimateReport& r);
void from_json(const nlohmann::json& j, EstimateReport& r);
void to_json(nlohmann::json& j, const PropertyReport& r);
void from_json(const nlohmann::json& j, PropertyReport& r);

/// {"reports": [...], "property_reports": [...]}
nlohmann::json report_document(std::span<const EstimateReport> reports,
                               std::span<const PropertyReport> property_reports);

enum class OutputFormat { table, csv, json };
std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

/// Fixed six-decimal rendering used by table and CSV output.
std::string format_bits(double v);

/// One row per (report, estimator).
void write_csv(std::ostream& out, std::span<const EstimateReport> reports);
void write_table(std::ostream& out, std::span<const EstimateReport> reports);
void write_property_csv(std::ostream& out, std::span<const PropertyReport> reports);
void write_property_table(std::ostream& out, std::span<const PropertyReport> reports);

}  // namespace patinfo
