#include "patinfo/report.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace patinfo {

using nlohmann::json;

EstimateReport analyze(std::string source, TokenMode mode, const Pattern& p,
                       std::span<const EstimatorKind> kinds, const Evaluator& evaluator) {
  EstimateReport r;
  r.source = std::move(source);
  r.tokenization_mode = std::string(to_string(mode));
  r.n = p.size();
  r.k_inferred = p.alphabet().members().size();
  if (p.alphabet().unnamed() > 0) r.k_declared = p.k();

  bool compressed = false;
  for (auto kind : kinds) {
    const Evaluation e = evaluator.evaluate(kind, p);
    EstimateRecord rec;
    rec.estimator = std::string(to_string(kind));
    rec.raw_bits = e.estimate.raw;
    rec.clamped_bits = e.estimate.clamped.value();
    rec.entropy_hc = entropy_hc(e.estimate.clamped, p.size());
    if (e.winner) rec.winner = std::string(to_string(*e.winner));
    if (e.calibration_key && !r.calibration_key) r.calibration_key = e.calibration_key;
    compressed = compressed || kind == EstimatorKind::compression ||
                 kind == EstimatorKind::oracle_normalized || kind == EstimatorKind::ensemble_min;
    r.estimates.push_back(std::move(rec));
  }
  if (compressed) r.compressor = evaluator.compressor().id();
  return r;
}

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const EstimateRecord& r) {
  j = json{{"estimator", r.estimator},
           {"raw_bits", r.raw_bits},
           {"clamped_bits", r.clamped_bits},
           {"entropy_hc", r.entropy_hc}};
  if (r.winner) j["winner"] = *r.winner;
}

void from_json(const json& j, EstimateRecord& r) {
  j.at("estimator").get_to(r.estimator);
  j.at("raw_bits").get_to(r.raw_bits);
  j.at("clamped_bits").get_to(r.clamped_bits);
  j.at("entropy_hc").get_to(r.entropy_hc);
  r.winner = optional_from<std::string>(j, "winner");
}

void to_json(json& j, const EstimateReport& r) {
  j = json{{"source", r.source},
           {"tokenization_mode", r.tokenization_mode},
           {"n", r.n},
           {"k_inferred", r.k_inferred},
           {"k_declared", optional_json(r.k_declared)},
           {"estimates", r.estimates},
           {"compressor", optional_json(r.compressor)},
           {"calibration_key", optional_json(r.calibration_key)}};
}

void from_json(const json& j, EstimateReport& r) {
  j.at("source").get_to(r.source);
  j.at("tokenization_mode").get_to(r.tokenization_mode);
  j.at("n").get_to(r.n);
  j.at("k_inferred").get_to(r.k_inferred);
  r.k_declared = optional_from<std::size_t>(j, "k_declared");
  j.at("estimates").get_to(r.estimates);
  r.compressor = optional_from<std::string>(j, "compressor");
  r.calibration_key = optional_from<std::string>(j, "calibration_key");
}

void to_json(json& j, const PropertyReport& r) {
  j = json{{"property", to_string(r.property)},
           {"estimator", r.estimator},
           {"trials", r.trials},
           {"violations", r.violations},
           {"worst_violation_bits", r.worst_violation_bits},
           {"tolerance", r.tolerance},
           {"seed", r.seed},
           {"property_class", to_string(r.property_class)},
           {"passed", r.passed()}};
}

void from_json(const json& j, PropertyReport& r) {
  const auto id = parse_property_id(j.at("property").get<std::string>());
  if (!id) throw std::invalid_argument("unknown property id");
  r.property = *id;
  j.at("estimator").get_to(r.estimator);
  j.at("trials").get_to(r.trials);
  j.at("violations").get_to(r.violations);
  j.at("worst_violation_bits").get_to(r.worst_violation_bits);
  j.at("tolerance").get_to(r.tolerance);
  j.at("seed").get_to(r.seed);
  r.property_class = j.at("property_class").get<std::string>() == "assert"
                         ? PropertyClass::assert_class
                         : PropertyClass::observe_class;
}

json report_document(std::span<const EstimateReport> reports,
                     std::span<const PropertyReport> property_reports) {
  json doc = json::object();
  doc["reports"] = json::array();
  for (const auto& r : reports) doc["reports"].push_back(r);
  doc["property_reports"] = json::array();
  for (const auto& r : property_reports) doc["property_reports"].push_back(r);
  return doc;
}

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_bits(double v) { return fmt::format("{:.6f}", v); }

namespace {

// Quotes a CSV field when it holds a separator, quote or newline.
std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string k_declared_text(const EstimateReport& r) {
  return r.k_declared ? std::to_string(*r.k_declared) : std::string();
}

}  // namespace

void write_csv(std::ostream& out, std::span<const EstimateReport> reports) {
  out << "source,tokenization_mode,n,k_inferred,k_declared,estimator,raw_bits,clamped_bits,"
         "entropy_hc,winner\n";
  for (const auto& r : reports) {
    for (const auto& e : r.estimates) {
      fmt::print(out, "{},{},{},{},{},{},{},{},{},{}\n", csv_field(r.source), r.tokenization_mode,
                 r.n, r.k_inferred, k_declared_text(r), e.estimator, format_bits(e.raw_bits),
                 format_bits(e.clamped_bits), format_bits(e.entropy_hc), e.winner.value_or(""));
    }
  }
}

void write_table(std::ostream& out, std::span<const EstimateReport> reports) {
  std::size_t width = 6;
  for (const auto& r : reports) width = std::max(width, r.source.size());
  fmt::print(out, "{:<{}}  {:<5}  {:>8}  {:>5}  {:<9}  {:>16}  {:>16}  {:>10}\n", "source", width,
             "mode", "n", "k", "estimator", "raw_bits", "clamped_bits", "entropy_hc");
  for (const auto& r : reports) {
    const std::string k = r.k_declared ? fmt::format("{}/{}", r.k_inferred, *r.k_declared)
                                       : std::to_string(r.k_inferred);
    for (const auto& e : r.estimates) {
      fmt::print(out, "{:<{}}  {:<5}  {:>8}  {:>5}  {:<9}  {:>16}  {:>16}  {:>10}\n", r.source,
                 width, r.tokenization_mode, r.n, k, e.estimator, format_bits(e.raw_bits),
                 format_bits(e.clamped_bits), format_bits(e.entropy_hc));
    }
  }
}

void write_property_csv(std::ostream& out, std::span<const PropertyReport> reports) {
  out << "property,estimator,property_class,trials,violations,worst_violation_bits,tolerance,"
         "seed,passed\n";
  for (const auto& r : reports) {
    fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", to_string(r.property), r.estimator,
               to_string(r.property_class), r.trials, r.violations,
               format_bits(r.worst_violation_bits), fmt::format("{:g}", r.tolerance), r.seed,
               r.passed() ? "true" : "false");
  }
}

void write_property_table(std::ostream& out, std::span<const PropertyReport> reports) {
  fmt::print(out, "{:<15}  {:<9}  {:<7}  {:>6}  {:>10}  {:>14}  {:>9}  {}\n", "property",
             "estimator", "class", "trials", "violations", "worst_bits", "tolerance", "result");
  for (const auto& r : reports) {
    const char* verdict = r.passed() ? "ok"
                          : r.property_class == PropertyClass::assert_class ? "FAIL"
                                                                            : "observed";
    fmt::print(out, "{:<15}  {:<9}  {:<7}  {:>6}  {:>10}  {:>14}  {:>9}  {}\n",
               to_string(r.property), r.estimator, to_string(r.property_class), r.trials,
               r.violations, format_bits(r.worst_violation_bits),
               fmt::format("{:g}", r.tolerance), verdict);
  }
}

}  // namespace patinfo
