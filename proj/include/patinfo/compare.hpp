#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "patinfo/evaluate.hpp"
#include "patinfo/report.hpp"

namespace patinfo {

/// Fixture files read by compare_corpus, as "<name>.txt" in the corpus dir.
inline constexpr std::string_view kCorpusRows[] = {"fibonacci", "english", "random", "structured"};

/// One fixture measured four ways: M = max_info, S = modified Shannon,
/// T = calibrated gzip, K = oracle-normalized gzip (all clamped bits).
struct CompareRow {
  std::string name;
  EstimateReport report;
  double max_bits = 0.0;
  double shannon_bits = 0.0;
  double compression_bits = 0.0;
  double oracle_bits = 0.0;
};

struct OrderingCheck {
  std::string id;
  std::string description;
  bool passed = false;
};

struct CompareResult {
  std::vector<CompareRow> rows;
  std::vector<OrderingCheck> checks;

  bool all_passed() const noexcept;
};

/// English rows may differ between S and T by this fraction of S.
inline constexpr double kEnglishRelativeTolerance = 0.25;

/// Throws std::runtime_error naming the first missing fixture.
CompareResult compare_corpus(const std::filesystem::path& dir, const Evaluator& evaluator,
                             TokenMode mode = TokenMode::token);

void write_compare_table(std::ostream& out, const CompareResult& result);
void write_compare_csv(std::ostream& out, const CompareResult& result);
/// report_document plus "rows" and "checks" arrays.
nlohmann::json compare_document(const CompareResult& result);
/// Grouped bar chart, one group per row, self-contained SVG text.
std::string compare_svg(const CompareResult& result);

}  // namespace patinfo
