#include "patinfo/compare.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace patinfo {

namespace fs = std::filesystem;
using nlohmann::json;

bool CompareResult::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const OrderingCheck& c) { return c.passed; });
}

namespace {

constexpr EstimatorKind kColumns[] = {EstimatorKind::max, EstimatorKind::modified_shannon,
                                      EstimatorKind::compression,
                                      EstimatorKind::oracle_normalized};

std::string read_fixture(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing corpus fixture " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const CompareRow* find_row(const CompareResult& r, std::string_view name) {
  for (const auto& row : r.rows) {
    if (row.name == name) return &row;
  }
  return nullptr;
}

}  // namespace

CompareResult compare_corpus(const fs::path& dir, const Evaluator& evaluator, TokenMode mode) {
  CompareResult result;
  for (auto name : kCorpusRows) {
    const std::string file = std::string(name) + ".txt";
    const Pattern p = tokenize(read_fixture(dir / file), mode);
    CompareRow row;
    row.name = std::string(name);
    row.report = analyze(file, mode, p, kColumns, evaluator);
    row.max_bits = row.report.estimates[0].clamped_bits;
    row.shannon_bits = row.report.estimates[1].clamped_bits;
    row.compression_bits = row.report.estimates[2].clamped_bits;
    row.oracle_bits = row.report.estimates[3].clamped_bits;
    result.rows.push_back(std::move(row));
  }

  const auto& fib = *find_row(result, "fibonacci");
  const auto& english = *find_row(result, "english");
  const auto& structured = *find_row(result, "structured");

  result.checks.push_back({"structured_t_below_s", "structured: T < S",
                           structured.compression_bits < structured.shannon_bits});
  const double rel = std::abs(english.shannon_bits - english.compression_bits) /
                     english.shannon_bits;
  result.checks.push_back(
      {"english_s_t_close", fmt::format("english: |S - T| / S = {:.6f} <= {}", rel,
                                        kEnglishRelativeTolerance),
       rel <= kEnglishRelativeTolerance});
  bool bounded = true;
  for (const auto& row : result.rows) {
    for (double v : {row.shannon_bits, row.compression_bits, row.oracle_bits}) {
      bounded = bounded && v <= row.max_bits + 1e-9;
    }
  }
  result.checks.push_back({"all_below_m", "every row: S, T, K <= M", bounded});
  result.checks.push_back(
      {"fibonacci_t_not_above_s", "fibonacci: T <= S", fib.compression_bits <= fib.shannon_bits});
  return result;
}

void write_compare_table(std::ostream& out, const CompareResult& result) {
  fmt::print(out, "{:<11}  {:>6}  {:>5}  {:>14}  {:>14}  {:>14}  {:>14}\n", "pattern", "n", "k",
             "M", "S", "T", "K");
  for (const auto& row : result.rows) {
    fmt::print(out, "{:<11}  {:>6}  {:>5}  {:>14}  {:>14}  {:>14}  {:>14}\n", row.name,
               row.report.n, row.report.k_inferred, format_bits(row.max_bits),
               format_bits(row.shannon_bits), format_bits(row.compression_bits),
               format_bits(row.oracle_bits));
  }
  out << '\n';
  for (const auto& c : result.checks) {
    fmt::print(out, "[{}] {}\n", c.passed ? "PASS" : "FAIL", c.description);
  }
}

void write_compare_csv(std::ostream& out, const CompareResult& result) {
  out << "pattern,n,k,M,S,T,K\n";
  for (const auto& row : result.rows) {
    fmt::print(out, "{},{},{},{},{},{},{}\n", row.name, row.report.n, row.report.k_inferred,
               format_bits(row.max_bits), format_bits(row.shannon_bits),
               format_bits(row.compression_bits), format_bits(row.oracle_bits));
  }
  out << "check,passed\n";
  for (const auto& c : result.checks) {
    fmt::print(out, "{},{}\n", c.id, c.passed ? "true" : "false");
  }
}

json compare_document(const CompareResult& result) {
  std::vector<EstimateReport> reports;
  for (const auto& row : result.rows) reports.push_back(row.report);
  json doc = report_document(reports, {});
  doc["rows"] = json::array();
  for (const auto& row : result.rows) {
    doc["rows"].push_back({{"name", row.name},
                           {"M", row.max_bits},
                           {"S", row.shannon_bits},
                           {"T", row.compression_bits},
                           {"K", row.oracle_bits}});
  }
  doc["checks"] = json::array();
  for (const auto& c : result.checks) {
    doc["checks"].push_back({{"id", c.id}, {"description", c.description}, {"passed", c.passed}});
  }
  return doc;
}

std::string compare_svg(const CompareResult& result) {
  constexpr double kWidth = 720, kHeight = 360, kLeft = 60, kBottom = 40, kTop = 30;
  constexpr const char* kColors[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52"};
  constexpr const char* kLabels[] = {"M", "S", "T", "K"};

  double top = 1.0;
  for (const auto& row : result.rows) top = std::max(top, row.max_bits);
  const double plot_h = kHeight - kBottom - kTop;
  const double group_w = (kWidth - kLeft - 20) / static_cast<double>(std::max<std::size_t>(result.rows.size(), 1));
  const double bar_w = group_w / 5.0;

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight);
  svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"black\"/>\n",
                     kLeft, kTop, kHeight - kBottom);
  svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n",
                     kLeft, kHeight - kBottom, kWidth - 20);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.0f}</text>\n", kLeft - 4,
                     kTop + 4, top);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">0</text>\n", kLeft - 4,
                     kHeight - kBottom + 4);

  for (std::size_t g = 0; g < result.rows.size(); ++g) {
    const auto& row = result.rows[g];
    const double values[] = {row.max_bits, row.shannon_bits, row.compression_bits, row.oracle_bits};
    const double x0 = kLeft + static_cast<double>(g) * group_w + bar_w / 2;
    for (std::size_t b = 0; b < 4; ++b) {
      const double h = plot_h * values[b] / top;
      svg += fmt::format(
          "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"{}\">"
          "<title>{} {}: {}</title></rect>\n",
          x0 + static_cast<double>(b) * bar_w, kHeight - kBottom - h, bar_w * 0.9, h, kColors[b],
          row.name, kLabels[b], format_bits(values[b]));
    }
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
                       x0 + 2 * bar_w, kHeight - kBottom + 16, row.name);
  }
  for (std::size_t b = 0; b < 4; ++b) {
    const double x = kLeft + 10 + static_cast<double>(b) * 50;
    svg += fmt::format("<rect x=\"{:.1f}\" y=\"8\" width=\"10\" height=\"10\" fill=\"{}\"/>"
                       "<text x=\"{:.1f}\" y=\"17\">{}</text>\n",
                       x, kColors[b], x + 14, kLabels[b]);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace patinfo
