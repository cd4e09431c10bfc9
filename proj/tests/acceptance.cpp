// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "patinfo/compare.hpp"
#include "patinfo/compression.hpp"
#include "patinfo/estimators.hpp"
#include "patinfo/properties.hpp"

using namespace patinfo;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(PATINFO_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Pattern declared(std::string s, std::size_t k) {
  const Pattern p = byte_pattern(s);
  std::vector<Symbol> syms;
  for (std::size_t i = 0; i < k; ++i) syms.emplace_back(std::string(1, static_cast<char>('a' + i)));
  return Pattern(p.symbols(), Alphabet(syms));
}

Outcome ac1() {
  bool ok = true;
  for (std::size_t n : {0, 1, 2, 10, 1000}) {
    ok = ok && std::abs(min_info(n).value() - oracle::min_info(n)) <= 1e-9;
  }
  const auto one = fmt::format("{:.6f}", min_info(1).value());
  const auto thousand = fmt::format("{:.6f}", min_info(1000).value());
  ok = ok && one == "1.000000" && thousand == "9.967226";
  return {ok, fmt::format("min_info(1) = {}, min_info(1000) = {}", one, thousand)};
}

Outcome ac2() {
  const auto r = check_subadditivity([](const Pattern& p) { return min_info(p).value(); }, {}, 0.0);
  return {r.trials == 5 && r.violations == 0,
          fmt::format("{} constant-pattern rows, {} violations at tolerance 0", r.trials,
                      r.violations)};
}

Outcome ac3() {
  double worst = 0;
  std::size_t cases = 0;
  for (std::size_t n = 0; n <= 64; ++n) {
    worst = std::max(worst, std::abs(modified_shannon_info(byte_pattern(std::string(n, 'a'))).value() -
                                     oracle::min_info(n)));
    ++cases;
    for (std::size_t k = 1; k <= 4; ++k) {
      if (n % k != 0) continue;
      std::string s;
      for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('a' + i % k);
      worst = std::max(worst, std::abs(modified_shannon_info(declared(s, k)).value() -
                                       oracle::max_info(n, k)));
      worst = std::max(worst, std::abs(max_info(n, k).value() - oracle::max_info(n, k)));
      ++cases;
    }
  }
  return {worst <= 1e-9, fmt::format("{} cases, worst deviation {:.3e} bits", cases, worst)};
}

Outcome ac4() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t compositions = 0;
  double tightest = INFINITY;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = 1; n <= 12; ++n) {
      std::vector<std::size_t> c(k, 0);
      std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t left) {
        if (i + 1 == k) {
          c[i] = left;
          std::string s;
          for (std::size_t j = 0; j < k; ++j) s += std::string(c[j], static_cast<char>('a' + j));
          const double mark = modified_shannon_info(declared(s, k)).value();
          const double mx = max_info(n, k).value();
          const bool equal = std::all_of(c.begin(), c.end(), [&](std::size_t x) { return x == c[0]; });
          if (equal) {
            ok = ok && std::abs(mark - mx) <= 1e-9;
          } else {
            ok = ok && mx - mark > 1e-9;
            tightest = std::min(tightest, mx - mark);
          }
          ++compositions;
          return;
        }
        for (std::size_t x = 0; x <= left; ++x) {
          c[i] = x;
          walk(i + 1, left - x);
        }
      };
      walk(0, n);
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 1.0;
  return {ok, fmt::format("{} compositions, smallest strict gap {:.6f} bits, {:.3f} s",
                          compositions, tightest, secs)};
}

Outcome ac5() {
  const auto t0 = Clock::now();
  std::string s;
  for (int i = 0; i < 10000; ++i) s += (i % 2) ? 'b' : 'a';
  const double per = modified_shannon_info(byte_pattern(s)).value() / 10000.0;
  const double secs = seconds_since(t0);
  return {std::abs(per - 1.0) <= 0.001 && secs < 1.0,
          fmt::format("I_mark/n = {:.6f}, {:.3f} s", per, secs)};
}

Outcome ac6() {
  const double v = max_info(1000000, 256).value();
  const double ref = static_cast<double>(oracle::log2_geometric_closed(oracle::Big(8), 1000000));
  const double rel = std::abs(v - ref) / ref;
  double worst = 0;
  for (std::size_t k = 2; k <= 256; k *= 2) {
    const auto bits = static_cast<std::size_t>(std::log2(double(k)));
    for (std::size_t n = 0; (n + 1) * bits <= 512; ++n) {
      worst = std::max(worst, std::abs(max_info(n, k).value() - oracle::max_info(n, k)));
    }
  }
  return {std::isfinite(v) && rel <= 1e-6 && worst <= 1e-9,
          fmt::format("max_info(1e6, 256) = {:.6f}, relative error {:.2e}; naive-sum sweep worst {:.2e}",
                      v, rel, worst)};
}

Outcome ac7() {
  const double h0 = entropy_hc(min_info(0), 0), h1 = entropy_hc(min_info(1), 1),
               h2 = entropy_hc(min_info(2), 2);
  bool ok = h0 == 0.0 && h1 == 0.5 && std::abs(h2 - std::log2(3.0) / 3.0) <= 1e-12;
  double prev = h2;
  for (std::size_t n = 3; n <= 10000; ++n) {
    const double h = entropy_hc(min_info(n), n);
    ok = ok && h < prev;
    prev = h;
  }
  ok = ok && prev < 0.002;
  return {ok, fmt::format("H_C(0..2) = {}, {}, {:.6f}; H_C(10^4) = {:.6f}", h0, h1, h2, prev)};
}

Outcome ac8() {
  const GzipCompressor gz;
  const auto oracle_fn = compressed_size_oracle(gz, SerializationMode::byte);
  bool ok = true;
  for (std::size_t n : {1, 10, 1000}) {
    const Pattern c = byte_pattern(std::string(n, 'c'));
    ok = ok && oracle_normalized_info(c, oracle_fn).clamped == min_info(n);
  }
  return {ok, "constant patterns n = 1, 10, 1000 map exactly to min_info (" + gz.id() + ")"};
}

Outcome ac9() {
  const GzipCompressor gz;
  const auto cal = calibrate(1000, 2, gz, SerializationMode::byte, 1);
  const Pattern c = constant_reference(1000, SerializationMode::byte);
  const Pattern c2(c.symbols(), Alphabet(c.alphabet().members()).widened(2));
  const double low = compression_info(c2, cal, gz).clamped.value();
  const double mx = max_info(1000, 2).value();
  // The reference whose compressed size is the calibration median.
  std::optional<double> defining;
  double spread = 0;
  for (const auto& ref : calibration_references(1000, 2, SerializationMode::byte, 1)) {
    const double rel = std::abs(compression_info(ref, cal, gz).clamped.value() - mx) / mx;
    spread = std::max(spread, rel);
    if (!defining && compressed_bits(ref, gz, SerializationMode::byte).value() == cal.high_bits) {
      defining = rel;
    }
  }
  const bool ok = std::abs(low - min_info(1000).value()) <= 1e-9 && defining && *defining <= 0.02;
  return {ok, fmt::format("constant -> {:.6f}; median reference off max_info by {:.2f}%; "
                          "all {} samples within {:.2f}%",
                          low, defining ? 100 * *defining : NAN, kCalibrationSamples,
                          100 * spread)};
}

Outcome ac10() {
  const CompareResult r = compare_corpus(PATINFO_DATA_DIR, Evaluator(Evaluator::Options{
                                                               .mode = SerializationMode::u32le}));
  std::string detail;
  for (const auto& c : r.checks) detail += (detail.empty() ? "" : "; ") + c.id + (c.passed ? " ok" : " FAILED");
  return {r.all_passed() && r.checks.size() == 4, detail};
}

Outcome ac11() {
  const auto t0 = Clock::now();
  const Run r = run_cli("check --estimators min,max,mshannon --trials 1000 --seed 0 --format csv");
  const double secs = seconds_since(t0);
  std::string failing;
  std::size_t line_start = 0;
  while (line_start < r.out.size()) {
    const auto end = r.out.find('\n', line_start);
    const std::string line = r.out.substr(line_start, end - line_start);
    if (line.find(",assert,") != std::string::npos && line.ends_with(",false")) {
      failing += (failing.empty() ? "" : ", ") + line.substr(0, line.find(",assert,"));
    }
    line_start = end == std::string::npos ? r.out.size() : end + 1;
  }
  return {r.code == 0 && secs < 30.0,
          fmt::format("exit {}, {:.2f} s{}", r.code, secs,
                      failing.empty() ? "" : "; failing ASSERT: " + failing)};
}

Outcome ac12() {
  const fs::path cache = fs::temp_directory_path() / "patinfo_acceptance_cache.json";
  fs::remove(cache);
  ::setenv("PATINFO_CACHE", cache.c_str(), 1);
  const std::string base = "compare --seed 1 --corpus " + std::string(PATINFO_DATA_DIR);
  // First run computes calibrations, second reads them back from the cache.
  const Run csv1 = run_cli(base + " --format csv");
  const Run csv2 = run_cli(base + " --format csv");
  const Run json1 = run_cli(base + " --format json");
  const Run json2 = run_cli(base + " --format json");
  ::unsetenv("PATINFO_CACHE");
  fs::remove(cache);
  const bool ok = csv1.code == 0 && !csv1.out.empty() && csv1.out == csv2.out &&
                  !json1.out.empty() && json1.out == json2.out;
  return {ok, fmt::format("csv {} bytes, json {} bytes, identical: {}", csv1.out.size(),
                          json1.out.size(), csv1.out == csv2.out && json1.out == json2.out)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"min_info fixtures", ac1},
      {"constant-pattern subadditivity rows", ac2},
      {"modified Shannon reductions", ac3},
      {"maximization over count compositions", ac4},
      {"convergence to classic Shannon", ac5},
      {"numerical stability of max_info", ac6},
      {"combinatorial entropy of constant patterns", ac7},
      {"oracle-normalized constant endpoint", ac8},
      {"compression calibration endpoints", ac9},
      {"fixture corpus orderings", ac10},
      {"property suite exit status", ac11},
      {"compare determinism", ac12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.ok ? 0 : 1;
    fmt::print("[{}] AC{:<2} {}: {}\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
