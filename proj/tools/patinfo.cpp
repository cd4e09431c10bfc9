// patinfo: information content and combinatorial entropy of finite patterns.

#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "patinfo/calibration_cache.hpp"
#include "patinfo/compare.hpp"
#include "patinfo/evaluate.hpp"
#include "patinfo/generators.hpp"
#include "patinfo/properties.hpp"
#include "patinfo/report.hpp"
#include "patinfo/tokenize.hpp"

namespace {

using namespace patinfo;

constexpr int kExitOk = 0;
constexpr int kExitAssertFailed = 1;
constexpr int kExitUsage = 2;

/// Usage or input problem; reported on stderr with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<EstimatorKind> parse_estimators(const std::string& list) {
  std::vector<EstimatorKind> out;
  for (const auto& name : split(list, ',')) {
    const auto k = parse_estimator_kind(name);
    if (!k) throw UsageError("unknown estimator '" + name + "'");
    out.push_back(*k);
  }
  if (out.empty()) throw UsageError("no estimators given");
  return out;
}

std::vector<PropertyId> parse_properties(const std::string& list) {
  std::vector<PropertyId> out;
  for (const auto& name : split(list, ',')) {
    const auto p = parse_property_id(name);
    if (!p) throw UsageError("unknown property '" + name + "'");
    out.push_back(*p);
  }
  if (out.empty()) throw UsageError("no properties given");
  return out;
}

OutputFormat parse_format(const std::string& name) {
  const auto f = parse_output_format(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

TokenMode parse_mode(const std::string& name) {
  const auto m = parse_token_mode(name);
  if (!m) throw UsageError("unknown tokenization mode '" + name + "'");
  return *m;
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

void flush_cache(const CalibrationCache& cache) {
  try {
    cache.flush();
  } catch (const std::exception& e) {
    std::cerr << "patinfo: warning: " << e.what() << '\n';
  }
}

struct AnalyzeArgs {
  std::string mode = "byte";
  std::string estimators = "min,max,mshannon,gzip";
  std::size_t alphabet_size = 0;
  std::string format = "table";
  std::uint64_t seed = 1;
  std::vector<std::string> files;
};

int run_analyze(const AnalyzeArgs& args) {
  const TokenMode mode = parse_mode(args.mode);
  const auto kinds = parse_estimators(args.estimators);
  const OutputFormat format = parse_format(args.format);
  const std::vector<std::string> files = args.files.empty() ? std::vector<std::string>{"-"} : args.files;

  std::vector<std::string> inputs;
  for (const auto& f : files) inputs.push_back(read_input(f));

  auto cache = std::make_shared<CalibrationCache>(CalibrationCache::default_path());
  Evaluator::Options options;
  options.mode = default_serialization(mode);
  options.calibration_seed = args.seed;
  const Evaluator evaluator(std::make_shared<GzipCompressor>(), cache, options);

  std::vector<Pattern> patterns;
  for (const auto& text : inputs) {
    Pattern p = tokenize(text, mode);
    if (args.alphabet_size > 0) {
      p = Pattern(p.symbols(), p.alphabet().widened(args.alphabet_size));
    }
    patterns.push_back(std::move(p));
  }

  std::vector<std::future<EstimateReport>> jobs;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return analyze(files[i] == "-" ? "<stdin>" : files[i], mode, patterns[i], kinds, evaluator);
    }));
  }
  std::vector<EstimateReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  flush_cache(*cache);

  switch (format) {
    case OutputFormat::table: write_table(std::cout, reports); break;
    case OutputFormat::csv: write_csv(std::cout, reports); break;
    case OutputFormat::json: std::cout << report_document(reports, {}).dump(2) << '\n'; break;
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string kind;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  std::size_t alphabet_size = 2;
  std::string symbol;
  std::string transition;
  std::string base;
  std::size_t repeats = 1;
  std::size_t width = 40;
  std::size_t height = 25;
  std::size_t ring_step = 3;
  std::size_t ring_thickness = 1;
  double copy_probability = 0.3;
  std::string file;
  std::string file_mode = "char";
  std::string separator;
  std::size_t wrap = 0;
  std::string output;
};

std::vector<std::vector<double>> parse_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<double> values;
    for (const auto& cell : split(row, ',')) {
      try {
        values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw UsageError("bad transition entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

int run_generate(const GenerateArgs& args) {
  GeneratorSpec spec;
  const auto kind = parse_generator_kind(args.kind);
  if (!kind) throw UsageError("unknown generator kind '" + args.kind + "'");
  spec.kind = *kind;
  spec.length = args.length;
  spec.seed = args.seed;
  spec.alphabet_size = args.alphabet_size;
  if (!args.symbol.empty()) spec.symbol = args.symbol;
  if (!args.transition.empty()) spec.transition = parse_matrix(args.transition);
  if (spec.kind == GeneratorKind::redundant_repeat) spec.base = byte_pattern(args.base);
  spec.repeats = args.repeats;
  spec.width = args.width;
  spec.height = args.height;
  spec.ring_step = args.ring_step;
  spec.ring_thickness = args.ring_thickness;
  spec.copy_probability = args.copy_probability;
  spec.file = args.file;
  spec.file_mode = parse_mode(args.file_mode);

  Pattern p;
  try {
    p = generate(spec);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }

  std::string text;
  for (std::size_t i = 0; i < p.size(); ++i) {
    text += p[i].value;
    const bool line_end = args.wrap > 0 && (i + 1) % args.wrap == 0;
    if (line_end) text += '\n';
    else if (i + 1 < p.size()) text += args.separator;
  }
  if (args.wrap > 0 && !p.empty() && p.size() % args.wrap != 0) text += '\n';

  if (args.output.empty() || args.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + args.output);
    out << text;
  }
  return kExitOk;
}

struct CompareArgs {
  std::string corpus;
  std::string format = "table";
  std::string svg;
  std::string mode = "token";
  std::uint64_t seed = 1;
};

int run_compare(const CompareArgs& args) {
  const OutputFormat format = parse_format(args.format);
  const TokenMode mode = parse_mode(args.mode);
  auto cache = std::make_shared<CalibrationCache>(CalibrationCache::default_path());
  Evaluator::Options options;
  options.mode = default_serialization(mode);
  options.calibration_seed = args.seed;
  const Evaluator evaluator(std::make_shared<GzipCompressor>(), cache, options);

  CompareResult result;
  try {
    result = compare_corpus(args.corpus, evaluator, mode);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  flush_cache(*cache);

  switch (format) {
    case OutputFormat::table: write_compare_table(std::cout, result); break;
    case OutputFormat::csv: write_compare_csv(std::cout, result); break;
    case OutputFormat::json: std::cout << compare_document(result).dump(2) << '\n'; break;
  }
  if (!args.svg.empty()) {
    std::ofstream out(args.svg);
    if (!out) throw UsageError("cannot write " + args.svg);
    out << compare_svg(result);
  }
  return result.all_passed() ? kExitOk : kExitAssertFailed;
}

struct CheckArgs {
  std::string properties;
  std::string estimators = "min,max,mshannon";
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string format = "table";
};

int run_check(const CheckArgs& args) {
  SuiteOptions options;
  if (!args.properties.empty()) options.properties = parse_properties(args.properties);
  options.estimators = parse_estimators(args.estimators);
  options.trials = args.trials;
  options.seed = args.seed;
  const OutputFormat format = parse_format(args.format);

  // Generated corpora are byte symbols; calibrations stay in memory.
  const Evaluator evaluator;
  const auto reports = run_property_suite(options, evaluator);

  switch (format) {
    case OutputFormat::table: write_property_table(std::cout, reports); break;
    case OutputFormat::csv: write_property_csv(std::cout, reports); break;
    case OutputFormat::json: std::cout << report_document({}, reports).dump(2) << '\n'; break;
  }
  return assertions_hold(reports) ? kExitOk : kExitAssertFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information content and combinatorial entropy of finite patterns"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Measure the information content of inputs");
  analyze->add_option("--mode", analyze_args.mode, "byte|char|line|token")->capture_default_str();
  analyze->add_option("--estimators", analyze_args.estimators,
                      "Comma list of min,max,shannon,mshannon,gzip,oracle,ensemble")
      ->capture_default_str();
  analyze->add_option("--alphabet-size", analyze_args.alphabet_size, "Declared alphabet size K");
  analyze->add_option("--format", analyze_args.format, "table|csv|json")->capture_default_str();
  analyze->add_option("--seed", analyze_args.seed, "Calibration seed")->capture_default_str();
  analyze->add_option("files", analyze_args.files, "Input files ('-' or none for stdin)");

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Write a deterministic synthetic pattern");
  gen->add_option("--kind", gen_args.kind,
                  "constant|uniform|markov|fib|circles|repeat|redundant|file")
      ->required();
  gen->add_option("--length", gen_args.length, "Pattern length N");
  gen->add_option("--seed", gen_args.seed, "PRNG seed (mt19937_64)");
  gen->add_option("--alphabet-size", gen_args.alphabet_size, "Alphabet size k")->capture_default_str();
  gen->add_option("--symbol", gen_args.symbol, "Symbol for constant patterns");
  gen->add_option("--transition", gen_args.transition, "Markov rows, e.g. '0.9,0.1;0.5,0.5'");
  gen->add_option("--base", gen_args.base, "Base pattern for repeat");
  gen->add_option("--repeats", gen_args.repeats, "Repetitions for repeat")->capture_default_str();
  gen->add_option("--width", gen_args.width, "Raster width for circles")->capture_default_str();
  gen->add_option("--height", gen_args.height, "Raster height for circles")->capture_default_str();
  gen->add_option("--ring-step", gen_args.ring_step, "Ring spacing in cells")->capture_default_str();
  gen->add_option("--ring-thickness", gen_args.ring_thickness, "Ring thickness in cells")
      ->capture_default_str();
  gen->add_option("--copy-probability", gen_args.copy_probability,
                  "Probability of repeating the previous symbol (redundant)")
      ->capture_default_str();
  gen->add_option("--file", gen_args.file, "Source text for file");
  gen->add_option("--file-mode", gen_args.file_mode, "Tokenization of --file")->capture_default_str();
  gen->add_option("--separator", gen_args.separator, "Text written between symbols");
  gen->add_option("--wrap", gen_args.wrap, "Newline after every N symbols");
  gen->add_option("--output,-o", gen_args.output, "Output file (default stdout)");

  CompareArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "Measure the fixture corpus four ways");
  cmp->add_option("--corpus", cmp_args.corpus, "Directory with the fixture files")->required();
  cmp->add_option("--format", cmp_args.format, "table|csv|json")->capture_default_str();
  cmp->add_option("--svg", cmp_args.svg, "Also write a bar chart here");
  cmp->add_option("--mode", cmp_args.mode, "Tokenization mode")->capture_default_str();
  cmp->add_option("--seed", cmp_args.seed, "Calibration seed")->capture_default_str();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run the property suite");
  check->add_option("--properties", check_args.properties,
                    "Comma list (default all): normalization,subadditivity,reversibility,"
                    "monotonicity,redundancy,ordering_chain");
  check->add_option("--estimators", check_args.estimators, "Comma list of estimators")
      ->capture_default_str();
  check->add_option("--trials", check_args.trials, "Trials per property")->capture_default_str();
  check->add_option("--seed", check_args.seed, "Corpus seed")->capture_default_str();
  check->add_option("--format", check_args.format, "table|csv|json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_args);
    if (*gen) return run_generate(gen_args);
    if (*cmp) return run_compare(cmp_args);
    if (*check) return run_check(check_args);
  } catch (const UsageError& e) {
    std::cerr << "patinfo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "patinfo: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "patinfo: error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
