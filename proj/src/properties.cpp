#include "patinfo/properties.hpp"

#include <algorithm>
#include <cmath>

#include "patinfo/generators.hpp"

namespace patinfo {

std::string_view to_string(PropertyId id) noexcept {
  switch (id) {
    case PropertyId::normalization: return "normalization";
    case PropertyId::subadditivity: return "subadditivity";
    case PropertyId::reversibility: return "reversibility";
    case PropertyId::monotonicity: return "monotonicity";
    case PropertyId::redundancy: return "redundancy";
    case PropertyId::ordering_chain: return "ordering_chain";
  }
  return "normalization";
}

std::optional<PropertyId> parse_property_id(std::string_view name) noexcept {
  if (name == "ordering") return PropertyId::ordering_chain;
  for (auto id : kAllProperties) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(PropertyClass c) noexcept {
  return c == PropertyClass::assert_class ? "assert" : "observe";
}

namespace {

/// Accumulates one inequality `lhs <= rhs` per trial.
class Tally {
 public:
  Tally(PropertyId id, double tolerance) {
    report_.property = id;
    report_.tolerance = tolerance;
  }

  void check(double lhs, double rhs) { record(lhs - rhs, lhs > rhs + report_.tolerance); }
  /// lhs <= bound, where the bound is the reported tolerance itself.
  void check_within(double lhs) { record(lhs - report_.tolerance, lhs > report_.tolerance); }
  /// Strict form lhs < rhs, as the repetition bound is stated.
  void check_strict(double lhs, double rhs) { record(lhs - rhs, !(lhs < rhs)); }

  PropertyReport finish() { return report_; }

 private:
  void record(double excess, bool violated) {
    ++report_.trials;
    if (violated) ++report_.violations;
    if (excess > report_.worst_violation_bits) report_.worst_violation_bits = excess;
  }

  PropertyReport report_;
};

bool is_constant(const Pattern& p) {
  return !p.empty() &&
         std::all_of(p.symbols().begin(), p.symbols().end(), [&](const Symbol& s) { return s == p[0]; });
}

// Every declared symbol occurs, and all equally often.
bool has_uniform_counts(const Pattern& p) {
  if (p.empty()) return false;
  const auto table = frequency_table(p);
  if (table.counts.size() != p.k()) return false;
  const auto first = table.counts.begin()->second;
  return std::all_of(table.counts.begin(), table.counts.end(),
                     [first](const auto& kv) { return kv.second == first; });
}

}  // namespace

PropertyReport check_normalization(const ValueFn& e, std::span<const Pattern> corpus,
                                   double tolerance) {
  Tally t(PropertyId::normalization, tolerance);
  for (const auto& p : corpus) {
    const auto [lo, hi] = info_bounds(p);
    const double v = e(p);
    // One trial per pattern, scored on the worse side.
    const double below = lo.value() - v;
    const double above = v - hi.value();
    if (below > above) t.check(lo.value(), v);
    else t.check(v, hi.value());
  }
  return t.finish();
}

std::vector<std::pair<Pattern, Pattern>> constant_subadditivity_pairs() {
  static constexpr std::pair<std::size_t, std::size_t> lengths[] = {
      {0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}};
  const Symbol a("a");
  std::vector<std::pair<Pattern, Pattern>> out;
  for (auto [n1, n2] : lengths) out.emplace_back(constant_pattern(a, n1), constant_pattern(a, n2));
  return out;
}

PropertyReport check_subadditivity(const ValueFn& e,
                                   std::span<const std::pair<Pattern, Pattern>> pairs,
                                   double tolerance) {
  Tally t(PropertyId::subadditivity, tolerance);
  const auto fixtures = constant_subadditivity_pairs();
  for (const auto& range : {std::span<const std::pair<Pattern, Pattern>>(fixtures), pairs}) {
    for (const auto& [p, q] : range) t.check(e(concat(p, q)), e(p) + e(q));
  }
  return t.finish();
}

PropertyReport check_reversibility(const ValueFn& e, std::span<const Pattern> corpus,
                                   double bound) {
  Tally t(PropertyId::reversibility, bound);
  for (const auto& p : corpus) t.check_within(std::abs(e(p) - e(reversed(p))));
  return t.finish();
}

PropertyReport check_monotonicity(const ValueFn& e, std::span<const SubpatternPair> pairs,
                                  double tolerance) {
  Tally t(PropertyId::monotonicity, tolerance);
  for (const auto& [sub, super] : pairs) t.check(e(sub), e(super));
  return t.finish();
}

PropertyReport check_redundancy(const ValueFn& e, std::span<const Pattern> bases,
                                std::span<const std::size_t> repeats, double bound) {
  Tally t(PropertyId::redundancy, bound);
  for (const auto& p : bases) {
    const double base = e(p);
    for (std::size_t r : repeats) {
      if (r == 0) throw std::invalid_argument("repeat count must be at least 1");
      const double deviation =
          std::abs(e(repeated(p, r)) - (base + std::log2(static_cast<double>(r))));
      t.check_strict(deviation, bound);
    }
  }
  return t.finish();
}

PropertyReport check_ordering_chain(const ValueFn& e, std::span<const Pattern> corpus,
                                    double tolerance) {
  Tally t(PropertyId::ordering_chain, tolerance);
  for (const auto& p : corpus) {
    const auto [lo, hi] = info_bounds(p);
    const double v = e(p);
    const double mark = modified_shannon_info(p).value();
    // Worst link of the chain, as one trial.
    double excess = std::max({lo.value() - v, v - hi.value(), lo.value() - mark, mark - hi.value()});
    if (is_constant(p)) excess = std::max(excess, std::abs(mark - lo.value()));
    if (has_uniform_counts(p)) excess = std::max(excess, std::abs(mark - hi.value()));
    t.check(excess, 0.0);
  }
  return t.finish();
}

namespace {

enum class CorpusKind { constant, uniform, markov, redundant, balanced };

Pattern random_pattern(Rng& rng, std::size_t max_length, std::span<const std::size_t> sizes) {
  const std::size_t k = sizes[rng.below(sizes.size())];
  std::size_t n = rng.below(max_length + 1);
  const auto kind = static_cast<CorpusKind>(rng.below(5));

  GeneratorSpec spec;
  spec.length = n;
  spec.alphabet_size = k;
  spec.seed = rng.next();
  switch (kind) {
    case CorpusKind::constant:
      spec.kind = GeneratorKind::constant;
      spec.symbol = generator_symbol(rng.below(k), k).value;
      return generate(spec);
    case CorpusKind::uniform:
      spec.kind = GeneratorKind::uniform_random;
      return generate(spec);
    case CorpusKind::markov: {
      spec.kind = GeneratorKind::markov;
      spec.transition.assign(k, std::vector<double>(k));
      for (auto& row : spec.transition) {
        double sum = 0.0;
        for (auto& w : row) {
          const double u = rng.unit();
          w = u * u * u;  // skewed rows
          sum += w;
        }
        if (sum == 0.0) {
          row.assign(k, 1.0 / static_cast<double>(k));
          continue;
        }
        for (auto& w : row) w /= sum;
      }
      return generate(spec);
    }
    case CorpusKind::redundant:
      spec.kind = GeneratorKind::redundant_random;
      spec.copy_probability = rng.unit();
      return generate(spec);
    case CorpusKind::balanced: {
      n -= n % k;
      std::vector<Symbol> symbols;
      symbols.reserve(n);
      for (std::size_t i = 0; i < n; ++i) symbols.push_back(generator_symbol(i % k, k));
      for (std::size_t i = n; i > 1; --i) std::swap(symbols[i - 1], symbols[rng.below(i)]);
      return Pattern(std::move(symbols), generator_alphabet(k));
    }
  }
  return Pattern();
}

void require_sizes(const CorpusOptions& o) {
  if (o.alphabet_sizes.empty()) throw std::invalid_argument("corpus needs alphabet sizes");
}

}  // namespace

std::vector<Pattern> random_corpus(const CorpusOptions& options) {
  require_sizes(options);
  Rng rng(options.seed);
  std::vector<Pattern> out;
  out.reserve(options.trials);
  for (std::size_t i = 0; i < options.trials; ++i) {
    out.push_back(random_pattern(rng, options.max_length, options.alphabet_sizes));
  }
  return out;
}

std::vector<std::pair<Pattern, Pattern>> random_pairs(const CorpusOptions& options) {
  require_sizes(options);
  Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<Pattern, Pattern>> out;
  out.reserve(options.trials);
  for (std::size_t i = 0; i < options.trials; ++i) {
    const std::size_t k = options.alphabet_sizes[rng.below(options.alphabet_sizes.size())];
    const std::size_t one[] = {k};
    Pattern p = random_pattern(rng, options.max_length, one);
    Pattern q = random_pattern(rng, options.max_length, one);
    out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

std::vector<SubpatternPair> subpattern_pairs(const CorpusOptions& options) {
  require_sizes(options);
  Rng rng(options.seed ^ 0xbf58476d1ce4e5b9ULL);
  std::vector<SubpatternPair> out;
  out.reserve(options.trials);
  for (std::size_t i = 0; i < options.trials; ++i) {
    Pattern super = random_pattern(rng, options.max_length, options.alphabet_sizes);
    const std::size_t n = super.size();
    const std::size_t len = rng.below(n + 1);
    std::size_t pos = 0;
    switch (rng.below(3)) {
      case 0: pos = 0; break;                          // prefix
      case 1: pos = n - len; break;                    // suffix
      default: pos = rng.below(n - len + 1); break;    // interior slice
    }
    Pattern sub = slice(super, pos, len);
    out.push_back({std::move(sub), std::move(super)});
  }
  return out;
}

std::vector<Pattern> redundancy_bases(const CorpusOptions& options) {
  require_sizes(options);
  Rng rng(options.seed ^ 0x94d049bb133111ebULL);
  std::vector<Pattern> out;
  out.reserve(options.trials);
  const std::size_t cap = std::max<std::size_t>(std::min<std::size_t>(options.max_length, 64), 1);
  while (out.size() < options.trials) {
    Pattern p = random_pattern(rng, cap, options.alphabet_sizes);
    if (!p.empty()) out.push_back(std::move(p));
  }
  return out;
}

namespace {

bool uses_compressor(EstimatorKind kind) noexcept {
  return kind == EstimatorKind::compression || kind == EstimatorKind::oracle_normalized ||
         kind == EstimatorKind::ensemble_min;
}

}  // namespace

PropertyClass property_class(PropertyId id, EstimatorKind kind) noexcept {
  constexpr auto A = PropertyClass::assert_class;
  constexpr auto O = PropertyClass::observe_class;
  switch (kind) {
    case EstimatorKind::min:
    case EstimatorKind::max:
      return A;
    case EstimatorKind::modified_shannon:
    case EstimatorKind::shannon_classic:
      return id == PropertyId::normalization || id == PropertyId::reversibility ||
                     id == PropertyId::ordering_chain
                 ? A
                 : O;
    case EstimatorKind::compression:
    case EstimatorKind::oracle_normalized:
    case EstimatorKind::ensemble_min:
      return O;
  }
  return O;
}

double default_tolerance(PropertyId id, EstimatorKind kind) noexcept {
  switch (id) {
    case PropertyId::reversibility: return uses_compressor(kind) ? 64.0 : 1e-9;
    case PropertyId::redundancy: return uses_compressor(kind) ? 128.0 : 1.0;
    default: return 1e-9;
  }
}

ValueFn property_value(const Evaluator& evaluator, EstimatorKind kind) {
  const bool raw = kind == EstimatorKind::min || kind == EstimatorKind::max ||
                   kind == EstimatorKind::modified_shannon;
  return [&evaluator, kind, raw](const Pattern& p) {
    const auto e = evaluator.evaluate(kind, p).estimate;
    return raw ? e.raw : e.clamped.value();
  };
}

std::vector<PropertyReport> run_property_suite(const SuiteOptions& options,
                                               const Evaluator& evaluator) {
  CorpusOptions corpus_options;
  corpus_options.trials = options.trials;
  corpus_options.seed = options.seed;

  // Corpora are built once and shared by every estimator.
  std::optional<std::vector<Pattern>> corpus, bases;
  std::optional<std::vector<std::pair<Pattern, Pattern>>> pairs;
  std::optional<std::vector<SubpatternPair>> subs;

  std::vector<PropertyReport> reports;
  for (auto kind : options.estimators) {
    const ValueFn value = property_value(evaluator, kind);
    for (auto id : options.properties) {
      const double tol = default_tolerance(id, kind);
      PropertyReport r;
      switch (id) {
        case PropertyId::normalization:
          if (!corpus) corpus = random_corpus(corpus_options);
          r = check_normalization(value, *corpus, tol);
          break;
        case PropertyId::subadditivity:
          if (!pairs) pairs = random_pairs(corpus_options);
          r = check_subadditivity(value, *pairs, tol);
          break;
        case PropertyId::reversibility:
          if (!corpus) corpus = random_corpus(corpus_options);
          r = check_reversibility(value, *corpus, tol);
          break;
        case PropertyId::monotonicity:
          if (!subs) subs = subpattern_pairs(corpus_options);
          r = check_monotonicity(value, *subs, tol);
          break;
        case PropertyId::redundancy:
          if (!bases) bases = redundancy_bases(corpus_options);
          r = check_redundancy(value, *bases, kRedundancyRepeats, tol);
          break;
        case PropertyId::ordering_chain:
          if (!corpus) corpus = random_corpus(corpus_options);
          r = check_ordering_chain(value, *corpus, tol);
          break;
      }
      r.estimator = std::string(to_string(kind));
      r.seed = options.seed;
      r.property_class = property_class(id, kind);
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

bool assertions_hold(std::span<const PropertyReport> reports) noexcept {
  return std::none_of(reports.begin(), reports.end(), [](const PropertyReport& r) {
    return r.property_class == PropertyClass::assert_class && !r.passed();
  });
}

}  // namespace patinfo
