#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patinfo/core.hpp"
#include "patinfo/estimators.hpp"
#include "patinfo/evaluate.hpp"

namespace patinfo {

enum class PropertyId {
  normalization,
  subadditivity,
  reversibility,
  monotonicity,
  redundancy,
  ordering_chain,
};

std::string_view to_string(PropertyId id) noexcept;
std::optional<PropertyId> parse_property_id(std::string_view name) noexcept;
inline constexpr PropertyId kAllProperties[] = {
    PropertyId::normalization, PropertyId::subadditivity, PropertyId::reversibility,
    PropertyId::monotonicity,  PropertyId::redundancy,    PropertyId::ordering_chain};

/// ASSERT failures fail the run; OBSERVE failures are only reported.
enum class PropertyClass { assert_class, observe_class };
std::string_view to_string(PropertyClass c) noexcept;

/// Outcome of one property over one corpus. `worst_violation_bits` is the
/// largest amount by which the inequality's left side exceeded its right side
/// (0 if it never did), whether or not that excess was within tolerance.
struct PropertyReport {
  PropertyId property = PropertyId::normalization;
  std::string estimator;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_violation_bits = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  PropertyClass property_class = PropertyClass::observe_class;

  bool passed() const noexcept { return violations == 0; }
};

/// The value a property is checked on.
using ValueFn = std::function<double(const Pattern&)>;

struct SubpatternPair {
  Pattern sub;
  Pattern super;
};

/// min_info(p) − tol ≤ E(p) ≤ max_info(p) + tol.
PropertyReport check_normalization(const ValueFn& e, std::span<const Pattern> corpus,
                                   double tolerance);

/// E(pq) ≤ E(p) + E(q) + tol. The five constant-pattern length pairs
/// (0,0) (0,1) (1,1) (1,2) (2,2) are always checked in addition to `pairs`.
PropertyReport check_subadditivity(const ValueFn& e,
                                   std::span<const std::pair<Pattern, Pattern>> pairs,
                                   double tolerance);

/// |E(p) − E(reverse p)| ≤ bound.
PropertyReport check_reversibility(const ValueFn& e, std::span<const Pattern> corpus,
                                   double bound);

/// E(sub) ≤ E(super) + tol.
PropertyReport check_monotonicity(const ValueFn& e, std::span<const SubpatternPair> pairs,
                                  double tolerance);

/// |E(p^r) − (E(p) + log2 r)| < bound for every base p and every r.
PropertyReport check_redundancy(const ValueFn& e, std::span<const Pattern> bases,
                                std::span<const std::size_t> repeats, double bound);

/// min_info ≤ E ≤ max_info and min_info ≤ I_mark ≤ max_info for every p, with
/// I_mark = min_info on constant patterns and I_mark = max_info when every
/// declared symbol occurs equally often.
PropertyReport check_ordering_chain(const ValueFn& e, std::span<const Pattern> corpus,
                                    double tolerance);

/// The constant-pattern length pairs every subadditivity check includes.
std::vector<std::pair<Pattern, Pattern>> constant_subadditivity_pairs();

struct CorpusOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_length = 512;
  std::vector<std::size_t> alphabet_sizes = {1, 2, 4, 26, 256};
};

/// Seeded mix of constant, uniform, Markov, redundant and equal-count
/// patterns, each with a declared alphabet from `alphabet_sizes`.
std::vector<Pattern> random_corpus(const CorpusOptions& options);
/// Pairs over a shared declared alphabet.
std::vector<std::pair<Pattern, Pattern>> random_pairs(const CorpusOptions& options);
/// Prefixes, suffixes and interior slices of random corpus patterns.
std::vector<SubpatternPair> subpattern_pairs(const CorpusOptions& options);
/// Non-empty bases of at most 64 symbols for repetition checks.
std::vector<Pattern> redundancy_bases(const CorpusOptions& options);
inline constexpr std::size_t kRedundancyRepeats[] = {1, 2, 3, 4, 8, 16};

PropertyClass property_class(PropertyId id, EstimatorKind kind) noexcept;
double default_tolerance(PropertyId id, EstimatorKind kind) noexcept;

/// Raw output for estimators bounded by construction (min, max, mshannon);
/// the reported clamped value for the rest.
ValueFn property_value(const Evaluator& evaluator, EstimatorKind kind);

struct SuiteOptions {
  std::vector<PropertyId> properties{std::begin(kAllProperties), std::end(kAllProperties)};
  std::vector<EstimatorKind> estimators = {EstimatorKind::min, EstimatorKind::max,
                                           EstimatorKind::modified_shannon};
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

/// One report per (estimator, property), in estimator-major order.
std::vector<PropertyReport> run_property_suite(const SuiteOptions& options,
                                               const Evaluator& evaluator);

/// True iff no ASSERT-class report has a violation.
bool assertions_hold(std::span<const PropertyReport> reports) noexcept;

}  // namespace patinfo
