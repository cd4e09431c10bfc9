#include "doctest.h"
#include "oracles.hpp"
#include "patinfo/properties.hpp"

#include <cmath>

using namespace patinfo;

namespace {

double mn(const Pattern& p) { return min_info(p).value(); }
double mark(const Pattern& p) { return modified_shannon_info(p).value(); }

}  // namespace

TEST_CASE("constant-pattern subadditivity rows for I_min") {
  const auto pairs = constant_subadditivity_pairs();
  REQUIRE(pairs.size() == 5);
  const std::pair<std::size_t, std::size_t> rows[] = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto [n1, n2] = rows[i];
    CHECK(pairs[i].first.size() == n1);
    CHECK(pairs[i].second.size() == n2);
    CHECK(oracle::min_info(n1 + n2) <= oracle::min_info(n1) + oracle::min_info(n2));
  }
  const auto r = check_subadditivity(mn, {}, 0.0);
  CHECK(r.trials == 5);
  CHECK(r.violations == 0);
}

TEST_CASE("checks count violations exactly") {
  const Pattern ps[] = {byte_pattern("ab"), byte_pattern("aab"), byte_pattern("ba")};
  // A value that breaks the upper bound on one pattern only.
  const ValueFn bad = [](const Pattern& p) { return p.size() == 3 ? 100.0 : mark(p); };
  const auto r = check_normalization(bad, ps, 1e-9);
  CHECK(r.trials == 3);
  CHECK(r.violations == 1);
  CHECK(r.worst_violation_bits == doctest::Approx(100.0 - oracle::max_info(3, 2)));

  const ValueFn asym = [](const Pattern& p) { return p[0].value == "a" ? 1.0 : 0.0; };
  const auto rv = check_reversibility(asym, ps, 0.5);
  CHECK(rv.violations == 3);
  CHECK(rv.worst_violation_bits == doctest::Approx(0.5));

  const SubpatternPair sp[] = {{byte_pattern("a"), byte_pattern("ab")}};
  CHECK(check_monotonicity(mn, sp, 1e-9).violations == 0);
  const ValueFn shrink = [](const Pattern& p) { return 10.0 - double(p.size()); };
  CHECK(check_monotonicity(shrink, sp, 1e-9).violations == 1);

  const std::size_t rs[] = {1, 2, 64};
  CHECK(check_redundancy(mn, ps, rs, 1.0).violations == 0);
  const std::size_t bad_r[] = {0};
  CHECK_THROWS(check_redundancy(mn, ps, bad_r, 1.0));
}

TEST_CASE("I_mark subadditivity fails for independent frequency profiles") {
  const std::pair<Pattern, Pattern> pq[] = {{byte_pattern("aaaa"), byte_pattern("bbbb")}};
  const auto r = check_subadditivity(mark, pq, 1e-9);
  CHECK(r.violations == 1);
  CHECK(oracle::mark_info({4, 4}) > 2 * oracle::mark_info({4}));
}

TEST_CASE("I_max repetition grows linearly, not logarithmically") {
  const Pattern base = byte_pattern("ab");
  const ValueFn mx = [](const Pattern& p) { return max_info(p).value(); };
  const std::size_t rs[] = {8};
  const Pattern bases[] = {base};
  const auto r = check_redundancy(mx, bases, rs, 1.0);
  CHECK(r.violations == 1);
  CHECK(r.worst_violation_bits ==
        doctest::Approx(oracle::max_info(16, 2) - oracle::max_info(2, 2) - 3.0 - 1.0));
}

TEST_CASE("corpora are reproducible and well formed") {
  CorpusOptions o;
  o.trials = 200;
  o.seed = 17;
  const auto a = random_corpus(o);
  CHECK(a == random_corpus(o));
  REQUIRE(a.size() == 200);
  for (const auto& p : a) {
    CHECK(p.size() <= o.max_length);
    CHECK(std::find(o.alphabet_sizes.begin(), o.alphabet_sizes.end(), p.k()) !=
          o.alphabet_sizes.end());
  }
  for (const auto& [p, q] : random_pairs(o)) CHECK(p.k() == q.k());
  for (const auto& sp : subpattern_pairs(o)) CHECK(sp.sub.size() <= sp.super.size());
  for (const auto& b : redundancy_bases(o)) {
    CHECK_FALSE(b.empty());
    CHECK(b.size() <= 64);
  }
}

TEST_CASE("class assignment") {
  for (auto id : kAllProperties) {
    CHECK(property_class(id, EstimatorKind::min) == PropertyClass::assert_class);
    CHECK(property_class(id, EstimatorKind::max) == PropertyClass::assert_class);
    CHECK(property_class(id, EstimatorKind::compression) == PropertyClass::observe_class);
    CHECK(property_class(id, EstimatorKind::oracle_normalized) == PropertyClass::observe_class);
  }
  for (auto id : {PropertyId::normalization, PropertyId::reversibility, PropertyId::ordering_chain}) {
    CHECK(property_class(id, EstimatorKind::modified_shannon) == PropertyClass::assert_class);
  }
  for (auto id : {PropertyId::subadditivity, PropertyId::monotonicity}) {
    CHECK(property_class(id, EstimatorKind::modified_shannon) == PropertyClass::observe_class);
  }
  CHECK(parse_property_id("ordering") == PropertyId::ordering_chain);
}

TEST_CASE("suite: proven properties hold for I_min and I_mark") {
  const Evaluator ev;
  SuiteOptions o;
  o.trials = 300;
  o.estimators = {EstimatorKind::min};
  CHECK(assertions_hold(run_property_suite(o, ev)));

  o.estimators = {EstimatorKind::modified_shannon};
  o.properties = {PropertyId::normalization, PropertyId::reversibility, PropertyId::ordering_chain};
  const auto reports = run_property_suite(o, ev);
  for (const auto& r : reports) CHECK(r.violations == 0);

  o.estimators = {EstimatorKind::compression};
  o.properties = {PropertyId::subadditivity};
  o.trials = 60;
  const auto gz = run_property_suite(o, ev);
  CHECK(assertions_hold(gz));
  CHECK(gz.front().property_class == PropertyClass::observe_class);
}

TEST_CASE("suite reports are reproducible from the seed") {
  const Evaluator ev;
  SuiteOptions o;
  o.trials = 100;
  o.seed = 5;
  o.estimators = {EstimatorKind::modified_shannon, EstimatorKind::compression};
  const auto a = run_property_suite(o, ev);
  const auto b = run_property_suite(o, ev);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].violations == b[i].violations);
    CHECK(a[i].worst_violation_bits == b[i].worst_violation_bits);
    CHECK(a[i].violations <= a[i].trials);
    CHECK(a[i].worst_violation_bits >= 0.0);
  }
}
