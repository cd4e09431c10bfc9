#include "doctest.h"
#include "oracles.hpp"
#include "patinfo/estimators.hpp"
#include "patinfo/numeric.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace patinfo;

namespace {

Pattern balanced(std::size_t n, std::size_t k) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('a' + i % k);
  return byte_pattern(s);
}

}  // namespace

TEST_CASE("min_info") {
  for (std::size_t n : {0, 1, 2, 3, 10, 1000}) {
    CHECK(std::abs(min_info(n).value() - oracle::min_info(n)) <= 1e-9);
  }
  CHECK(min_info(0).value() == 0.0);
  CHECK(min_info(byte_pattern("x")).value() == 1.0);
  CHECK(min_info(3).value() == 2.0);
}

TEST_CASE("max_info against term-wise summation") {
  CHECK(std::abs(max_info(3, 2).value() - 3.9068905956085185) <= 1e-12);
  CHECK(std::abs(max_info(5, 1).value() - 2.5849625007211562) <= 1e-12);
  CHECK(max_info(0, 7).value() == 0.0);
  CHECK(max_info(0, 0).value() == 0.0);
  CHECK_THROWS_AS(max_info(3, 0), DegenerateAlphabetError);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t n = 0; n <= 80; ++n) {
      CHECK(std::abs(max_info(n, k).value() - oracle::max_info(n, k)) <= 1e-9);
    }
  }
}

TEST_CASE("max_info stays finite at large n") {
  const double v = max_info(1000000, 256).value();
  const double ref = static_cast<double>(oracle::log2_geometric_closed(oracle::Big(8), 1000000));
  CHECK(std::isfinite(v));
  CHECK(std::abs(v - ref) / ref <= 1e-6);
  CHECK(std::abs(v - 8000000.0056465631) <= 1e-6);
}

TEST_CASE("modified Shannon worked examples") {
  CHECK(std::abs(modified_shannon_info(byte_pattern("ab")).value() - 2.8073549220576041) <= 1e-12);
  CHECK(std::abs(modified_shannon_info(byte_pattern("aaaa")).value() - 2.3219280948873623) <= 1e-12);
  CHECK(std::abs(modified_shannon_info(byte_pattern("aab")).value() - 3.7237260771199869) <= 1e-9);
  CHECK(std::abs(unigram_entropy(frequency_table(byte_pattern("aab"))) - 0.9182958340544895) <=
        1e-12);
  CHECK(modified_shannon_info(Pattern{}).value() == 0.0);
}

TEST_CASE("classic Shannon") {
  CHECK(shannon_classic_info(byte_pattern("abab")).value() == doctest::Approx(4.0));
  CHECK(shannon_classic_info(byte_pattern("aaaa")).value() == 0.0);
  CHECK(shannon_classic_info(balanced(10000, 2)).value() == doctest::Approx(10000.0).epsilon(1e-12));
  CHECK_THROWS_AS(shannon_classic_info(Pattern{}), std::domain_error);
}

TEST_CASE("ensemble minimum") {
  const Estimator mn = [](const Pattern& p) { return min_info(p); };
  const Estimator ms = [](const Pattern& p) { return modified_shannon_info(p); };
  const Estimator mx = [](const Pattern& p) { return max_info(p); };

  const std::vector<Estimator> both{ms, mn};
  const auto c = ensemble_min_info(byte_pattern("aaaaaaa"), both);
  CHECK(c.bits.value() == doctest::Approx(3.0));
  CHECK(c.winner == 0);

  const std::vector<Estimator> tie{ms, mx};
  const auto t = ensemble_min_info(byte_pattern("ab"), tie);
  CHECK(std::abs(t.bits.value() - 2.8073549220576041) <= 1e-12);
  CHECK(t.winner == 0);

  const std::vector<Estimator> one{mn};
  CHECK(ensemble_min_info(byte_pattern("abcabd"), one).bits == min_info(6));
  CHECK_THROWS_AS(ensemble_min_info(byte_pattern("a"), std::span<const Estimator>{}),
                  std::invalid_argument);
}

TEST_CASE("combinatorial entropy of constant patterns") {
  const Estimator mn = [](const Pattern& p) { return min_info(p); };
  CHECK(entropy_hc(Pattern{}, mn) == 0.0);
  CHECK(entropy_hc(byte_pattern("a"), mn) == 0.5);
  CHECK(std::abs(entropy_hc(byte_pattern("aa"), mn) - 0.52832083357371873) <= 1e-12);
  CHECK(std::abs(entropy_hc(min_info(10000), 10000) - 0.0013286527989041640) <= 1e-15);
}

TEST_CASE("clamping keeps the raw value") {
  const Pattern p = byte_pattern("abab");
  const auto lo = clamp_to_bounds(p, -5.0);
  CHECK(lo.raw == -5.0);
  CHECK(lo.clamped == min_info(p));
  const auto hi = clamp_to_bounds(p, 1e9);
  CHECK(hi.clamped == max_info(p));
  CHECK_THROWS(clamp_to_bounds(p, std::nan("")));
}

TEST_CASE("property: direct summation agrees with the closed form") {
  gen::Source src(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const double L = static_cast<double>(1 + src.below(4000)) / 1000.0;
    const auto n = static_cast<std::uint64_t>(src.below(static_cast<std::uint64_t>(600 / L)));
    const double got = log2_geometric_sum(L, n);
    const double ref = static_cast<double>(oracle::log2_geometric_closed(oracle::Big(L), n));
    CHECK(std::abs(got - ref) <= 1e-9 * std::max(1.0, ref));
  }
  CHECK_THROWS_AS(log2_geometric_sum(-0.5, 3), std::domain_error);
}

TEST_CASE("property: modified Shannon matches the term-wise oracle") {
  gen::Source src(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string s = src.skewed_word(1 + src.below(80), 1 + src.below(6));
    const double got = modified_shannon_info(byte_pattern(s)).value();
    CHECK(std::abs(got - oracle::mark_info(oracle::counts_of(s))) <= 1e-9);
  }
}

TEST_CASE("property: reductions to the constant and uniform cases") {
  for (std::size_t n = 0; n <= 64; ++n) {
    const Pattern c = byte_pattern(std::string(n, 'q'));
    CHECK(std::abs(modified_shannon_info(c).value() - oracle::min_info(n)) <= 1e-9);
    CHECK(max_info(n, 1) == min_info(n));
    for (std::size_t k = 1; k <= 4; ++k) {
      if (n % k != 0) continue;
      CHECK(std::abs(modified_shannon_info(balanced(n, k)).value() - oracle::max_info(n, k)) <=
            1e-9);
    }
  }
}

TEST_CASE("property: frequency estimators are reversal invariant") {
  gen::Source src(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Pattern p = byte_pattern(src.skewed_word(1 + src.below(100), 1 + src.below(5)));
    const Pattern r = reversed(p);
    CHECK(min_info(p) == min_info(r));
    CHECK(max_info(p) == max_info(r));
    CHECK(modified_shannon_info(p) == modified_shannon_info(r));
    CHECK(shannon_classic_info(p) == shannon_classic_info(r));
  }
}

TEST_CASE("property: I_min subadditivity, redundancy and monotonicity") {
  for (std::size_t n = 0; n <= 200; ++n) {
    for (std::size_t m = 0; m <= 200; m += 7) {
      CHECK(min_info(n + m).value() <= min_info(n).value() + min_info(m).value() + 1e-12);
    }
  }
  for (std::size_t n = 1; n <= 64; ++n) {
    for (std::size_t r = 1; r <= 64; ++r) {
      const double dev = min_info(n * r).value() - (min_info(n).value() + std::log2(double(r)));
      CHECK(dev <= 1e-12);
      CHECK(dev > -1.0);
      if (r == 1) CHECK(dev == 0.0);
    }
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::size_t n = 0; n < 300; ++n) {
      CHECK(min_info(n) < min_info(n + 1));
      CHECK(max_info(n, k) < max_info(n + 1, k));
    }
  }
}

TEST_CASE("property: modified Shannon lies between the bounds") {
  gen::Source src(9);
  for (int trial = 0; trial < 500; ++trial) {
    const Pattern p = byte_pattern(src.skewed_word(src.below(300), 1 + src.below(26)));
    const double v = modified_shannon_info(p).value();
    CHECK(v >= min_info(p).value() - 1e-9);
    CHECK(v <= max_info(p).value() + 1e-9);
  }
}
