#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace patinfo {

/// Above this many bits of magnitude, sum_{i<=n} b^i is no longer summed
/// term by term.
inline constexpr double kDirectSummationLimitBits = 512.0;

/// Direct summation also gives up past this many terms; tiny ratios with huge
/// n stay under the bit limit but would cost O(n).
inline constexpr std::uint64_t kDirectSummationMaxTerms = std::uint64_t{1} << 20;

/// log2(1 - 2^-x) for x > 0, accurate for both tiny and large x.
template <std::floating_point Real>
Real log2_one_minus_exp2_neg(Real x) {
  return std::log2(-std::expm1(-x * std::numbers::ln2_v<Real>));
}

/// log2 of the geometric sum  sum_{i=0}^{n} b^i  with b = 2^log2_ratio >= 1.
///
/// Small magnitudes are summed directly (Horner form); larger ones use
///   n·L + log2(1 - 2^{-(n+1)L}) - log2(1 - 2^{-L}),   L = log2 b,
/// which never forms b^n and so cannot overflow.
template <std::floating_point Real>
Real log2_geometric_sum(Real log2_ratio, std::uint64_t n) {
  if (!std::isfinite(log2_ratio) || log2_ratio < Real(0)) {
    throw std::domain_error("geometric ratio must satisfy b >= 1");
  }
  if (log2_ratio == Real(0)) return std::log2(static_cast<Real>(n) + Real(1));

  const Real span = (static_cast<Real>(n) + Real(1)) * log2_ratio;
  if (span <= static_cast<Real>(kDirectSummationLimitBits) && n <= kDirectSummationMaxTerms) {
    const Real b = std::exp2(log2_ratio);
    Real s = 1;
    for (std::uint64_t i = 0; i < n; ++i) s = s * b + Real(1);
    return std::log2(s);
  }
  return static_cast<Real>(n) * log2_ratio + log2_one_minus_exp2_neg(span) -
         log2_one_minus_exp2_neg(log2_ratio);
}

}  // namespace patinfo
