#pragma once

#include <span>

namespace fraglaw {

/// A positive length carried as log10(length).  Fragmentation runs multiply
/// thousands of proportions together; the linear value underflows double
/// long before the significand loses meaning, so lengths live in log domain
/// and are only exponentiated for display or digit extraction.
struct LogLength {
  double log10_value = 0.0;

  LogLength() = default;
  explicit LogLength(double log10_length);  // throws std::invalid_argument unless finite
  static LogLength from_linear(double length);  // length > 0
};

/// Significand of the underlying length in base `base`: the S in
/// length = S * base^k with S in [1, base) and k integer.
double significand(LogLength x, int base = 10);

/// First decimal digit of the underlying length (1..9).
int leading_digit(LogLength x);

/// Benford cumulative distribution: Prob(significand <= s) = log_base(s),
/// for s in [1, base].
double benford_cdf(double s, int base = 10);

/// Indicator of the event "significand (base 10) is at most s", s in [1, 10).
/// The boundary counts: a significand exactly equal to s returns true.
bool significand_at_most(LogLength x, double s);

/// The Benford reference distribution in a given base.
struct BenfordReference {
  int base = 10;
  double digit_probability(int digit) const;  // log_base((d+1)/d), 1 <= d < base
  double cdf(double s) const;                 // log_base(s)
};

struct WeightedPiece {
  LogLength log_length;
  double weight = 1.0;
};

/// Weighted fraction of pieces whose significand is at most s.  This is the
/// empirical significand CDF evaluated at s; it is nondecreasing in s and
/// reaches 1 as s approaches 10.
double empirical_significand_cdf(std::span<const WeightedPiece> pieces, double s);

}  // namespace fraglaw
