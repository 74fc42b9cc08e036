#include "fraglaw/significand.hpp"

#include <cmath>
#include <stdexcept>

namespace fraglaw {

LogLength::LogLength(double log10_length) : log10_value(log10_length) {
  if (!std::isfinite(log10_length))
    throw std::invalid_argument("LogLength: log10 value must be finite");
}

LogLength LogLength::from_linear(double length) {
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("LogLength: length must be positive and finite");
  return LogLength(std::log10(length));
}

double significand(LogLength x, int base) {
  if (base < 2) throw std::invalid_argument("significand: base must be >= 2");
  const double lb = (base == 10) ? x.log10_value : x.log10_value / std::log10(double(base));
  double frac = lb - std::floor(lb);
  if (frac >= 1.0) frac = 0.0;  // floor rounding at the wrap point
  double sig = std::pow(double(base), frac);
  if (sig < 1.0) sig = 1.0;
  if (sig >= double(base)) sig = std::nextafter(double(base), 0.0);
  return sig;
}

int leading_digit(LogLength x) {
  return static_cast<int>(significand(x, 10));
}

double benford_cdf(double s, int base) {
  if (base < 2) throw std::invalid_argument("benford_cdf: base must be >= 2");
  if (!(s >= 1.0) || !(s <= double(base)))
    throw std::invalid_argument("benford_cdf: s must lie in [1, base]");
  return std::log10(s) / std::log10(double(base));
}

bool significand_at_most(LogLength x, double s) {
  if (!(s >= 1.0) || !(s < 10.0))
    throw std::invalid_argument("significand_at_most: s must lie in [1, 10)");
  return significand(x, 10) <= s;
}

double BenfordReference::digit_probability(int digit) const {
  if (base < 2) throw std::invalid_argument("BenfordReference: base must be >= 2");
  if (digit < 1 || digit >= base)
    throw std::invalid_argument("BenfordReference: digit must lie in [1, base)");
  return (std::log10(digit + 1.0) - std::log10(double(digit))) / std::log10(double(base));
}

double BenfordReference::cdf(double s) const { return benford_cdf(s, base); }

double empirical_significand_cdf(std::span<const WeightedPiece> pieces, double s) {
  if (pieces.empty())
    throw std::invalid_argument("empirical_significand_cdf: empty piece list");
  double hit = 0.0, total = 0.0;
  for (const auto& piece : pieces) {
    if (!(piece.weight >= 0.0))
      throw std::invalid_argument("empirical_significand_cdf: weights must be nonnegative");
    total += piece.weight;
    if (significand_at_most(piece.log_length, s)) hit += piece.weight;
  }
  if (!(total > 0.0))
    throw std::invalid_argument("empirical_significand_cdf: total weight must be positive");
  return hit / total;
}

}  // namespace fraglaw
