#pragma once

#include <array>
#include <vector>

#include "fraglaw/significand.hpp"

namespace fraglaw {

/// Weighted first-digit counts (digits 1..9) with an optional cumulative
/// grid over significands s = 1.0, 1.1, ..., 10.0.  Merging is associative
/// and commutative, so partial histograms from parallel trials combine to
/// the same result whenever they are folded in a fixed order.
class DigitHistogram {
 public:
  static constexpr int kGridPoints = 91;  // s = (10+k)/10, k = 0..90

  DigitHistogram() = default;
  static DigitHistogram with_grid();

  void add(LogLength x, double weight = 1.0);
  void merge(const DigitHistogram& other);

  double count(int digit) const;  // digit in 1..9
  const std::array<double, 9>& counts() const { return counts_; }
  double total() const { return total_; }

  bool has_grid() const { return has_grid_; }
  static double grid_point(int k) { return (10.0 + k) / 10.0; }

  /// Cumulative weight of pieces with significand <= grid point s.
  /// s must match one of the 91 grid points.
  double cdf_at(double s) const;

  /// cdf_at(s) / total(): the empirical significand CDF at s.
  double proportion_at_most(double s) const;

  /// Copy with all counts and the total multiplied by lambda > 0.
  DigitHistogram scaled(double lambda) const;

  /// Number of digits with nonzero mass, and whether those digits form a
  /// contiguous block (circularly, so {9,1} counts as adjacent).
  int support_size() const;
  bool support_is_adjacent() const;

  // Raw per-bin grid weights; bin k holds mass with grid_point(k-1) < sig <= grid_point(k)
  // (bin 0: sig == 1 exactly).  Exposed for serialization.
  const std::array<double, kGridPoints>& grid_bins() const;
  void set_grid_bin(int k, double w);  // deserialization support; enables the grid

 private:
  std::array<double, 9> counts_{};
  double total_ = 0.0;
  bool has_grid_ = false;
  std::array<double, kGridPoints> bins_{};
};

/// Histogram of the leading digits of a weighted piece collection.
DigitHistogram first_digit_histogram(std::span<const WeightedPiece> pieces,
                                     bool with_grid = false);

}  // namespace fraglaw
