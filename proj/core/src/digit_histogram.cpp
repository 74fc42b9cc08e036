#include "fraglaw/digit_histogram.hpp"

#include <cmath>
#include <stdexcept>

namespace fraglaw {

DigitHistogram DigitHistogram::with_grid() {
  DigitHistogram h;
  h.has_grid_ = true;
  return h;
}

void DigitHistogram::add(LogLength x, double weight) {
  if (!(weight >= 0.0)) throw std::invalid_argument("DigitHistogram::add: negative weight");
  const double sig = significand(x, 10);
  counts_[static_cast<int>(sig) - 1] += weight;
  total_ += weight;
  if (has_grid_) {
    // smallest k with grid_point(k) >= sig
    int k = static_cast<int>((sig - 1.0) * 10.0);
    while (k < kGridPoints - 1 && grid_point(k) < sig) ++k;
    while (k > 0 && grid_point(k - 1) >= sig) --k;
    bins_[k] += weight;
  }
}

void DigitHistogram::merge(const DigitHistogram& other) {
  for (int d = 0; d < 9; ++d) counts_[d] += other.counts_[d];
  total_ += other.total_;
  if (other.has_grid_) {
    has_grid_ = true;
    for (int k = 0; k < kGridPoints; ++k) bins_[k] += other.bins_[k];
  }
}

double DigitHistogram::count(int digit) const {
  if (digit < 1 || digit > 9) throw std::invalid_argument("DigitHistogram::count: digit must lie in 1..9");
  return counts_[digit - 1];
}

double DigitHistogram::cdf_at(double s) const {
  if (!has_grid_) throw std::logic_error("DigitHistogram::cdf_at: histogram has no grid");
  const int k = static_cast<int>(std::lround((s - 1.0) * 10.0));
  if (k < 0 || k >= kGridPoints || std::abs(grid_point(k) - s) > 1e-9)
    throw std::invalid_argument("DigitHistogram::cdf_at: s is not a grid point");
  double cum = 0.0;
  for (int j = 0; j <= k; ++j) cum += bins_[j];
  return cum;
}

double DigitHistogram::proportion_at_most(double s) const {
  if (!(total_ > 0.0)) throw std::invalid_argument("DigitHistogram: empty histogram");
  return cdf_at(s) / total_;
}

DigitHistogram DigitHistogram::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw std::invalid_argument("DigitHistogram::scaled: lambda must be positive");
  DigitHistogram h = *this;
  for (auto& c : h.counts_) c *= lambda;
  h.total_ *= lambda;
  if (h.has_grid_)
    for (auto& b : h.bins_) b *= lambda;
  return h;
}

int DigitHistogram::support_size() const {
  int n = 0;
  for (double c : counts_) n += (c > 0.0);
  return n;
}

bool DigitHistogram::support_is_adjacent() const {
  const int n = support_size();
  if (n <= 1) return true;
  // Contiguous circular block iff the empty digits form a single circular
  // gap of length 9 - n.
  int longest_gap = 0, gap = 0;
  for (int i = 0; i < 18; ++i) {
    if (counts_[i % 9] > 0.0)
      gap = 0;
    else
      longest_gap = std::max(longest_gap, ++gap);
  }
  return longest_gap == 9 - n;
}

const std::array<double, DigitHistogram::kGridPoints>& DigitHistogram::grid_bins() const {
  if (!has_grid_) throw std::logic_error("DigitHistogram::grid_bins: histogram has no grid");
  return bins_;
}

void DigitHistogram::set_grid_bin(int k, double w) {
  if (k < 0 || k >= kGridPoints) throw std::invalid_argument("DigitHistogram::set_grid_bin: bad index");
  has_grid_ = true;
  bins_[k] = w;
}

DigitHistogram first_digit_histogram(std::span<const WeightedPiece> pieces, bool with_grid) {
  if (pieces.empty()) throw std::invalid_argument("first_digit_histogram: empty piece list");
  DigitHistogram h = with_grid ? DigitHistogram::with_grid() : DigitHistogram();
  for (const auto& piece : pieces) h.add(piece.log_length, piece.weight);
  return h;
}

}  // namespace fraglaw
