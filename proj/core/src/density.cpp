#include "fraglaw/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fraglaw {

namespace {
constexpr double kLn10 = std::numbers::ln10;
}

CutDensity CutDensity::uniform() {
  CutDensity d;
  d.kind_ = Kind::kUniform;
  d.support_lo_ = 0.0;
  d.support_hi_ = 1.0;
  return d;
}

CutDensity CutDensity::piecewise(std::vector<double> breakpoints, std::vector<double> heights) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("piecewise density: breakpoints: need at least two");
  if (heights.size() != breakpoints.size() - 1)
    throw std::invalid_argument("piecewise density: heights: need exactly breakpoints-1 values");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw std::invalid_argument("piecewise density: breakpoints: must be strictly increasing");
  if (!(breakpoints.front() >= 0.0) || !(breakpoints.back() <= 1.0))
    throw std::invalid_argument("piecewise density: breakpoints: must lie in [0, 1]");
  double mass = 0.0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (!(heights[i] >= 0.0))
      throw std::invalid_argument("piecewise density: heights: must be nonnegative");
    mass += heights[i] * (breakpoints[i + 1] - breakpoints[i]);
  }
  if (std::abs(mass - 1.0) > 1e-9)
    throw std::invalid_argument("piecewise density: heights: density must integrate to 1, got " +
                                std::to_string(mass));

  CutDensity d;
  d.kind_ = Kind::kPiecewise;
  d.support_lo_ = breakpoints.front();
  d.support_hi_ = breakpoints.back();
  d.cumulative_.assign(breakpoints.size(), 0.0);
  for (std::size_t i = 0; i < heights.size(); ++i)
    d.cumulative_[i + 1] = d.cumulative_[i] + heights[i] * (breakpoints[i + 1] - breakpoints[i]);
  d.cumulative_.back() = 1.0;
  d.breakpoints_ = std::move(breakpoints);
  d.heights_ = std::move(heights);
  return d;
}

CutDensity CutDensity::log_box(double epsilon, double center_log10) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("log-box density: epsilon: must be positive");
  if (!(center_log10 + epsilon < 0.0))
    throw std::invalid_argument("log-box density: epsilon: support must stay below log10(1), i.e. "
                                "center + epsilon < 0");
  CutDensity d;
  d.kind_ = Kind::kLogBox;
  d.epsilon_ = epsilon;
  d.center_log10_ = center_log10;
  d.support_lo_ = std::pow(10.0, center_log10 - epsilon);
  d.support_hi_ = std::pow(10.0, center_log10 + epsilon);
  return d;
}

double CutDensity::pdf(double x) const {
  switch (kind_) {
    case Kind::kUniform:
      return (x > 0.0 && x < 1.0) ? 1.0 : 0.0;
    case Kind::kPiecewise: {
      if (x < support_lo_ || x > support_hi_) return 0.0;
      // cell j with breakpoints[j] <= x < breakpoints[j+1]
      std::size_t j = 0;
      while (j + 2 < breakpoints_.size() && x >= breakpoints_[j + 1]) ++j;
      return heights_[j];
    }
    case Kind::kLogBox: {
      if (!(x >= support_lo_ && x <= support_hi_)) return 0.0;
      return 1.0 / (2.0 * epsilon_ * kLn10 * x);
    }
  }
  return 0.0;
}

double CutDensity::sample(SplitMix64& rng) const {
  switch (kind_) {
    case Kind::kUniform:
      return rng.unit_open();
    case Kind::kPiecewise: {
      const double u = rng.unit_open();
      std::size_t j = 0;
      while (j + 2 < breakpoints_.size() && u > cumulative_[j + 1]) ++j;
      const double cell_mass = cumulative_[j + 1] - cumulative_[j];
      const double frac = cell_mass > 0.0 ? (u - cumulative_[j]) / cell_mass : 0.5;
      return breakpoints_[j] + frac * (breakpoints_[j + 1] - breakpoints_[j]);
    }
    case Kind::kLogBox: {
      const double u = center_log10_ - epsilon_ + 2.0 * epsilon_ * rng.unit_open();
      return std::pow(10.0, u);
    }
  }
  return 0.5;
}

double CutDensity::epsilon() const {
  if (kind_ != Kind::kLogBox) throw std::logic_error("CutDensity::epsilon: not a log-box density");
  return epsilon_;
}

double CutDensity::center_log10() const {
  if (kind_ != Kind::kLogBox) throw std::logic_error("CutDensity::center_log10: not a log-box density");
  return center_log10_;
}

const std::vector<double>& CutDensity::breakpoints() const {
  if (kind_ != Kind::kPiecewise) throw std::logic_error("CutDensity::breakpoints: not piecewise");
  return breakpoints_;
}

const std::vector<double>& CutDensity::heights() const {
  if (kind_ != Kind::kPiecewise) throw std::logic_error("CutDensity::heights: not piecewise");
  return heights_;
}

}  // namespace fraglaw
