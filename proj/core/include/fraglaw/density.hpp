#pragma once

#include <vector>

#include "fraglaw/rng.hpp"

namespace fraglaw {

/// log10(1/2); center of the default log-box density and the bound on its
/// half-width (the support of the box must stay inside (-inf, 0)).
inline constexpr double kLogHalf = -0.30102999566398119521;

/// A probability density for cut proportions on (0,1).
///
/// Three kinds are supported:
///   uniform         f(x) = 1 on (0,1)
///   piecewise       constant heights between strictly increasing breakpoints
///   log_box         log10(x) uniform on [center - eps, center + eps], an
///                   interval that must lie inside (-inf, 0)
///
/// Every density can evaluate its pdf, draw samples, and report its support.
class CutDensity {
 public:
  enum class Kind { kUniform, kPiecewise, kLogBox };

  static CutDensity uniform();
  static CutDensity piecewise(std::vector<double> breakpoints, std::vector<double> heights);
  static CutDensity log_box(double epsilon, double center_log10 = kLogHalf);

  Kind kind() const { return kind_; }
  double pdf(double x) const;
  double sample(SplitMix64& rng) const;

  // Linear-domain support bounds [lo, hi] subset of [0, 1].
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }

  // log-box parameters (throws for other kinds)
  double epsilon() const;
  double center_log10() const;

  // piecewise parameters (throws for other kinds)
  const std::vector<double>& breakpoints() const;
  const std::vector<double>& heights() const;

 private:
  CutDensity() = default;

  Kind kind_ = Kind::kUniform;
  double support_lo_ = 0.0, support_hi_ = 1.0;
  double epsilon_ = 0.0, center_log10_ = kLogHalf;          // log-box
  std::vector<double> breakpoints_, heights_, cumulative_;  // piecewise
};

}  // namespace fraglaw
