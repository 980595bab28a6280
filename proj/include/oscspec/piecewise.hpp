#pragma once

#include "oscspec/interval.hpp"
#include "oscspec/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace oscspec {

/// Continuous piecewise-affine function on [0,1], stored as breakpoints.
/// xs is strictly increasing with xs.front() == 0 and xs.back() == 1;
/// between breakpoints the function interpolates affinely. Consecutive
/// equal ys encode constant segments; redundant collinear breakpoints are
/// permitted.
class PiecewiseLinear {
public:
  PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys);

  static PiecewiseLinear constant(const Rational& value);

  const std::vector<Rational>& xs() const { return xs_; }
  const std::vector<Rational>& ys() const { return ys_; }
  std::size_t breakpoint_count() const { return xs_.size(); }

  /// Exact value at t in [0,1].
  Rational evaluate(const Rational& t) const;

  /// Exact values at a non-decreasing sequence of points, via one sweep.
  std::vector<Rational> evaluate_sorted(std::span<const Rational> ts) const;

  /// max |f| over [0,1]; attained at a breakpoint.
  Rational sup_norm() const;

  /// max f - min f over I ∩ [0,1]. By continuity the value is insensitive
  /// to I's open/closed flags. Throws std::domain_error when I misses [0,1].
  Rational oscillation(const Interval& window) const;

  /// Maximal closed intervals on which the function is not constant.
  std::vector<Interval> variation_support() const;

  friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return a.xs_ == b.xs_ && a.ys_ == b.ys_;
  }

private:
  std::vector<Rational> xs_, ys_;
};

/// Exact linear combination sum(coeffs[i] * fs[i]) on the merged breakpoint
/// grid of the participating functions. Zero coefficients contribute
/// neither values nor grid points. Empty input yields the zero function.
PiecewiseLinear linear_combine(std::span<const Rational> coeffs,
                               std::span<const PiecewiseLinear> fs);

}  // namespace oscspec
