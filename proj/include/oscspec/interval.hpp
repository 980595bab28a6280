#pragma once

#include "oscspec/rational.hpp"

#include <optional>
#include <string>

namespace oscspec {

/// Rational interval with independent open/closed endpoint flags.
/// Degenerate intervals (lo == hi) must be closed on both sides; empty
/// intervals are not representable.
class Interval {
public:
  Interval(Rational lo, Rational hi, bool lo_closed = true, bool hi_closed = true);

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }
  static Interval open(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi), false, false};
  }
  static Interval point(Rational t) { return {t, t}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  Rational length() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& t) const;
  /// other ⊆ this, flag-aware.
  bool contains_interval(const Interval& other) const;
  /// closure(this) ⊂ interior(outer): strict inequalities at both endpoints.
  bool strictly_inside(const Interval& outer) const;

  std::optional<Interval> intersect(const Interval& other) const;
  bool disjoint(const Interval& other) const { return !intersect(other).has_value(); }

  /// Bracket notation, e.g. "[1/4, 1/2)".
  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ &&
           a.hi_closed_ == b.hi_closed_;
  }

private:
  Rational lo_, hi_;
  bool lo_closed_, hi_closed_;
};

}  // namespace oscspec
