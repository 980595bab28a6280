#include "oscspec/scales.hpp"

#include <stdexcept>

namespace oscspec {

ScaleParams::ScaleParams(Rational c) : c_(std::move(c)) {
  if (c_.sign() <= 0 || c_ > Rational(1, 4))
    throw std::invalid_argument("ScaleParams: c must lie in (0, 1/4], got " + c_.str());
}

Rational ScaleParams::window_width(long m) const {
  if (m < 1) throw std::invalid_argument("ScaleParams: level must be >= 1");
  return Rational::pow2(-(3 * m + 5));
}

Rational ScaleParams::block_length(long m) const {
  return c_ * Rational::pow2(-m) * window_width(m);
}

Rational ScaleParams::margin(long m) const { return block_length(m) / 8; }

Rational ScaleParams::sibling_gap(long m) const {
  if (m < 2) throw std::invalid_argument("ScaleParams: sibling_gap needs level >= 2");
  return block_length(m - 1) - 2 * block_length(m) - 2 * margin(m - 1);
}

Rational ScaleParams::sibling_gap_alt(long m) const {
  if (m < 2) throw std::invalid_argument("ScaleParams: sibling_gap_alt needs level >= 2");
  return Rational(5, 8) * block_length(m - 1) -
         c_ * Rational::pow2(-(m - 1)) * (window_width(m) / 2);
}

Rational anchor_point(long n) {
  if (n < 0) throw std::invalid_argument("anchor_point: n must be >= 0");
  return n == 0 ? Rational(0) : Rational(1, n);
}

Rational min_anchor_spacing(int m) {
  if (m < 1) throw std::invalid_argument("min_anchor_spacing: m must be >= 1");
  Rational best = anchor_point(1) - anchor_point(0);
  for (long a = 0; a <= m; ++a)
    for (long b = a + 1; b <= m; ++b) {
      Rational d = (anchor_point(a) - anchor_point(b)).abs();
      if (d < best) best = d;
    }
  return best;
}

Interval external_window(long n, long m, const ScaleParams& params) {
  if (n < 0 || n > m) throw std::invalid_argument("external_window: need 0 <= n <= m");
  Rational half = params.window_width(m) / 2;
  Rational t = anchor_point(n);
  Rational lo = t - half;
  Rational hi = t + half;
  bool lo_closed = false, hi_closed = false;
  if (lo < 0) {
    lo = Rational(0);
    lo_closed = true;
  }
  if (hi > 1) {
    hi = Rational(1);
    hi_closed = true;
  }
  return Interval(std::move(lo), std::move(hi), lo_closed, hi_closed);
}

Interval base_interval(const ScaleParams& params) {
  Rational eta1 = params.window_width(1);
  Interval base = Interval::closed(1 - Rational(15, 32) * eta1, 1 - eta1 / 8);
  validate_base(base, params);
  return base;
}

void validate_base(const Interval& base, const ScaleParams& params) {
  if (!base.lo_closed() || !base.hi_closed())
    throw std::invalid_argument("base interval must be closed");
  Rational eta1 = params.window_width(1);
  if (!(base.lo() > 1 - eta1 / 2) || !(base.hi() < 1))
    throw std::invalid_argument("base interval must lie strictly inside (1 - eta1/2, 1): got " +
                                base.str());
  if (!(base.hi() + params.window_width(2) / 2 <= 1))
    throw std::invalid_argument(
        "base interval must stay clear of the terminal windows of levels >= 2");
  Rational len = base.length();
  Rational two_blocks = 2 * (params.block_length(1) + params.margin(1));
  if (!(len > two_blocks))
    throw std::invalid_argument("base interval too short for two level-1 blocks with margins: |" +
                                base.str() + "| = " + len.str() + " <= " + two_blocks.str());
  Rational dominance = 2 * params.block_length(1) + params.sibling_gap(2);
  if (!(len > dominance))
    throw std::invalid_argument(
        "base interval too short for the central gap to dominate sibling gaps: length " +
        len.str() + " <= " + dominance.str());
}

}  // namespace oscspec
