#pragma once

#include "oscspec/interval.hpp"
#include "oscspec/rational.hpp"

namespace oscspec {

/// Per-level scale sequences of the nested construction, all exact.
///
/// Levels are 1-based. The window width shrinks by 8 and the block length
/// by 16 from one level to the next, so every quantity stays dyadic for
/// dyadic c.
class ScaleParams {
public:
  explicit ScaleParams(Rational c = Rational(1, 4));

  const Rational& c() const { return c_; }

  /// Width of the level-m anchor windows: 2^-(3m+5).
  Rational window_width(long m) const;
  /// Length of a level-m block: (c / 2^m) * window_width(m).
  Rational block_length(long m) const;
  /// Lateral margin the level-(m+1) children leave inside a level-m block:
  /// margin(m) = block_length(m) / 8.
  Rational margin(long m) const;
  /// Gap separating the two level-m children of one level-(m-1) block,
  /// from the defining identity
  ///   block_length(m-1) = 2*block_length(m) + sibling_gap(m) + 2*margin(m-1).
  /// Requires m >= 2.
  Rational sibling_gap(long m) const;
  /// The published closed-form variant of sibling_gap(m); kept separate so
  /// reports can compare the two expressions exactly.
  Rational sibling_gap_alt(long m) const;

private:
  Rational c_;
};

/// The accumulation family: anchor_point(0) = 0, anchor_point(n) = 1/n.
Rational anchor_point(long n);

/// Exact minimum pairwise distance among anchor_point(0..m), m >= 1.
Rational min_anchor_spacing(int m);

/// Open window of width window_width(m) centred at anchor_point(n), clipped
/// to [0,1]; the clipped ends at 0 and 1 are closed. Requires 0 <= n <= m.
Interval external_window(long n, long m, const ScaleParams& params);

/// The closed dyadic interval hosting the whole block lattice:
/// B = [1 - 15*eta1/32, 1 - eta1/8] where eta1 = window_width(1).
Interval base_interval(const ScaleParams& params);

/// Checks that `base` can host the lattice: closed, strictly inside the
/// level-1 terminal window, clear of the terminal windows of levels >= 2,
/// long enough for two level-1 blocks with margins, and long enough that
/// the central level-2 gap dominates the sibling gap. Throws
/// std::invalid_argument naming the violated constraint.
void validate_base(const Interval& base, const ScaleParams& params);

}  // namespace oscspec
