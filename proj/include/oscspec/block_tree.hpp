#pragma once

#include "oscspec/interval.hpp"
#include "oscspec/scales.hpp"
#include "oscspec/sign_word.hpp"

#include <optional>
#include <vector>

namespace oscspec {

/// Thrown when the lattice cannot be realized; the message names the
/// offending word where one exists.
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Nested lattice of closed blocks indexed by sign words.
///
/// Level m holds 2^m pairwise disjoint blocks of exact length
/// block_length(m), in lexicographic word order (minus-child on the left).
/// Children sit at the extremes of their parent with lateral margins
/// margin(m); the two level-1 blocks sit at the extremes of the base
/// interval with margins margin(1).
class BlockTree {
public:
  static BlockTree build(int max_level, ScaleParams params,
                         std::optional<Interval> base_override = std::nullopt);

  int max_level() const { return static_cast<int>(levels_.size()); }
  const ScaleParams& params() const { return params_; }
  const Interval& base() const { return base_; }

  /// Blocks of level m (1-based), lexicographic order.
  const std::vector<Interval>& level(int m) const;
  const Interval& block(const SignWord& word) const;

  /// The 2^m - 1 open gaps between consecutive level-m blocks.
  std::vector<Interval> consecutive_gaps(int m) const;
  /// Anchor windows of level m, n = 0..m.
  std::vector<Interval> external_windows(int m) const;
  /// Central window of each level-m block: the open middle region its two
  /// children leave free. Defined for every m <= max_level.
  std::vector<Interval> central_windows(int m) const;

  friend bool operator==(const BlockTree& a, const BlockTree& b) {
    return a.params_.c() == b.params_.c() && a.base_ == b.base_ && a.levels_ == b.levels_;
  }

private:
  BlockTree(ScaleParams params, Interval base) : params_(std::move(params)), base_(std::move(base)) {}

  ScaleParams params_;
  Interval base_;
  std::vector<std::vector<Interval>> levels_;
};

}  // namespace oscspec
