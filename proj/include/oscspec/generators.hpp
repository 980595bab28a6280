#pragma once

#include "oscspec/block_tree.hpp"
#include "oscspec/piecewise.hpp"

#include <optional>
#include <vector>

namespace oscspec {

struct GeneratorOptions {
  /// Thirds realization: each anchor bump rises over the first third of its
  /// window, holds +1 over the middle third, falls over the last third.
  /// When false the bump is a triangle peaking at the anchor.
  bool bump_thirds = true;
};

/// The level-m generator: baseline -1, one bump per anchor window
/// n = 2..m, the level-m block values with one affine splice across each
/// inter-block gap, and the terminal ramp +1 -> -1 ending at 1.
PiecewiseLinear build_generator(const BlockTree& tree, int m,
                                const GeneratorOptions& opts = {});

/// Piecewise-affine function that agrees exactly with the level-`level`
/// generator outside the open base interval, for any level >= 2, without
/// materializing blocks: the block zone is replaced by one affine splice.
/// With `focus` given, bumps whose windows miss the focus interval are
/// omitted (the function still agrees with the generator on the focus).
PiecewiseLinear outer_profile(const ScaleParams& params, const Interval& base, long level,
                              const std::optional<Interval>& focus = std::nullopt,
                              const GeneratorOptions& opts = {});

class GeneratorSet {
public:
  static GeneratorSet build(BlockTree tree, GeneratorOptions opts = {});
  GeneratorSet(BlockTree tree, std::vector<PiecewiseLinear> functions, GeneratorOptions opts);

  int max_level() const { return tree_.max_level(); }
  const BlockTree& tree() const { return tree_; }
  const GeneratorOptions& options() const { return opts_; }
  /// 1-based level accessor.
  const PiecewiseLinear& generator(int m) const;
  const std::vector<PiecewiseLinear>& functions() const { return functions_; }

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
    return a.tree_ == b.tree_ && a.functions_ == b.functions_ &&
           a.opts_.bump_thirds == b.opts_.bump_thirds;
  }

private:
  BlockTree tree_;
  std::vector<PiecewiseLinear> functions_;
  GeneratorOptions opts_;
};

}  // namespace oscspec
