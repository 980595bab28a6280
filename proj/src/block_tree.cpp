#include "oscspec/block_tree.hpp"

#include <stdexcept>
#include <utility>

namespace oscspec {

BlockTree BlockTree::build(int max_level, ScaleParams params,
                           std::optional<Interval> base_override) {
  if (max_level < 1) throw std::invalid_argument("BlockTree: max_level must be >= 1");
  if (max_level > 24)
    throw std::invalid_argument("BlockTree: max_level > 24 would materialize > 2^25 blocks");

  Interval base = base_override ? *base_override : base_interval(params);
  validate_base(base, params);

  BlockTree tree(std::move(params), std::move(base));
  const ScaleParams& sc = tree.params_;

  {
    Rational th = sc.margin(1);
    Rational len = sc.block_length(1);
    std::vector<Interval> roots;
    roots.push_back(Interval::closed(tree.base_.lo() + th, tree.base_.lo() + th + len));
    roots.push_back(Interval::closed(tree.base_.hi() - th - len, tree.base_.hi() - th));
    if (!(roots[0].hi() < roots[1].lo()))
      throw ConstructionError("level-1 blocks overlap inside the base interval");
    tree.levels_.push_back(std::move(roots));
  }

  for (int m = 1; m < max_level; ++m) {
    const std::vector<Interval>& parents = tree.levels_.back();
    Rational th = sc.margin(m);
    Rational len = sc.block_length(m + 1);
    std::vector<Interval> next;
    next.reserve(parents.size() * 2);
    for (std::size_t i = 0; i < parents.size(); ++i) {
      const Interval& p = parents[i];
      Interval left = Interval::closed(p.lo() + th, p.lo() + th + len);
      Interval right = Interval::closed(p.hi() - th - len, p.hi() - th);
      if (!(left.hi() < right.lo()))
        throw ConstructionError("children of block " +
                                SignWord::from_index(static_cast<std::size_t>(m), i).str() +
                                " overlap");
      if (!left.strictly_inside(p) || !right.strictly_inside(p))
        throw ConstructionError("children of block " +
                                SignWord::from_index(static_cast<std::size_t>(m), i).str() +
                                " escape the parent interior");
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    for (std::size_t i = 0; i + 1 < next.size(); ++i)
      if (!(next[i].hi() < next[i + 1].lo()))
        throw ConstructionError(
            "level " + std::to_string(m + 1) + " blocks " +
            SignWord::from_index(static_cast<std::size_t>(m + 1), i).str() + " and " +
            SignWord::from_index(static_cast<std::size_t>(m + 1), i + 1).str() + " collide");
    tree.levels_.push_back(std::move(next));
  }
  return tree;
}

const std::vector<Interval>& BlockTree::level(int m) const {
  if (m < 1 || m > max_level())
    throw std::out_of_range("BlockTree: level " + std::to_string(m) + " not built (max " +
                            std::to_string(max_level()) + ")");
  return levels_[static_cast<std::size_t>(m - 1)];
}

const Interval& BlockTree::block(const SignWord& word) const {
  if (word.empty()) throw std::invalid_argument("BlockTree: empty word has no block");
  const auto& lv = level(static_cast<int>(word.size()));
  return lv[word.index()];
}

std::vector<Interval> BlockTree::consecutive_gaps(int m) const {
  const auto& lv = level(m);
  std::vector<Interval> gaps;
  gaps.reserve(lv.size() - 1);
  for (std::size_t i = 0; i + 1 < lv.size(); ++i)
    gaps.push_back(Interval::open(lv[i].hi(), lv[i + 1].lo()));
  return gaps;
}

std::vector<Interval> BlockTree::external_windows(int m) const {
  if (m < 1 || m > max_level()) throw std::out_of_range("BlockTree: bad level for windows");
  std::vector<Interval> ws;
  ws.reserve(static_cast<std::size_t>(m) + 1);
  for (long n = 0; n <= m; ++n) ws.push_back(external_window(n, m, params_));
  return ws;
}

std::vector<Interval> BlockTree::central_windows(int m) const {
  const auto& lv = level(m);
  Rational th = params_.margin(m);
  Rational child = params_.block_length(m + 1);
  std::vector<Interval> ws;
  ws.reserve(lv.size());
  for (const Interval& b : lv)
    ws.push_back(Interval::open(b.lo() + th + child, b.hi() - th - child));
  return ws;
}

}  // namespace oscspec
