#include "oscspec/generators.hpp"

#include <stdexcept>
#include <utility>

namespace oscspec {

namespace {

class BreakpointBuilder {
public:
  void push(Rational x, Rational y) {
    if (!xs_.empty() && !(xs_.back() < x))
      throw std::logic_error("generator assembly: breakpoints out of order at x = " + x.str());
    xs_.push_back(std::move(x));
    ys_.push_back(std::move(y));
  }

  void push_bump(const Rational& t, const Rational& width, bool thirds) {
    Rational half = width / 2;
    if (thirds) {
      Rational third = width / 3;
      push(t - half, Rational(-1));
      push(t - half + third, Rational(1));
      push(t + half - third, Rational(1));
      push(t + half, Rational(-1));
    } else {
      push(t - half, Rational(-1));
      push(t, Rational(1));
      push(t + half, Rational(-1));
    }
  }

  PiecewiseLinear take() { return PiecewiseLinear(std::move(xs_), std::move(ys_)); }

private:
  std::vector<Rational> xs_, ys_;
};

}  // namespace

PiecewiseLinear build_generator(const BlockTree& tree, int m, const GeneratorOptions& opts) {
  const ScaleParams& sc = tree.params();
  const auto& blocks = tree.level(m);  // validates m
  Rational width = sc.window_width(m);

  BreakpointBuilder bp;
  bp.push(Rational(0), Rational(-1));
  for (long n = m; n >= 2; --n) bp.push_bump(anchor_point(n), width, opts.bump_thirds);

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Rational v(i % 2 == 0 ? -1 : 1);
    bp.push(blocks[i].lo(), v);
    bp.push(blocks[i].hi(), v);
  }

  if (m >= 2) bp.push(1 - width / 2, Rational(1));
  bp.push(Rational(1), Rational(-1));
  return bp.take();
}

PiecewiseLinear outer_profile(const ScaleParams& params, const Interval& base, long level,
                              const std::optional<Interval>& focus, const GeneratorOptions& opts) {
  if (level < 2) throw std::invalid_argument("outer_profile: level must be >= 2");
  if (level > 1000000) throw std::invalid_argument("outer_profile: level too deep");
  Rational width = params.window_width(level);
  Rational half = width / 2;

  long n_hi = level;  // smallest anchor
  long n_lo = 2;      // largest anchor
  if (focus) {
    Rational reach_hi = focus->hi() + half;
    if (reach_hi <= 0) {
      n_hi = 1;  // empty range
    } else {
      Rational bound = reach_hi.reciprocal();  // n >= 1/(hi + w/2)
      BigInt lo_idx = bound.ceil_int();
      if (lo_idx > level)
        n_hi = 1;
      else if (lo_idx > 2)
        n_lo = static_cast<long>(lo_idx);
    }
    Rational reach_lo = focus->lo() - half;
    if (reach_lo.sign() > 0) {
      BigInt hi_idx = reach_lo.reciprocal().floor_int();  // n <= 1/(lo - w/2)
      if (hi_idx < 2)
        n_hi = 1;
      else if (hi_idx < n_hi)
        n_hi = static_cast<long>(hi_idx);
    }
    if (n_hi >= n_lo && n_hi - n_lo > 100000)
      throw std::invalid_argument("outer_profile: focus spans too many anchor windows");
  }

  BreakpointBuilder bp;
  bp.push(Rational(0), Rational(-1));
  for (long n = n_hi; n >= n_lo; --n) bp.push_bump(anchor_point(n), width, opts.bump_thirds);
  bp.push(base.lo(), Rational(-1));
  bp.push(base.hi(), Rational(1));
  if (base.hi() < 1 - half) bp.push(1 - half, Rational(1));
  bp.push(Rational(1), Rational(-1));
  return bp.take();
}

GeneratorSet::GeneratorSet(BlockTree tree, std::vector<PiecewiseLinear> functions,
                           GeneratorOptions opts)
    : tree_(std::move(tree)), functions_(std::move(functions)), opts_(opts) {
  if (functions_.size() != static_cast<std::size_t>(tree_.max_level()))
    throw std::invalid_argument("GeneratorSet: one function per level required");
}

GeneratorSet GeneratorSet::build(BlockTree tree, GeneratorOptions opts) {
  std::vector<PiecewiseLinear> fns;
  fns.reserve(static_cast<std::size_t>(tree.max_level()));
  for (int m = 1; m <= tree.max_level(); ++m) fns.push_back(build_generator(tree, m, opts));
  return GeneratorSet(std::move(tree), std::move(fns), opts);
}

const PiecewiseLinear& GeneratorSet::generator(int m) const {
  if (m < 1 || m > max_level())
    throw std::out_of_range("GeneratorSet: level " + std::to_string(m) + " out of range");
  return functions_[static_cast<std::size_t>(m - 1)];
}

}  // namespace oscspec
