#include "oscspec/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace oscspec;

namespace {

const GeneratorSet& shared_gens() {
  static GeneratorSet gens = GeneratorSet::build(BlockTree::build(6, ScaleParams{}));
  return gens;
}

}  // namespace

TEST_CASE("level-1 generator frozen at c = 1/4") {
  const PiecewiseLinear& f = shared_gens().generator(1);
  std::vector<Rational> xs = {Rational(0),
                              Rational(16355, 16384),
                              Rational(16363, 16384),
                              Rational(16367, 16384),
                              Rational(16375, 16384),
                              Rational(1)};
  std::vector<Rational> ys = {Rational(-1), Rational(-1), Rational(-1),
                              Rational(1),  Rational(1),  Rational(-1)};
  CHECK(f.xs() == xs);
  CHECK(f.ys() == ys);
  CHECK(f.variation_support().size() == 2);
  CHECK(f.sup_norm() == Rational(1));
}

TEST_CASE("endpoints and range") {
  for (int m = 1; m <= 6; ++m) {
    const PiecewiseLinear& f = shared_gens().generator(m);
    CHECK(f.evaluate(Rational(0)) == Rational(-1));
    CHECK(f.evaluate(Rational(1)) == Rational(-1));
    CHECK(f.sup_norm() == Rational(1));
    for (const Rational& y : f.ys()) {
      CHECK(y >= Rational(-1));
      CHECK(y <= Rational(1));
    }
  }
}

TEST_CASE("anchor plateaus") {
  for (int m = 2; m <= 6; ++m) {
    const PiecewiseLinear& f = shared_gens().generator(m);
    for (long n = 2; n <= m; ++n) CHECK(f.evaluate(anchor_point(n)) == Rational(1));
    // the next anchor outside the family is untouched
    CHECK(f.evaluate(anchor_point(m + 1)) == Rational(-1));
  }
  CHECK(shared_gens().generator(2).evaluate(Rational(1, 4)) == Rational(-1));
  CHECK(shared_gens().generator(4).evaluate(Rational(1, 4)) == Rational(1));
}

TEST_CASE("variation region count") {
  for (int m = 1; m <= 6; ++m) {
    const PiecewiseLinear& f = shared_gens().generator(m);
    CHECK(f.variation_support().size() == 2 * (m - 1) + (1u << m));
  }
}

TEST_CASE("block values alternate by word parity") {
  const BlockTree& tree = shared_gens().tree();
  for (int m = 1; m <= 6; ++m) {
    const PiecewiseLinear& f = shared_gens().generator(m);
    const auto& blocks = tree.level(m);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Rational want(i % 2 == 0 ? -1 : 1);
      CHECK(f.evaluate(blocks[i].lo()) == want);
      CHECK(f.evaluate(blocks[i].midpoint()) == want);
      CHECK(f.evaluate(blocks[i].hi()) == want);
    }
  }
}

TEST_CASE("deeper levels are constant on a fixed block") {
  const BlockTree& tree = shared_gens().tree();
  SignWord w = SignWord::from_string("-+");
  const Interval& blk = tree.block(w);
  for (int k = 1; k <= 2; ++k) {
    Rational expect(w.sign(static_cast<std::size_t>(k) - 1));
    const PiecewiseLinear& f = shared_gens().generator(k);
    CHECK(f.evaluate(blk.lo()) == expect);
    CHECK(f.evaluate(blk.hi()) == expect);
    CHECK(f.oscillation(blk) == Rational(0));
  }
}

TEST_CASE("terminal ramp") {
  ScaleParams p;
  // m = 1: ramp runs from the last block edge to 1
  const PiecewiseLinear& f1 = shared_gens().generator(1);
  CHECK(f1.evaluate(Rational(16375, 16384)) == Rational(1));
  // m >= 2: constant +1 on [last block, 1 - eta_m/2], then affine to -1
  for (int m = 2; m <= 6; ++m) {
    const PiecewiseLinear& f = shared_gens().generator(m);
    Rational start = 1 - p.window_width(m) / 2;
    CHECK(f.evaluate(start) == Rational(1));
    CHECK(f.evaluate((start + 1) / 2) == Rational(0));
    CHECK(f.oscillation(Interval::closed(start, Rational(1))) == Rational(2));
  }
}

TEST_CASE("window oscillation is exactly 2") {
  const BlockTree& tree = shared_gens().tree();
  for (int m = 2; m <= 6; ++m) {
    const PiecewiseLinear& f = shared_gens().generator(m);
    for (int n = 1; n <= m; ++n)
      CHECK(f.oscillation(tree.external_windows(m)[static_cast<std::size_t>(n)]) ==
            Rational(2));
  }
}

TEST_CASE("outer profile agrees with the generator away from the base") {
  const BlockTree& tree = shared_gens().tree();
  const Interval& base = tree.base();
  for (int m : {2, 4, 6}) {
    const PiecewiseLinear& f = shared_gens().generator(m);
    PiecewiseLinear outer = outer_profile(tree.params(), base, m);
    std::vector<Rational> grid;
    for (const Rational& x : f.xs())
      if (x <= base.lo() || x >= base.hi()) grid.push_back(x);
    for (const Rational& x : outer.xs())
      if (x <= base.lo() || x >= base.hi()) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (const Rational& x : grid) CHECK(outer.evaluate(x) == f.evaluate(x));
  }
}

TEST_CASE("outer profile reaches deep levels with a focus") {
  ScaleParams p;
  const Interval& base = shared_gens().tree().base();
  Interval focus = Interval::closed(Rational(0), Rational(1, 1000));
  PiecewiseLinear deep = outer_profile(p, base, 1001, focus);
  CHECK(deep.oscillation(focus) == Rational(2));
  // trimming matters: without it the function would carry ~1001 bumps
  CHECK(deep.breakpoint_count() < 200);
  CHECK_THROWS_AS(outer_profile(p, base, 1), std::invalid_argument);
}

TEST_CASE("triangular bump option") {
  GeneratorOptions opts;
  opts.bump_thirds = false;
  GeneratorSet tri = GeneratorSet::build(BlockTree::build(3, ScaleParams{}), opts);
  const PiecewiseLinear& f = tri.generator(3);
  CHECK(f.evaluate(Rational(1, 2)) == Rational(1));
  CHECK(f.evaluate(Rational(1, 3)) == Rational(1));
  ScaleParams p;
  // triangle: halfway between window edge and anchor the value is 0
  CHECK(f.evaluate(Rational(1, 2) - p.window_width(3) / 4) == Rational(0));
  // triangles have no plateau, so each bump is a single variation region
  CHECK(tri.generator(3).variation_support().size() == (3 - 1) + 8);
}

TEST_CASE("set accessors") {
  const GeneratorSet& gens = shared_gens();
  CHECK(gens.max_level() == 6);
  CHECK(gens.functions().size() == 6);
  CHECK(gens.options().bump_thirds);
  CHECK_THROWS_AS(gens.generator(0), std::out_of_range);
  CHECK_THROWS_AS(gens.generator(7), std::out_of_range);
}
