#include "oscspec/piecewise.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace oscspec;

namespace {

PiecewiseLinear tent() {
  return PiecewiseLinear({Rational(0), Rational(1, 2), Rational(1)},
                         {Rational(0), Rational(1), Rational(0)});
}

}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(PiecewiseLinear({Rational(0)}, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinear({Rational(0), Rational(1, 2)}, {Rational(0), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      PiecewiseLinear({Rational(0), Rational(1), Rational(1)},
                      {Rational(0), Rational(0), Rational(0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinear({Rational(0), Rational(1)}, {Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("evaluation is exact") {
  PiecewiseLinear f = tent();
  CHECK(f.evaluate(Rational(0)) == Rational(0));
  CHECK(f.evaluate(Rational(1, 2)) == Rational(1));
  CHECK(f.evaluate(Rational(1, 3)) == Rational(2, 3));
  CHECK(f.evaluate(Rational(3, 4)) == Rational(1, 2));
  CHECK(f.evaluate(Rational(1)) == Rational(0));
  CHECK_THROWS_AS(f.evaluate(Rational(-1, 10)), std::domain_error);
  CHECK_THROWS_AS(f.evaluate(Rational(11, 10)), std::domain_error);
}

TEST_CASE("batch evaluation matches pointwise") {
  PiecewiseLinear f = tent();
  std::vector<Rational> ts = {Rational(0),      Rational(1, 7), Rational(1, 7),
                              Rational(1, 2),   Rational(2, 3), Rational(9, 10),
                              Rational(1)};
  std::vector<Rational> vals = f.evaluate_sorted(ts);
  REQUIRE(vals.size() == ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(vals[i] == f.evaluate(ts[i]));
  std::vector<Rational> bad = {Rational(1, 2), Rational(1, 3)};
  CHECK_THROWS_AS(f.evaluate_sorted(bad), std::invalid_argument);
}

TEST_CASE("sup norm and oscillation") {
  PiecewiseLinear f = tent();
  CHECK(f.sup_norm() == Rational(1));
  CHECK(PiecewiseLinear::constant(Rational(-3, 4)).sup_norm() == Rational(3, 4));

  CHECK(f.oscillation(Interval::closed(Rational(0), Rational(1))) == Rational(1));
  CHECK(f.oscillation(Interval::closed(Rational(0), Rational(1, 4))) == Rational(1, 2));
  // window straddling the peak: extremum at an interior breakpoint
  CHECK(f.oscillation(Interval::closed(Rational(1, 4), Rational(3, 4))) == Rational(1, 2));
  // window reaching outside [0,1] is clipped
  CHECK(f.oscillation(Interval::closed(Rational(-1), Rational(2))) == Rational(1));
  CHECK(f.oscillation(Interval::point(Rational(1, 2))) == Rational(0));
  CHECK_THROWS_AS(f.oscillation(Interval::closed(Rational(3, 2), Rational(2))),
                  std::domain_error);
}

TEST_CASE("variation support finds maximal stretches") {
  PiecewiseLinear f({Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)},
                    {Rational(0), Rational(0), Rational(1), Rational(-1), Rational(-1)});
  auto regions = f.variation_support();
  REQUIRE(regions.size() == 1);
  CHECK(regions[0] == Interval::closed(Rational(1, 4), Rational(3, 4)));

  CHECK(PiecewiseLinear::constant(Rational(5)).variation_support().empty());
  CHECK(tent().variation_support().size() == 1);

  PiecewiseLinear two({Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 2),
                       Rational(3, 4), Rational(1)},
                      {Rational(0), Rational(1), Rational(1), Rational(1), Rational(0),
                       Rational(0)});
  auto rs = two.variation_support();
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == Interval::closed(Rational(0), Rational(1, 8)));
  CHECK(rs[1] == Interval::closed(Rational(1, 2), Rational(3, 4)));
}

TEST_CASE("linear combinations") {
  PiecewiseLinear f = tent();
  PiecewiseLinear g({Rational(0), Rational(1, 4), Rational(1)},
                    {Rational(1), Rational(-1), Rational(-1)});

  std::vector<Rational> coeffs = {Rational(2), Rational(-1, 2)};
  std::vector<PiecewiseLinear> fs = {f, g};
  PiecewiseLinear h = linear_combine(coeffs, fs);
  for (const Rational& t :
       {Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2),
        Rational(7, 9), Rational(1)})
    CHECK(h.evaluate(t) == 2 * f.evaluate(t) - Rational(1, 2) * g.evaluate(t));

  // zero coefficients contribute no grid points
  std::vector<Rational> zc = {Rational(0), Rational(1)};
  PiecewiseLinear z = linear_combine(zc, fs);
  CHECK(z.xs() == g.xs());
  CHECK(z == g);

  std::vector<Rational> all_zero = {Rational(0), Rational(0)};
  CHECK(linear_combine(all_zero, fs) == PiecewiseLinear::constant(Rational(0)));
  CHECK(linear_combine({}, {}) == PiecewiseLinear::constant(Rational(0)));

  std::vector<Rational> wrong = {Rational(1)};
  CHECK_THROWS_AS(linear_combine(wrong, fs), std::invalid_argument);
}
