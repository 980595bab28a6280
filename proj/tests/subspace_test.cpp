#include "oscspec/coeffs.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using namespace oscspec;

namespace {

const GeneratorSet& shared_gens() {
  static GeneratorSet gens = GeneratorSet::build(BlockTree::build(6, ScaleParams{}));
  return gens;
}

CoeffVector cv(std::initializer_list<Rational> entries) {
  return CoeffVector(std::vector<Rational>(entries));
}

}  // namespace

TEST_CASE("coefficient parsing") {
  CoeffVector a = CoeffVector::parse_text("1/2\n# comment\n\n-1/3\n 2 # trailing\n");
  REQUIRE(a.support_bound() == 3);
  CHECK(a.coeff(1) == Rational(1, 2));
  CHECK(a.coeff(2) == Rational(-1, 3));
  CHECK(a.coeff(3) == Rational(2));
  CHECK(a.l1_norm() == Rational(1, 2) + Rational(1, 3) + Rational(2));
  CHECK_THROWS_AS(a.coeff(0), std::out_of_range);
  CHECK_THROWS_AS(a.coeff(4), std::out_of_range);
  CHECK_THROWS_AS(CoeffVector::parse_text("1/2\nnot a number\n"), std::invalid_argument);
  CHECK(CoeffVector::parse_text("# nothing\n").support_bound() == 0);
}

TEST_CASE("sign words treat zero as plus") {
  CHECK(cv({Rational(1, 2), Rational(-1, 3)}).signs() == SignWord::from_string("+-"));
  CHECK(cv({Rational(0), Rational(-1)}).signs() == SignWord::from_string("+-"));
  CHECK(cv({Rational(0), Rational(0)}).signs() == SignWord::from_string("++"));
}

TEST_CASE("witness point sits in the addressed block") {
  const BlockTree& tree = shared_gens().tree();
  CoeffVector a = cv({Rational(-1), Rational(1)});
  Rational w = witness_point(a, tree);
  CHECK(tree.block(SignWord::from_string("-+")).contains(w));
  CHECK(witness_point(CoeffVector{}, tree) == Rational(1, 2));
}

TEST_CASE("synthesis is the exact combination") {
  const GeneratorSet& gens = shared_gens();
  CoeffVector a = cv({Rational(1, 3), Rational(0), Rational(-2, 5)});
  PiecewiseLinear f = synthesize(a, gens);
  for (const Rational& t : {Rational(0), Rational(1, 3), Rational(1, 2),
                            Rational(16367, 16384), Rational(1)})
    CHECK(f.evaluate(t) == Rational(1, 3) * gens.generator(1).evaluate(t) -
                               Rational(2, 5) * gens.generator(3).evaluate(t));
  CHECK_THROWS_AS(synthesize(cv({Rational(1), Rational(1), Rational(1), Rational(1),
                                 Rational(1), Rational(1), Rational(1)}),
                             gens),
                  std::invalid_argument);
}

TEST_CASE("identity and cancellation") {
  const GeneratorSet& gens = shared_gens();
  CHECK(synthesize(cv({Rational(1)}), gens) == gens.generator(1));
  IsometryCheck zero = check_isometry(cv({Rational(0), Rational(0)}), gens);
  CHECK(zero.l1 == Rational(0));
  CHECK(zero.sup == Rational(0));
  CHECK(zero.equal);
}

TEST_CASE("difference of equal generators vanishes") {
  const GeneratorSet& gens = shared_gens();
  CoeffVector a = cv({Rational(1), Rational(0)});
  CoeffVector b = cv({Rational(-1), Rational(0)});
  PiecewiseLinear f = synthesize(a, gens);
  PiecewiseLinear g = synthesize(b, gens);
  std::vector<Rational> coeffs = {Rational(1), Rational(1)};
  std::vector<PiecewiseLinear> fs = {f, g};
  CHECK(linear_combine(coeffs, fs).sup_norm() == Rational(0));
}

TEST_CASE("isometry on frozen examples") {
  const GeneratorSet& gens = shared_gens();

  IsometryCheck c1 = check_isometry(cv({Rational(1, 2), Rational(-1, 2)}), gens);
  CHECK(c1.l1 == Rational(1));
  CHECK(c1.sup == Rational(1));
  CHECK(c1.value_at_witness == Rational(1));
  CHECK(c1.equal);

  IsometryCheck c2 = check_isometry(cv({Rational(1, 2), Rational(1, 2)}), gens);
  CHECK(c2.sup == Rational(1));
  CHECK(c2.equal);

  IsometryCheck c3 = check_isometry(cv({Rational(-1), Rational(1)}), gens);
  CHECK(c3.l1 == Rational(2));
  CHECK(c3.sup == Rational(2));
  CHECK(c3.value_at_witness == Rational(2));
  CHECK(c3.equal);

  IsometryCheck c4 = check_isometry(cv({Rational(0), Rational(-1)}), gens);
  CHECK(c4.l1 == Rational(1));
  CHECK(c4.value_at_witness == Rational(1));
  CHECK(c4.equal);

  IsometryCheck c5 = check_isometry(
      cv({Rational(1, 3), Rational(-1, 4), Rational(5, 7), Rational(-2, 9)}), gens);
  CHECK(c5.l1 == Rational(1, 3) + Rational(1, 4) + Rational(5, 7) + Rational(2, 9));
  CHECK(c5.equal);
}
