#include "oscspec/spectrum.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace oscspec;

namespace {

const GeneratorSet& shared_gens() {
  static GeneratorSet gens = GeneratorSet::build(BlockTree::build(6, ScaleParams{}));
  return gens;
}

}  // namespace

TEST_CASE("neighborhood clips to the unit interval") {
  Interval w = neighborhood(Rational(1, 2), Rational(1, 10));
  CHECK(w == Interval::closed(Rational(2, 5), Rational(3, 5)));
  CHECK(neighborhood(Rational(0), Rational(1, 10)) ==
        Interval::closed(Rational(0), Rational(1, 10)));
  CHECK(neighborhood(Rational(1), Rational(2)) == Interval::closed(Rational(0), Rational(1)));
  CHECK_THROWS_AS(neighborhood(Rational(2), Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(neighborhood(Rational(1, 2), Rational(0)), std::invalid_argument);
}

TEST_CASE("anchor membership") {
  CHECK(is_anchor(Rational(0)));
  CHECK(is_anchor(Rational(1)));
  CHECK(is_anchor(Rational(1, 7)));
  CHECK(!is_anchor(Rational(2, 7)));
  CHECK(!is_anchor(Rational(7, 10)));
  CHECK(anchor_index(Rational(0)) == 0);
  CHECK(anchor_index(Rational(1)) == 1);
  CHECK(anchor_index(Rational(1, 12)) == 12);
  CHECK(!anchor_index(Rational(3, 5)).has_value());
}

TEST_CASE("anchor distance frozen values") {
  CHECK(anchor_distance(Rational(1, 2)) == Rational(0));
  CHECK(anchor_distance(Rational(7, 10)) == Rational(1, 5));
  CHECK(anchor_distance(Rational(9, 100)) == Rational(1, 1100));
  CHECK(anchor_distance(Rational(401, 1000)) == Rational(203, 3000));
  // equidistant between consecutive anchors
  CHECK(anchor_distance(Rational(5, 12)) == Rational(1, 12));
}

TEST_CASE("ramp level frozen values") {
  ScaleParams p;
  CHECK(ramp_level(0, Rational(1, 10), p) == 11);
  CHECK(ramp_level(0, Rational(1, 100), p) == 101);
  CHECK(ramp_level(0, Rational(1, 1000), p) == 1001);
  CHECK(ramp_level(1, Rational(1, 1000), p) == 2);
  CHECK(ramp_level(1, Rational(1, 10), p) == 1);
  CHECK(ramp_level(2, Rational(1, 10), p) == 2);
  CHECK(ramp_level(5, Rational(1, 10), p) == 5);
  CHECK(ramp_level(2, Rational(1, 100000), p) == 4);

  // minimality of the n = 0 answer: level 10 leaves the bump sticking out
  CHECK(anchor_point(11) + p.window_width(11) / 2 <= Rational(1, 10));
  CHECK(anchor_point(10) + p.window_width(10) / 2 > Rational(1, 10));
}

TEST_CASE("gamma lower bound over built levels") {
  const GeneratorSet& gens = shared_gens();
  CHECK(gamma_lower(Rational(1, 2), Rational(1, 10), gens) == Rational(2));
  CHECK(gamma_lower(Rational(7, 10), Rational(1, 200), gens) == Rational(0));
}

TEST_CASE("level oscillation routes deep levels through the outer profile") {
  const GeneratorSet& gens = shared_gens();
  CHECK(level_oscillation(Rational(0), Rational(1, 1000), 1001, gens) == Rational(2));
  CHECK(level_oscillation(Rational(0), Rational(1, 100), 101, gens) == Rational(2));
  CHECK(level_oscillation(Rational(1, 2), Rational(1, 10), 2, gens) == Rational(2));
  // deep evaluation must refuse windows overlapping the base interval
  CHECK_THROWS_AS(level_oscillation(Rational(1), Rational(1, 100), 7, gens),
                  std::domain_error);
}

TEST_CASE("constancy certificate frozen values") {
  const GeneratorSet& gens = shared_gens();
  Rational eps(1, 100);

  ConstancyCertificate a = constancy_radius(Rational(7, 10), eps, gens);
  CHECK(a.anchor_dist == Rational(1, 5));
  CHECK(a.d0 == Rational(1, 20));
  CHECK(!a.kappa.has_value());
  CHECK(a.d == Rational(1, 20));
  CHECK(a.sup_osc == Rational(0));
  CHECK(a.tail_covered);

  ConstancyCertificate b = constancy_radius(Rational(9, 100), eps, gens);
  CHECK(b.anchor_dist == Rational(1, 1100));
  CHECK(b.kappa == Rational(1, 2048));
  CHECK(b.d == Rational(1, 2457600));
  CHECK(b.sup_osc == Rational(0));
  CHECK(b.tail_covered);

  ConstancyCertificate c = constancy_radius(Rational(401, 1000), eps, gens);
  CHECK(c.anchor_dist == Rational(203, 3000));
  CHECK(c.d == Rational(203, 12000));
  CHECK(c.sup_osc == Rational(0));
  CHECK(c.tail_covered);

  CHECK_THROWS_AS(constancy_radius(Rational(1, 3), eps, gens), std::invalid_argument);
  CHECK_THROWS_AS(constancy_radius(gens.tree().base().midpoint(), eps, gens),
                  std::domain_error);
  CHECK_THROWS_AS(constancy_radius(Rational(7, 10), Rational(0), gens), std::invalid_argument);
}

TEST_CASE("classification of the three regimes") {
  const GeneratorSet& gens = shared_gens();
  std::vector<Rational> grid = {Rational(1, 10), Rational(1, 100), Rational(1, 1000)};

  PointClass away = classify_point(Rational(7, 10), grid, gens);
  CHECK(away.verdict == Verdict::ConstancyCertified);
  REQUIRE(away.constancy.has_value());
  CHECK(away.constancy->sup_osc == Rational(0));
  CHECK(away.evidence.empty());

  PointClass anchor = classify_point(Rational(1, 3), grid, gens);
  CHECK(anchor.verdict == Verdict::OscillationCertified);
  REQUIRE(anchor.evidence.size() == grid.size());
  for (const auto& ev : anchor.evidence) {
    CHECK(ev.oscillation == Rational(2));
    CHECK(!ev.deep);
  }

  PointClass zero = classify_point(Rational(0), grid, gens);
  CHECK(zero.verdict == Verdict::OscillationCertified);
  CHECK(zero.evidence[0].level == 11);
  CHECK(zero.evidence[0].deep);
  CHECK(zero.evidence[1].level == 101);
  CHECK(zero.evidence[2].level == 1001);
  for (const auto& ev : zero.evidence) CHECK(ev.oscillation == Rational(2));

  PointClass inside = classify_point(gens.tree().base().midpoint(), grid, gens);
  CHECK(inside.verdict == Verdict::UndeterminedBRegion);
  CHECK(inside.evidence.size() == grid.size());

  CHECK(verdict_name(Verdict::OscillationCertified) == "OSCILLATION_CERTIFIED");
  CHECK(verdict_name(Verdict::ConstancyCertified) == "CONSTANCY_CERTIFIED");
  CHECK(verdict_name(Verdict::UndeterminedBRegion) == "UNDETERMINED_B_REGION");
}

TEST_CASE("branch point lies in every chain block") {
  const BlockTree& tree = shared_gens().tree();
  ScaleParams p;
  SignWord prefix = SignWord::from_string("-");
  Rational t = branch_point(tree, prefix);
  CHECK(t == tree.block(prefix).lo() + Rational(2, 15) * p.block_length(1));
  SignWord w = prefix;
  for (int q = 1; q <= 6; ++q) {
    CHECK(tree.block(w).contains(t));
    if (q < 6) w = w.extended(-1);
  }
  CHECK_THROWS_AS(branch_point(tree, SignWord{}), std::invalid_argument);
}

TEST_CASE("chain probe finds splitting levels") {
  const GeneratorSet& gens = shared_gens();
  ScaleParams p;
  PointClass pc = cantor_probe(SignWord::from_string("+"),
                               {p.block_length(2), p.block_length(1)}, gens);
  CHECK(pc.verdict == Verdict::UndeterminedBRegion);
  REQUIRE(pc.evidence.size() == 2);
  // d = block_length(2): the level-2 chain block fits, its children split
  CHECK(pc.evidence[0].oscillation == Rational(2));
  CHECK(pc.evidence[0].level == 3);
  // d = block_length(1): the window swallows the inter-root splice as well
  CHECK(pc.evidence[1].oscillation == Rational(2));
  CHECK(pc.evidence[1].level == 1);
  CHECK(pc.tail_note.find("thm:Omega-M") != std::string::npos);
}

TEST_CASE("scan aggregates and reports discrepancies") {
  const GeneratorSet& gens = shared_gens();
  std::vector<Rational> points = {Rational(7, 10), Rational(1, 3),
                                  gens.tree().base().midpoint()};
  std::vector<Rational> grid = {Rational(1, 100)};

  SpectrumReport seq = scan(points, grid, gens, 1);
  CHECK(seq.max_level == 6);
  CHECK(seq.c == Rational(1, 4));
  CHECK(seq.oscillation_count == 1);
  CHECK(seq.constancy_count == 1);
  CHECK(seq.undetermined_count == 1);
  REQUIRE(seq.discrepancies.size() == 1);
  CHECK(seq.discrepancies[0].find("thm:Omega-M") != std::string::npos);

  SpectrumReport par = scan(points, grid, gens, 3);
  REQUIRE(par.points.size() == seq.points.size());
  for (std::size_t i = 0; i < par.points.size(); ++i) {
    CHECK(par.points[i].verdict == seq.points[i].verdict);
    CHECK(par.points[i].point == seq.points[i].point);
  }
  CHECK(par.discrepancies == seq.discrepancies);
}
