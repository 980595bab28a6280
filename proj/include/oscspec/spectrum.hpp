#pragma once

#include "oscspec/generators.hpp"
#include "oscspec/interval.hpp"
#include "oscspec/rational.hpp"
#include "oscspec/sign_word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oscspec {

/// Closed window I(t,d) = [t-d, t+d] ∩ [0,1]; requires t in [0,1], d > 0.
Interval neighborhood(const Rational& t, const Rational& d);

/// Membership in the accumulation set {0} ∪ {1/n : n >= 1}.
bool is_anchor(const Rational& t);
/// 0 for t = 0, n for t = 1/n, empty otherwise.
std::optional<long> anchor_index(const Rational& t);
/// Exact distance from t in [0,1] to the accumulation set.
Rational anchor_distance(const Rational& t);

/// Smallest level whose oscillation evidence fits inside I(anchor_point(n), d):
///   n >= 2: smallest m >= n with window_width(m) <= 2d (the bump window fits);
///   n  = 1: smallest m with window_width(m)/2 <= d (the terminal ramp fits);
///   n  = 0: smallest k >= 2 with anchor_point(k) + window_width(k)/2 <= d
///           (a whole level-k bump window fits left of d).
long ramp_level(long n, const Rational& d, const ScaleParams& params);

/// Exact max over built levels of the level oscillation on I(t,d).
Rational gamma_lower(const Rational& t, const Rational& d, const GeneratorSet& gens);

/// Oscillation of the level-`level` generator over I(t,d). Levels beyond
/// the built set are evaluated through the outer profile, which requires
/// I(t,d) to stay clear of the open base interval.
Rational level_oscillation(const Rational& t, const Rational& d, long level,
                           const GeneratorSet& gens);

struct ConstancyCertificate {
  Rational d;        // certified radius
  Rational sup_osc;  // exact sup over built levels of oscillation on I(t,d)
  bool tail_covered = false;
  Rational anchor_dist;            // distance to the accumulation set
  Rational d0;                     // (1/4) min(anchor_dist, |t-1|)
  std::optional<Rational> kappa;   // smallest wide-window width, when any level is wide
};

/// Constancy certificate at t outside the accumulation set and outside the
/// base interval: a radius d with exact measured sup-oscillation and a tail
/// bound making all deeper levels provably constant or eps-small on I(t,d).
ConstancyCertificate constancy_radius(const Rational& t, const Rational& eps,
                                      const GeneratorSet& gens);

enum class Verdict { OscillationCertified, ConstancyCertified, UndeterminedBRegion };
std::string verdict_name(Verdict v);

struct OscillationEvidence {
  Rational d;
  long level = 0;       // smallest level achieving the reported oscillation
  Rational oscillation;  // exact max oscillation found at this d
  bool deep = false;     // measured through the outer profile
};

struct PointClass {
  Rational point;
  Verdict verdict = Verdict::UndeterminedBRegion;
  std::vector<OscillationEvidence> evidence;
  std::optional<ConstancyCertificate> constancy;
  std::string tail_note;
};

struct ClassifyOptions {
  Rational eps = Rational(1, 100);  // constancy tolerance
};

PointClass classify_point(const Rational& t, const std::vector<Rational>& d_grid,
                          const GeneratorSet& gens, const ClassifyOptions& opts = {});

/// Exact rational limit of the all-minus descent through the prefix block:
/// block(prefix).lo + (2/15) * block_length(|prefix|). Lies in the interior
/// of every block of the descending chain.
Rational branch_point(const BlockTree& tree, const SignWord& prefix);

/// Probes the nested-chain point of `prefix` at each d in the grid,
/// recording the smallest level reaching oscillation 2.
PointClass cantor_probe(const SignWord& prefix, const std::vector<Rational>& d_grid,
                        const GeneratorSet& gens);

struct SpectrumReport {
  Rational c;
  int max_level = 0;
  std::vector<Rational> d_grid;
  std::vector<PointClass> points;
  std::vector<std::string> discrepancies;
  std::size_t oscillation_count = 0;
  std::size_t constancy_count = 0;
  std::size_t undetermined_count = 0;
};

SpectrumReport scan(const std::vector<Rational>& points, const std::vector<Rational>& d_grid,
                    const GeneratorSet& gens, int jobs = 1, const ClassifyOptions& opts = {});

}  // namespace oscspec
