#pragma once

#include "oscspec/block_tree.hpp"
#include "oscspec/generators.hpp"
#include "oscspec/report.hpp"

#include <cstdint>

namespace oscspec {

/// Per-level lattice checks: nesting, disjointness, lengths, margins and
/// gaps, lexicographic order, cardinality, window disjointness, the scale
/// budget identity, plus the recorded gap-length and window-containment
/// mismatches that must never silently pass.
VerificationReport geometry_suite(const BlockTree& tree);

/// Per-level generator checks: sup-norm 1, range, baseline at 0, variation
/// locality, bump plateaus, and block-sign constancy for all words of
/// length <= min(8, max_level) at endpoints and midpoints.
VerificationReport generator_suite(const GeneratorSet& gens);

struct IsometrySuiteOptions {
  int vectors = 200;
  int max_support = 10;
  std::uint64_t seed = 20250814;
};

/// Exact l1-isometry of the span: basis vectors, fixed examples, and a
/// seeded batch of dyadic coefficient vectors, each requiring exact
/// sup-norm equality with witness attainment.
VerificationReport isometry_suite(const GeneratorSet& gens,
                                  const IsometrySuiteOptions& opts = {});

/// Oscillation-2 ramps at the anchors t_0..t_8 over the probe radii
/// {1/10, 1/100, 1/1000}, including the deep levels reached through the
/// outer profile, with minimality of the witnessing level.
VerificationReport ramp_suite(const GeneratorSet& gens);

/// Constancy certificates at reference points away from the anchors, for
/// eps in {1/10, 1/100}: positive radius, exact sup-oscillation <= eps,
/// covered tail, and monotonicity of the oscillation in the radius.
VerificationReport constancy_suite(const GeneratorSet& gens);

/// Nested-chain probes at all level-6 branch points with the grid
/// {l_6, l_8, l_10}: oscillation exactly 2 everywhere, persistence across
/// prefix lengths, and a nonempty discrepancy section.
VerificationReport cantor_suite(const GeneratorSet& gens);

struct OracleSuiteOptions {
  int combos = 20;
  int max_support = 10;
  long grid_points = 100000;
  std::uint64_t seed = 20250814;
};

/// Brute-force cross-check of sup_norm and oscillation against dense-grid
/// sampling, with exact equality once breakpoints join the grid.
VerificationReport oracle_suite(const GeneratorSet& gens, const OracleSuiteOptions& opts = {});

/// Serialization round-trip: construction -> JSON -> parse -> exact
/// structural equality of tree and generators.
VerificationReport roundtrip_suite(const GeneratorSet& gens);

}  // namespace oscspec
