#include "oscspec/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace oscspec {

namespace {

constexpr long kLevelCap = 1000000;

void require_probe_radius(const Rational& d) {
  if (d.sign() <= 0) throw std::invalid_argument("probe radius d must be positive");
}

std::string osc_str(const Rational& r) { return r.str(); }

}  // namespace

Interval neighborhood(const Rational& t, const Rational& d) {
  if (t < Rational(0) || t > Rational(1))
    throw std::invalid_argument("neighborhood: t must lie in [0,1]");
  require_probe_radius(d);
  return Interval::closed(max(t - d, Rational(0)), min(t + d, Rational(1)));
}

bool is_anchor(const Rational& t) { return anchor_index(t).has_value(); }

std::optional<long> anchor_index(const Rational& t) {
  if (t.is_zero()) return 0;
  if (t.num() == 1 && t.den() >= 1 && t.den() <= (std::numeric_limits<long>::max)())
    return static_cast<long>(t.den());
  return std::nullopt;
}

Rational anchor_distance(const Rational& t) {
  if (t < Rational(0) || t > Rational(1))
    throw std::invalid_argument("anchor_distance: t must lie in [0,1]");
  if (is_anchor(t)) return Rational(0);
  // 0 < t < 1 here; the nearest anchors are 1/ceil(1/t) and 1/floor(1/t),
  // and neither 0 nor 1 can beat them (1 is floor's candidate when t > 1/2).
  BigInt n0 = t.reciprocal().floor_int();
  Rational best = t;  // distance to 0
  for (const BigInt& n : {n0, BigInt(n0 + 1)}) {
    Rational d = (t - Rational(BigInt(1), n)).abs();
    if (d < best) best = d;
  }
  return best;
}

long ramp_level(long n, const Rational& d, const ScaleParams& params) {
  if (n < 0) throw std::invalid_argument("ramp_level: n must be >= 0");
  require_probe_radius(d);

  auto scan_width = [&](const Rational& bound) -> long {
    // smallest m with window_width(m) <= bound
    for (long m = 1; m <= kLevelCap; ++m)
      if (params.window_width(m) <= bound) return m;
    throw std::invalid_argument("ramp_level: d too small (level cap exceeded)");
  };

  if (n == 1) return scan_width(2 * d);          // window_width(m)/2 <= d
  if (n >= 2) return std::max(n, scan_width(2 * d));

  // n == 0: smallest k >= 2 with anchor_point(k) + window_width(k)/2 <= d.
  BigInt start = d >= Rational(1, 2) ? BigInt(2) : d.reciprocal().floor_int();
  if (start < 2) start = 2;
  if (start > kLevelCap) throw std::invalid_argument("ramp_level: d too small (level cap exceeded)");
  for (long k = static_cast<long>(start); k <= kLevelCap; ++k)
    if (anchor_point(k) + params.window_width(k) / 2 <= d) return k;
  throw std::invalid_argument("ramp_level: d too small (level cap exceeded)");
}

Rational gamma_lower(const Rational& t, const Rational& d, const GeneratorSet& gens) {
  Interval window = neighborhood(t, d);
  Rational best(0);
  for (int m = 1; m <= gens.max_level(); ++m) {
    Rational osc = gens.generator(m).oscillation(window);
    if (osc > best) best = osc;
    if (best == Rational(2)) break;
  }
  return best;
}

Rational level_oscillation(const Rational& t, const Rational& d, long level,
                           const GeneratorSet& gens) {
  if (level < 1) throw std::invalid_argument("level_oscillation: level must be >= 1");
  Interval window = neighborhood(t, d);
  if (level <= gens.max_level())
    return gens.generator(static_cast<int>(level)).oscillation(window);
  const Interval& base = gens.tree().base();
  if (!(window.hi() <= base.lo() || window.lo() >= base.hi()))
    throw std::domain_error(
        "level_oscillation: deep-level evaluation needs the window clear of the base interval");
  PiecewiseLinear profile =
      outer_profile(gens.tree().params(), base, level, window, gens.options());
  return profile.oscillation(window);
}

ConstancyCertificate constancy_radius(const Rational& t, const Rational& eps,
                                      const GeneratorSet& gens) {
  if (eps.sign() <= 0) throw std::invalid_argument("constancy_radius: eps must be positive");
  if (t < Rational(0) || t > Rational(1))
    throw std::invalid_argument("constancy_radius: t must lie in [0,1]");
  if (is_anchor(t))
    throw std::invalid_argument("constancy_radius: t lies in the accumulation set");
  const Interval& base = gens.tree().base();
  if (t >= base.lo() && t <= base.hi())
    throw std::domain_error("constancy_radius: t lies inside the base interval");

  const ScaleParams& sc = gens.tree().params();
  ConstancyCertificate cert;
  cert.anchor_dist = anchor_distance(t);
  Rational one_dist = (Rational(1) - t).abs();
  cert.d0 = min(cert.anchor_dist, one_dist) / 4;

  // Levels whose windows are wide relative to the distances; on those the
  // generator slope bound 6/window_width gives oscillation <= 12 d / kappa.
  Rational threshold = min(cert.anchor_dist, one_dist) / 2;
  if (sc.window_width(1) >= threshold) {
    long m = 1;
    while (m < kLevelCap && sc.window_width(m + 1) >= threshold) ++m;
    cert.kappa = sc.window_width(m);
  }

  cert.d = cert.d0;
  if (cert.kappa) cert.d = min(cert.d, *cert.kappa * eps / 12);
  Rational base_dist = t < base.lo() ? base.lo() - t : t - base.hi();
  cert.d = min(cert.d, base_dist / 2);

  Interval window = neighborhood(t, cert.d);
  cert.sup_osc = Rational(0);
  for (int m = 1; m <= gens.max_level(); ++m) {
    Rational osc = gens.generator(m).oscillation(window);
    if (osc > cert.sup_osc) cert.sup_osc = osc;
  }
  // Tail levels m > max_level vary only inside anchor windows (half-width
  // window_width(m)/2), the terminal window at 1 and the base interval; all
  // three stay clear of I(t,d) when the distances dominate d + window_width.
  Rational tail_clear = min(min(base_dist, one_dist), cert.anchor_dist);
  cert.tail_covered = tail_clear > cert.d + sc.window_width(gens.max_level());
  return cert;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::OscillationCertified: return "OSCILLATION_CERTIFIED";
    case Verdict::ConstancyCertified: return "CONSTANCY_CERTIFIED";
    case Verdict::UndeterminedBRegion: return "UNDETERMINED_B_REGION";
  }
  throw std::logic_error("verdict_name: bad verdict");
}

namespace {

// Max oscillation over built levels plus the smallest level attaining it;
// prefers the smallest level reaching the full oscillation 2.
OscillationEvidence measure_best(const Rational& t, const Rational& d, const GeneratorSet& gens) {
  Interval window = neighborhood(t, d);
  OscillationEvidence ev;
  ev.d = d;
  ev.oscillation = Rational(0);
  for (int m = 1; m <= gens.max_level(); ++m) {
    Rational osc = gens.generator(m).oscillation(window);
    if (osc > ev.oscillation) {
      ev.oscillation = osc;
      ev.level = m;
    }
    if (ev.oscillation == Rational(2)) break;
  }
  return ev;
}

}  // namespace

PointClass classify_point(const Rational& t, const std::vector<Rational>& d_grid,
                          const GeneratorSet& gens, const ClassifyOptions& opts) {
  if (d_grid.empty()) throw std::invalid_argument("classify_point: empty d grid");
  PointClass pc;
  pc.point = t;

  if (auto n = anchor_index(t)) {
    bool all_full = true;
    for (const Rational& d : d_grid) {
      long m = ramp_level(*n, d, gens.tree().params());
      OscillationEvidence ev;
      ev.d = d;
      ev.level = m;
      ev.deep = m > gens.max_level();
      ev.oscillation = level_oscillation(t, d, m, gens);
      all_full = all_full && ev.oscillation == Rational(2);
      pc.evidence.push_back(std::move(ev));
    }
    pc.verdict = all_full ? Verdict::OscillationCertified : Verdict::UndeterminedBRegion;
    pc.tail_note =
        "anchor point: for every d > 0 the level ramp_level(n, d) places a full swing inside "
        "I(t,d), so the oscillation profile is 2 at all scales";
    return pc;
  }

  const Interval& base = gens.tree().base();
  if (t >= base.lo() && t <= base.hi()) {
    pc.verdict = Verdict::UndeterminedBRegion;
    for (const Rational& d : d_grid) pc.evidence.push_back(measure_best(t, d, gens));
    pc.tail_note =
        "inside the base interval: nested block splittings keep full oscillation available at "
        "every built scale; finite-scale evidence is at odds with the countable-spectrum claim "
        "(thm:Omega-M)";
    return pc;
  }

  ConstancyCertificate cert = constancy_radius(t, opts.eps, gens);
  bool certified = cert.tail_covered && cert.sup_osc <= opts.eps;
  pc.constancy = std::move(cert);
  if (certified) {
    pc.verdict = Verdict::ConstancyCertified;
    pc.tail_note =
        "levels beyond the built set are constant on I(t,d) (windows, blocks and terminal ramps "
        "all miss it) or slope-bounded below eps via the wide-window bound";
  } else {
    pc.verdict = Verdict::UndeterminedBRegion;
    for (const Rational& d : d_grid) pc.evidence.push_back(measure_best(t, d, gens));
    pc.tail_note = "constancy certificate did not close (point too close to the base interval "
                   "or to 1 for the tail bound at the built depth)";
  }
  return pc;
}

Rational branch_point(const BlockTree& tree, const SignWord& prefix) {
  if (prefix.empty()) throw std::invalid_argument("branch_point: empty prefix");
  const Interval& blk = tree.block(prefix);
  Rational len = tree.params().block_length(static_cast<long>(prefix.size()));
  return blk.lo() + Rational(2, 15) * len;
}

PointClass cantor_probe(const SignWord& prefix, const std::vector<Rational>& d_grid,
                        const GeneratorSet& gens) {
  if (d_grid.empty()) throw std::invalid_argument("cantor_probe: empty d grid");
  PointClass pc;
  pc.point = branch_point(gens.tree(), prefix);
  pc.verdict = Verdict::UndeterminedBRegion;
  for (const Rational& d : d_grid) pc.evidence.push_back(measure_best(pc.point, d, gens));
  std::ostringstream note;
  note << "nested-chain point of prefix " << prefix.str()
       << ": every window I(t*,d) with d >= a block length swallows a whole block of that "
          "level, whose children split to -1/+1; oscillation 2 persists at all probed scales, "
          "at odds with the countable-spectrum claim (thm:Omega-M)";
  pc.tail_note = note.str();
  return pc;
}

SpectrumReport scan(const std::vector<Rational>& points, const std::vector<Rational>& d_grid,
                    const GeneratorSet& gens, int jobs, const ClassifyOptions& opts) {
  SpectrumReport report;
  report.c = gens.tree().params().c();
  report.max_level = gens.max_level();
  report.d_grid = d_grid;
  report.points.resize(points.size());

  auto classify_range = [&](std::atomic<std::size_t>& next) {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      report.points[i] = classify_point(points[i], d_grid, gens, opts);
    }
  };

  if (jobs <= 1 || points.size() <= 1) {
    std::atomic<std::size_t> next{0};
    classify_range(next);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs), points.size());
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back([&] { classify_range(next); });
    for (auto& th : pool) th.join();
  }

  for (const PointClass& pc : report.points) {
    switch (pc.verdict) {
      case Verdict::OscillationCertified:
        ++report.oscillation_count;
        if (!is_anchor(pc.point)) {
          std::ostringstream line;
          line << "t = " << pc.point.str()
               << ": oscillation certified outside the accumulation set; contradicts "
                  "Omega(X) = M (thm:Omega-M)";
          report.discrepancies.push_back(line.str());
        }
        break;
      case Verdict::ConstancyCertified:
        ++report.constancy_count;
        break;
      case Verdict::UndeterminedBRegion: {
        ++report.undetermined_count;
        std::ostringstream line;
        line << "t = " << pc.point.str() << ": UNDETERMINED_B_REGION";
        for (const auto& ev : pc.evidence)
          line << " [d = " << ev.d.str() << ": oscillation " << osc_str(ev.oscillation)
               << " at level " << ev.level << "]";
        line << "; finite-scale oscillation evidence inside the base interval is at odds with "
                "the countable-spectrum claim Omega(X) = M (Theorem thm:Omega-M)";
        report.discrepancies.push_back(line.str());
        break;
      }
    }
  }
  return report;
}

}  // namespace oscspec
