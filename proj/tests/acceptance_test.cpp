#include "oscspec/suites.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace oscspec;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Criterion {
  int index;
  std::string what;
  std::function<VerificationReport()> suite;
  double time_budget_ms = 0;       // 0 = no budget
  bool needs_discrepancies = false;  // the report must carry discrepancy entries
};

bool run_criterion(const Criterion& cr) {
  auto start = Clock::now();
  VerificationReport rep;
  std::string error;
  try {
    rep = cr.suite();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double elapsed = ms_since(start);

  bool ok = error.empty() && rep.passed();
  std::ostringstream extra;
  if (cr.time_budget_ms > 0) {
    if (elapsed >= cr.time_budget_ms) {
      ok = false;
      extra << "; over time budget " << cr.time_budget_ms << " ms";
    }
  }
  if (cr.needs_discrepancies && rep.discrepancy_count() == 0) {
    ok = false;
    extra << "; expected discrepancy entries, found none";
  }

  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.index << ": " << cr.what
            << " (" << rep.check_count() << " checks, " << rep.discrepancy_count()
            << " discrepancies, " << static_cast<long>(elapsed) << " ms)";
  if (!error.empty()) std::cout << " -- exception: " << error;
  if (!ok && error.empty()) {
    auto fails = rep.failures();
    std::size_t shown = 0;
    for (const ReportEntry* e : fails) {
      std::cout << (shown == 0 ? " -- failing: " : ", ") << e->id;
      if (++shown == 3) break;
    }
    if (fails.size() > shown) std::cout << ", +" << (fails.size() - shown) << " more";
  }
  std::cout << extra.str() << "\n";
  return ok;
}

}  // namespace

int main() {
  std::cout << "building lattice and generators: max_level = 12, c = 1/4\n";
  auto start = Clock::now();
  GeneratorSet gens = [&] {
    try {
      return GeneratorSet::build(BlockTree::build(12, ScaleParams(Rational(1, 4))));
    } catch (const std::exception& e) {
      std::cout << "[FAIL] construction: " << e.what() << "\n";
      std::exit(1);
    }
  }();
  std::cout << "construction ready in " << static_cast<long>(ms_since(start)) << " ms\n";

  const Criterion criteria[] = {
      {1, "block lattice geometry: H1-H3, window disjointness, budget identities",
       [&] { return geometry_suite(gens.tree()); }, 10000, true},
      {2, "generator shape: localization, window oscillation 2, block signs",
       [&] { return generator_suite(gens); }},
      {3, "exact l1 isometry of the span on seeded coefficient vectors",
       [&] { return isometry_suite(gens); }, 60000},
      {4, "oscillation-2 ramps at accumulation points across probe radii",
       [&] { return ramp_suite(gens); }},
      {5, "constancy certificates away from the accumulation set",
       [&] { return constancy_suite(gens); }},
      {6, "nested-chain persistence probes with discrepancy reporting",
       [&] { return cantor_suite(gens); }, 0, true},
      {7, "independent grid oracles for norms, oscillation and linearity",
       [&] { return oracle_suite(gens); }},
      {8, "serialization round-trip fidelity of every exported document",
       [&] { return roundtrip_suite(gens); }},
  };

  int failures = 0;
  for (const Criterion& cr : criteria)
    if (!run_criterion(cr)) ++failures;

  if (failures == 0)
    std::cout << "acceptance: all 8 criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " of 8 criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
