#include "oscspec/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oscspec {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  return *it;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const Json& item : j) out.push_back(rational_from_json(item));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& rs) {
  Json arr = Json::array();
  for (const Rational& r : rs) arr.push_back(rational_to_json(r));
  return arr;
}

Json intervals_to_json(const std::vector<Interval>& ivs) {
  Json arr = Json::array();
  for (const Interval& iv : ivs) arr.push_back(interval_to_json(iv));
  return arr;
}

void check_equal_intervals(const std::vector<Interval>& built, const Json& stored,
                           const char* what, int m) {
  if (!stored.is_array() || stored.size() != built.size()) {
    std::ostringstream msg;
    msg << "level " << m << ": stored " << what << " count " << stored.size()
        << " != " << built.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < built.size(); ++i) {
    if (!(interval_from_json(stored[i]) == built[i])) {
      std::ostringstream msg;
      msg << "level " << m << ": stored " << what << " #" << i
          << " differs from the rebuilt structure";
      throw std::invalid_argument(msg.str());
    }
  }
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational fields must be \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

Json interval_to_json(const Interval& iv) {
  return Json{{"lo", rational_to_json(iv.lo())},
              {"hi", rational_to_json(iv.hi())},
              {"lo_closed", iv.lo_closed()},
              {"hi_closed", iv.hi_closed()}};
}

Interval interval_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("interval fields must be JSON objects");
  return Interval(rational_from_json(field(j, "lo")), rational_from_json(field(j, "hi")),
                  field(j, "lo_closed").get<bool>(), field(j, "hi_closed").get<bool>());
}

Json tree_to_json(const BlockTree& tree) {
  Json levels = Json::array();
  for (int m = 1; m <= tree.max_level(); ++m) {
    Json blocks = Json::array();
    const auto& level = tree.level(m);
    for (std::size_t i = 0; i < level.size(); ++i) {
      SignWord word = SignWord::from_index(m, i);
      blocks.push_back(Json{{"word", word.str()}, {"interval", interval_to_json(level[i])}});
    }
    levels.push_back(Json{{"m", m},
                          {"blocks", std::move(blocks)},
                          {"external_windows", intervals_to_json(tree.external_windows(m))},
                          {"gaps", intervals_to_json(tree.consecutive_gaps(m))}});
  }
  return Json{{"c", rational_to_json(tree.params().c())},
              {"max_level", tree.max_level()},
              {"base", interval_to_json(tree.base())},
              {"levels", std::move(levels)}};
}

BlockTree tree_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("tree document must be a JSON object");
  Rational c = rational_from_json(field(j, "c"));
  int max_level = field(j, "max_level").get<int>();
  Interval base = interval_from_json(field(j, "base"));
  BlockTree tree = BlockTree::build(max_level, ScaleParams(c), base);

  const Json& levels = field(j, "levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != max_level)
    throw std::invalid_argument("tree document: levels array size != max_level");
  for (int m = 1; m <= max_level; ++m) {
    const Json& lvl = levels[static_cast<std::size_t>(m - 1)];
    if (field(lvl, "m").get<int>() != m)
      throw std::invalid_argument("tree document: levels out of order");
    const Json& blocks = field(lvl, "blocks");
    const auto& built = tree.level(m);
    if (!blocks.is_array() || blocks.size() != built.size())
      throw std::invalid_argument("tree document: block count mismatch");
    for (std::size_t i = 0; i < built.size(); ++i) {
      const Json& b = blocks[i];
      SignWord word = SignWord::from_string(field(b, "word").get<std::string>());
      if (word.index() != i || word.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("tree document: block word out of lexicographic order");
      if (!(interval_from_json(field(b, "interval")) == built[i]))
        throw std::invalid_argument("tree document: stored block differs from rebuilt block");
    }
    check_equal_intervals(tree.external_windows(m), field(lvl, "external_windows"),
                          "external_windows", m);
    check_equal_intervals(tree.consecutive_gaps(m), field(lvl, "gaps"), "gaps", m);
  }
  return tree;
}

Json generators_to_json(const GeneratorSet& gens) {
  Json functions = Json::array();
  for (int m = 1; m <= gens.max_level(); ++m) {
    const PiecewiseLinear& f = gens.generator(m);
    functions.push_back(
        Json{{"m", m}, {"xs", rationals_to_json(f.xs())}, {"ys", rationals_to_json(f.ys())}});
  }
  return Json{{"max_level", gens.max_level()},
              {"bump_thirds", gens.options().bump_thirds},
              {"functions", std::move(functions)}};
}

Json construction_to_json(const GeneratorSet& gens) {
  return Json{{"tree", tree_to_json(gens.tree())}, {"generators", generators_to_json(gens)}};
}

GeneratorSet construction_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("construction document must be a JSON object");
  BlockTree tree = tree_from_json(field(j, "tree"));
  const Json& g = field(j, "generators");
  if (field(g, "max_level").get<int>() != tree.max_level())
    throw std::invalid_argument("construction document: generator/tree max_level mismatch");
  GeneratorOptions opts;
  opts.bump_thirds = field(g, "bump_thirds").get<bool>();
  const Json& functions = field(g, "functions");
  if (!functions.is_array() || static_cast<int>(functions.size()) != tree.max_level())
    throw std::invalid_argument("construction document: function count != max_level");
  std::vector<PiecewiseLinear> fs;
  fs.reserve(functions.size());
  for (int m = 1; m <= tree.max_level(); ++m) {
    const Json& f = functions[static_cast<std::size_t>(m - 1)];
    if (field(f, "m").get<int>() != m)
      throw std::invalid_argument("construction document: functions out of order");
    fs.emplace_back(rationals_from_json(field(f, "xs")), rationals_from_json(field(f, "ys")));
  }
  return GeneratorSet(std::move(tree), std::move(fs), opts);
}

Json isometry_to_json(const IsometryCheck& check) {
  return Json{{"l1", rational_to_json(check.l1)},
              {"sup", rational_to_json(check.sup)},
              {"equal", check.equal},
              {"witness", rational_to_json(check.witness)},
              {"value_at_witness", rational_to_json(check.value_at_witness)}};
}

Json point_class_to_json(const PointClass& pc) {
  Json j{{"t", rational_to_json(pc.point)}, {"verdict", verdict_name(pc.verdict)}};
  if (pc.constancy) {
    j["d"] = rational_to_json(pc.constancy->d);
    j["sup_osc"] = rational_to_json(pc.constancy->sup_osc);
    j["tail_covered"] = pc.constancy->tail_covered;
    j["anchor_dist"] = rational_to_json(pc.constancy->anchor_dist);
    if (pc.constancy->kappa) j["kappa"] = rational_to_json(*pc.constancy->kappa);
  }
  Json evidence = Json::array();
  for (const OscillationEvidence& ev : pc.evidence)
    evidence.push_back(Json{{"d", rational_to_json(ev.d)},
                            {"level", ev.level},
                            {"oscillation", rational_to_json(ev.oscillation)},
                            {"deep", ev.deep}});
  j["evidence"] = std::move(evidence);
  if (!pc.tail_note.empty()) j["note"] = pc.tail_note;
  return j;
}

Json spectrum_report_to_json(const SpectrumReport& report) {
  Json points = Json::array();
  for (const PointClass& pc : report.points) points.push_back(point_class_to_json(pc));
  return Json{{"params",
               Json{{"c", rational_to_json(report.c)},
                    {"max_level", report.max_level},
                    {"d_grid", rationals_to_json(report.d_grid)}}},
              {"points", std::move(points)},
              {"discrepancies", report.discrepancies},
              {"counts",
               Json{{"oscillation", report.oscillation_count},
                    {"constancy", report.constancy_count},
                    {"undetermined", report.undetermined_count}}}};
}

Json verification_report_to_json(const VerificationReport& report) {
  Json entries = Json::array();
  for (const ReportEntry& e : report.entries()) {
    const char* kind = e.kind == EntryKind::Check        ? "check"
                       : e.kind == EntryKind::Discrepancy ? "discrepancy"
                                                          : "info";
    Json je{{"id", e.id}, {"anchor", e.anchor}, {"kind", kind}};
    if (e.kind == EntryKind::Check) je["ok"] = e.ok;
    if (!e.measured.empty()) je["measured"] = e.measured;
    if (!e.expected.empty()) je["expected"] = e.expected;
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(std::move(je));
  }
  return Json{{"passed", report.passed()},
              {"checks", report.check_count()},
              {"failures", report.failure_count()},
              {"discrepancies", report.discrepancy_count()},
              {"entries", std::move(entries)}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace oscspec
