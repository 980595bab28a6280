#include "oscspec/coeffs.hpp"
#include "oscspec/json_io.hpp"
#include "oscspec/spectrum.hpp"
#include "oscspec/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace oscspec;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Config {
  Rational c = Rational(1, 4);
  int max_level = 12;
  bool bump_thirds = true;
  std::optional<Rational> base_lo;
  std::optional<Rational> base_hi;
  std::uint64_t seed = 20250814;
  int jobs = 1;
  std::string out;
};

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw std::invalid_argument("boolean value must be true/false/1/0, got '" + text + "'");
}

// Flat key=value lines; '#' starts a comment, blank lines are ignored.
void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected key=value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    try {
      if (key == "c")
        cfg.c = Rational::parse(value);
      else if (key == "max_level")
        cfg.max_level = std::stoi(value);
      else if (key == "bump_thirds")
        cfg.bump_thirds = parse_bool(value);
      else if (key == "base_lo")
        cfg.base_lo = Rational::parse(value);
      else if (key == "base_hi")
        cfg.base_hi = Rational::parse(value);
      else if (key == "seed")
        cfg.seed = std::stoull(value);
      else if (key == "jobs")
        cfg.jobs = std::stoi(value);
      else if (key == "out")
        cfg.out = value;
      else
        throw std::invalid_argument("unknown key '" + key + "'");
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

struct CommonFlags {
  std::string config_path;
  std::string c_text;
  int max_level = -1;
  std::string seed_text;
  int jobs = 0;
  std::string out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "flat key=value configuration file");
  cmd->add_option("--c", flags.c_text, "scale constant c as p/q, in (0, 1/4]");
  cmd->add_option("--max-level", flags.max_level, "number of lattice levels to build");
  cmd->add_option("--seed", flags.seed_text, "seed for randomized checks");
  cmd->add_option("--jobs", flags.jobs, "worker threads for independent checks");
  cmd->add_option("--out", flags.out, "output file path");
}

Config resolve_config(const CommonFlags& flags) {
  Config cfg;
  if (!flags.config_path.empty()) load_config_file(flags.config_path, cfg);
  if (!flags.c_text.empty()) cfg.c = Rational::parse(flags.c_text);
  if (flags.max_level > 0) cfg.max_level = flags.max_level;
  if (!flags.seed_text.empty()) cfg.seed = std::stoull(flags.seed_text);
  if (flags.jobs > 0) cfg.jobs = flags.jobs;
  if (!flags.out.empty()) cfg.out = flags.out;
  if (cfg.base_lo.has_value() != cfg.base_hi.has_value())
    throw std::invalid_argument("base_lo and base_hi must be given together");
  return cfg;
}

GeneratorSet build_generators(const Config& cfg) {
  ScaleParams params(cfg.c);
  std::optional<Interval> base;
  if (cfg.base_lo) base = Interval::closed(*cfg.base_lo, *cfg.base_hi);
  BlockTree tree = BlockTree::build(cfg.max_level, params, base);
  GeneratorOptions opts;
  opts.bump_thirds = cfg.bump_thirds;
  return GeneratorSet::build(std::move(tree), opts);
}

std::vector<Rational> parse_rational_lines(std::istream& in, const std::string& what) {
  std::vector<Rational> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    try {
      out.push_back(Rational::parse(line.substr(first, last - first + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(what + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Rational> parse_grid(const std::vector<std::string>& texts) {
  std::vector<Rational> grid;
  for (const std::string& t : texts) {
    Rational d = Rational::parse(t);
    if (d.sign() <= 0) throw std::invalid_argument("grid radii must be positive: " + t);
    grid.push_back(d);
  }
  if (grid.empty())
    grid = {Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
  return grid;
}

void write_or_print(const Json& doc, const std::string& out) {
  if (out.empty())
    std::cout << doc.dump(2) << '\n';
  else
    save_json_file(out, doc);
}

// ---- plotting ----------------------------------------------------------

double to_double(const Rational& r) {
  return std::stod(r.decimal(15));
}

void write_svg(const PiecewiseLinear& f, const std::string& title, std::ostream& os) {
  const double width = 880, height = 480;
  const double ml = 50, mr = 20, mt = 30, mb = 40;
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto sx = [&](double t) { return ml + t * pw; };
  auto sy = [&](double y) { return mt + (1.0 - (y + 1.0) / 2.0) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <text x=\"" << ml << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
     << title << "</text>\n";

  struct Tick { double t; const char* label; };
  const Tick ticks[] = {{0.0, "0"}, {0.25, "1/4"}, {1.0 / 3.0, "1/3"}, {0.5, "1/2"}, {1.0, "1"}};
  for (const Tick& tk : ticks) {
    double x = sx(tk.t);
    os << "  <line x1=\"" << x << "\" y1=\"" << mt << "\" x2=\"" << x << "\" y2=\""
       << mt + ph << "\" stroke=\"#ddd\"/>\n";
    os << "  <text x=\"" << x << "\" y=\"" << height - 18
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << tk.label
       << "</text>\n";
  }
  for (double y : {-1.0, 0.0, 1.0}) {
    double yy = sy(y);
    os << "  <line x1=\"" << ml << "\" y1=\"" << yy << "\" x2=\"" << ml + pw << "\" y2=\""
       << yy << "\" stroke=\"#ddd\"/>\n";
    os << "  <text x=\"" << ml - 8 << "\" y=\"" << yy + 4
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << y
       << "</text>\n";
  }

  os << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < f.xs().size(); ++i) {
    if (i) os << ' ';
    os << sx(to_double(f.xs()[i])) << ',' << sy(to_double(f.ys()[i]));
  }
  os << "\"/>\n</svg>\n";
}

// ---- subcommands -------------------------------------------------------

int cmd_build(const Config& cfg) {
  GeneratorSet gens = build_generators(cfg);
  std::string out = cfg.out.empty() ? "construction.json" : cfg.out;
  save_json_file(out, construction_to_json(gens));
  std::cout << "c = " << gens.tree().params().c().str() << ", base = "
            << gens.tree().base().str() << "\n";
  for (int m = 1; m <= gens.max_level(); ++m)
    std::cout << "level " << m << ": " << gens.tree().level(m).size() << " blocks, "
              << gens.generator(m).breakpoint_count() << " breakpoints\n";
  std::cout << "wrote " << out << "\n";
  return kExitPass;
}

int cmd_verify(const Config& cfg, const std::vector<std::string>& which, bool verbose) {
  GeneratorSet gens = build_generators(cfg);

  using SuiteFn = std::function<VerificationReport()>;
  std::map<std::string, SuiteFn> suites{
      {"geometry", [&] { return geometry_suite(gens.tree()); }},
      {"generators", [&] { return generator_suite(gens); }},
      {"isometry",
       [&] {
         IsometrySuiteOptions opts;
         opts.seed = cfg.seed;
         return isometry_suite(gens, opts);
       }},
      {"ramps", [&] { return ramp_suite(gens); }},
      {"constancy", [&] { return constancy_suite(gens); }},
      {"cantor", [&] { return cantor_suite(gens); }},
  };

  std::vector<std::string> selected = which;
  if (selected.empty())
    selected = {"geometry", "generators", "isometry", "ramps", "constancy", "cantor"};
  for (const std::string& name : selected)
    if (!suites.count(name)) throw std::invalid_argument("unknown check name: " + name);

  std::vector<VerificationReport> parts(selected.size());
  if (cfg.jobs > 1) {
    std::vector<std::thread> pool;
    pool.reserve(selected.size());
    for (std::size_t i = 0; i < selected.size(); ++i)
      pool.emplace_back([&, i] { parts[i] = suites.at(selected[i])(); });
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < selected.size(); ++i) parts[i] = suites.at(selected[i])();
  }

  VerificationReport report;
  for (auto& part : parts) report.merge(std::move(part));
  report.print(std::cout, verbose);
  if (!cfg.out.empty()) save_json_file(cfg.out, verification_report_to_json(report));
  return report.passed() ? kExitPass : kExitCheckFailure;
}

int cmd_plot(const Config& cfg, int m) {
  GeneratorSet gens = build_generators(cfg);
  if (m < 1 || m > gens.max_level())
    throw std::invalid_argument("plot level out of range: " + std::to_string(m));
  std::string out = cfg.out.empty() ? "phi_" + std::to_string(m) + ".svg" : cfg.out;
  std::ofstream os(out);
  if (!os) throw std::invalid_argument("cannot open file for writing: " + out);
  write_svg(gens.generator(m), "generator level " + std::to_string(m), os);
  std::cout << "wrote " << out << "\n";
  return kExitPass;
}

int cmd_sample(const Config& cfg, int m, long count, int decimals) {
  GeneratorSet gens = build_generators(cfg);
  if (m < 1 || m > gens.max_level())
    throw std::invalid_argument("sample level out of range: " + std::to_string(m));
  const PiecewiseLinear& f = gens.generator(m);

  std::vector<Rational> ts = f.xs();
  for (long k = 0; k <= count && count > 0; ++k) ts.emplace_back(k, count);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rational> vals = f.evaluate_sorted(ts);

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw std::invalid_argument("cannot open file for writing: " + cfg.out);
    os = &file;
  }
  *os << (decimals > 0 ? "t,f(t),t_decimal,f_decimal\n" : "t,f(t)\n");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    *os << ts[i].str() << ',' << vals[i].str();
    if (decimals > 0) *os << ',' << ts[i].decimal(decimals) << ',' << vals[i].decimal(decimals);
    *os << '\n';
  }
  if (!cfg.out.empty()) std::cout << "wrote " << cfg.out << "\n";
  return kExitPass;
}

int cmd_norm(const Config& cfg, const std::string& coeff_path) {
  GeneratorSet gens = build_generators(cfg);
  std::ifstream in(coeff_path);
  if (!in) throw std::invalid_argument("cannot open coefficient file: " + coeff_path);
  CoeffVector a = CoeffVector::parse(in);
  if (a.support_bound() > static_cast<std::size_t>(gens.max_level()))
    throw std::invalid_argument("coefficient support exceeds max_level");
  IsometryCheck chk = check_isometry(a, gens);
  write_or_print(isometry_to_json(chk), cfg.out);
  return chk.equal ? kExitPass : kExitCheckFailure;
}

int cmd_spectrum(const Config& cfg, const std::string& points_path,
                 const std::vector<std::string>& grid_texts) {
  GeneratorSet gens = build_generators(cfg);
  std::ifstream in(points_path);
  if (!in) throw std::invalid_argument("cannot open points file: " + points_path);
  std::vector<Rational> points = parse_rational_lines(in, points_path);
  if (points.empty()) throw std::invalid_argument("points file is empty");
  SpectrumReport report = scan(points, parse_grid(grid_texts), gens, cfg.jobs);
  write_or_print(spectrum_report_to_json(report), cfg.out);
  return kExitPass;
}

int cmd_probe(const Config& cfg, const std::string& word_text,
              const std::vector<std::string>& grid_texts) {
  GeneratorSet gens = build_generators(cfg);
  SignWord word = SignWord::from_string(word_text);
  if (word.empty() || word.size() > static_cast<std::size_t>(gens.max_level()))
    throw std::invalid_argument("prefix length must be in [1, max_level]");
  PointClass pc = cantor_probe(word, parse_grid(grid_texts), gens);
  write_or_print(point_class_to_json(pc), cfg.out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice, generator and oscillation-spectrum toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* build = app.add_subcommand("build", "construct the lattice and generators, write JSON");
  add_common_flags(build, flags);

  auto* verify = app.add_subcommand("verify", "run verification suites and report");
  add_common_flags(verify, flags);
  std::vector<std::string> which;
  verify->add_option("--which", which,
                     "subset of {geometry, generators, isometry, ramps, constancy, cantor}");
  bool verbose = false;
  verify->add_flag("--verbose", verbose, "print every report entry");

  auto* plot = app.add_subcommand("plot", "emit an SVG polyline of one generator");
  add_common_flags(plot, flags);
  int plot_m = 1;
  plot->add_option("--m", plot_m, "generator level")->required();

  auto* sample = app.add_subcommand("sample", "emit CSV samples of one generator");
  add_common_flags(sample, flags);
  int sample_m = 1;
  long sample_count = 0;
  int sample_decimals = 0;
  sample->add_option("--m", sample_m, "generator level")->required();
  sample->add_option("--count", sample_count,
                     "uniform sample count added to the breakpoints (0 = breakpoints only)");
  sample->add_option("--decimals", sample_decimals, "append decimal columns with this precision");

  auto* norm = app.add_subcommand("norm", "exact isometry check for a coefficient file");
  add_common_flags(norm, flags);
  std::string coeff_path;
  norm->add_option("coeffs", coeff_path, "file with one rational per line")->required();

  auto* spectrum = app.add_subcommand("spectrum", "classify points from a file");
  add_common_flags(spectrum, flags);
  std::string points_path;
  std::vector<std::string> grid_texts;
  spectrum->add_option("points", points_path, "file with one rational point per line")
      ->required();
  spectrum->add_option("--d", grid_texts, "probe radius p/q (repeatable)");

  auto* probe = app.add_subcommand("probe", "probe the nested-chain point of a sign word");
  add_common_flags(probe, flags);
  std::string word_text;
  std::vector<std::string> probe_grid_texts;
  probe->add_option("word", word_text, "sign word over {-, +}, e.g. +-+")->required();
  probe->add_option("--d", probe_grid_texts, "probe radius p/q (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Config cfg = resolve_config(flags);
    if (build->parsed()) return cmd_build(cfg);
    if (verify->parsed()) return cmd_verify(cfg, which, verbose);
    if (plot->parsed()) return cmd_plot(cfg, plot_m);
    if (sample->parsed()) return cmd_sample(cfg, sample_m, sample_count, sample_decimals);
    if (norm->parsed()) return cmd_norm(cfg, coeff_path);
    if (spectrum->parsed()) return cmd_spectrum(cfg, points_path, grid_texts);
    if (probe->parsed()) return cmd_probe(cfg, word_text, probe_grid_texts);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
