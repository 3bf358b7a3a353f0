// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "taquin/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "taquin/diagram.h"
#include "taquin/dimensions.h"
#include "taquin/errors.h"
#include "taquin/estimation.h"
#include "taquin/json_io.h"
#include "taquin/manifest.h"
#include "taquin/processes.h"
#include "taquin/random.h"
#include "taquin/schutz.h"
#include "taquin/stats.h"

namespace taquin {
namespace {

using nlohmann::json;

// Raised for input that parses as flags but makes no sense together.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  // Shared by every subcommand.
  bool csv = false;
  bool json = false;
  std::string out;
  std::string manifest;
  int workers = 1;
  uint64_t seed = 0;

  std::string shape;
  std::string tableau;
  std::string input;
  int n = 0;
  int cap = -1;  // -1: per-subcommand default
  int exact_cap = 40;
  int64_t trials = 100000;
  int64_t burn_in = 0;
  int thinning = 1;
  int chains = 1;
  int64_t iters = 0;
  int64_t max_iters = 10000000;
  int iterations = 1;
  bool addlast = false;
  std::string variant = "classic";
  bool exact = false;
  std::string process = "pp";
  std::string column = "estimate";
};

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string General(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string Quoted(const std::string& text) { return "\"" + text + "\""; }

Diagram3 LoadShape(const Flags& f) {
  if (f.shape.empty()) throw UsageError("--shape is required");
  return parse_diagram(read_file(f.shape));
}

int CapOr(const Flags& f, int fallback) { return f.cap >= 0 ? f.cap : fallback; }

BigDim DimensionOf(const Diagram3& d, int cap) {
  if (d.is_planar()) return hook_dim_2d(d);
  return exact_dim_3d(d, cap);
}

EstimateOptions ToEstimateOptions(const Flags& f) {
  EstimateOptions o;
  o.trials = f.trials;
  o.seed = f.seed;
  o.burn_in = f.burn_in;
  o.thinning = f.thinning;
  o.chains = f.chains;
  o.workers = f.workers;
  return o;
}

json NullOr(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string CsvCell(const std::optional<double>& v, int digits) {
  return v ? Fixed(*v, digits) : std::string();
}

// ---------------------------------------------------------------------------

std::string RunDim(const Flags& f) {
  const Diagram3 d = LoadShape(f);
  const BigDim dim = DimensionOf(d, CapOr(f, kDefaultExactSizeCap));
  if (f.json) {
    return json{{"shape", diagram_to_json(d)},
                {"size", d.size()},
                {"dimension", dim.str()}}
               .dump() +
           "\n";
  }
  return dim.str() + "\n";
}

std::string RunMaxDim(const Flags& f) {
  if (f.n < 1) throw UsageError("--n must be at least 1");
  const auto table = max_dim_table(f.n, CapOr(f, kDefaultSearchSizeCap));
  if (f.json) {
    json rows = json::array();
    for (const MaxDimEntry& e : table) {
      json maximizers = json::array();
      for (const Diagram3& d : e.maximizers) {
        maximizers.push_back(diagram_to_json(d));
      }
      rows.push_back({{"size", e.size},
                      {"dimension", e.dimension.str()},
                      {"diagram", diagram_to_json(e.diagram)},
                      {"maximizers", maximizers},
                      {"num_diagrams", e.num_diagrams}});
    }
    return rows.dump() + "\n";
  }
  std::string text = "size,dimension,rowform\n";
  for (const MaxDimEntry& e : table) {
    text += std::to_string(e.size) + "," + e.dimension.str() + "," +
            Quoted(serialize(e.diagram)) + "\n";
  }
  return text;
}

std::string RunCotrans(const Flags& f) {
  const Diagram3 shape = LoadShape(f);
  const CotransEstimate est =
      estimate_cotransitions(shape, ToEstimateOptions(f));
  DimCache cache;
  const bool want_exact = shape.size() <= f.exact_cap;
  json rows = json::array();
  std::string text = "corner_x,corner_y,corner_z,count,frequency,exact\n";
  for (const auto& [corner, count] : est.counts) {
    std::string exact_text;
    std::optional<double> exact;
    if (want_exact) {
      const auto e = exact_cotransition(remove_box(shape, corner), shape,
                                        cache, f.exact_cap);
      exact_text = FormatRational(e.value, 6);
      exact = e.approx;
    }
    text += std::to_string(corner.x) + "," + std::to_string(corner.y) + "," +
            std::to_string(corner.z) + "," + std::to_string(count) + "," +
            Fixed(est.frequency(corner), 6) + "," + exact_text + "\n";
    rows.push_back({{"corner_x", corner.x},
                    {"corner_y", corner.y},
                    {"corner_z", corner.z},
                    {"count", count},
                    {"frequency", est.frequency(corner)},
                    {"exact", NullOr(exact)}});
  }
  if (f.json) {
    return json{{"shape", diagram_to_json(shape)},
                {"trials", est.trials},
                {"seed", est.seed},
                {"burn_in", est.burn_in},
                {"thinning", est.thinning},
                {"chains", est.chains},
                {"corners", rows}}
               .dump() +
           "\n";
  }
  return text;
}

struct GreedyRow {
  int size = 0;
  Diagram3 diagram;
  std::optional<double> estimate;
  std::optional<double> exact;
  std::string exact_text;
  std::optional<double> ratio_cotrans;
  std::optional<double> ratio_dim;
};

std::string RunGreedy(const Flags& f) {
  if (f.n < 1) throw UsageError("--n must be at least 1");
  std::vector<GreedyRow> rows;
  DimCache cache;
  if (f.exact) {
    for (const GreedyStep& s :
         greedy_sequence_exact(f.n, cache, CapOr(f, kDefaultExactSizeCap))) {
      GreedyRow row;
      row.size = s.size;
      row.diagram = s.diagram;
      row.exact = s.approx;
      row.exact_text = FormatRational(s.probability, 6);
      rows.push_back(std::move(row));
    }
  } else {
    Diagram3 previous;
    double ratio_dim = 1.0;
    for (const GreedyEstimateStep& s :
         greedy_sequence_estimated(f.n, ToEstimateOptions(f))) {
      GreedyRow row;
      row.size = s.size;
      row.diagram = s.diagram;
      row.estimate = s.estimate;
      if (s.size <= f.exact_cap) {
        const auto e =
            exact_cotransition(previous, s.diagram, cache, f.exact_cap);
        row.exact = e.approx;
        row.exact_text = FormatRational(e.value, 6);
        row.ratio_cotrans = s.estimate / e.approx;
        ratio_dim *= *row.ratio_cotrans;
        row.ratio_dim = ratio_dim;
      }
      previous = s.diagram;
      rows.push_back(std::move(row));
    }
  }

  if (f.json && f.exact) {
    json out = json::array();
    for (const GreedyRow& r : rows) {
      out.push_back({{"size", r.size},
                     {"exact_cotransition", NullOr(r.exact)},
                     {"diagram", diagram_to_json(r.diagram)}});
    }
    return out.dump() + "\n";
  }
  if (f.json) {
    json out = json::array();
    for (const GreedyRow& r : rows) {
      out.push_back({{"size", r.size},
                     {"estimate", NullOr(r.estimate)},
                     {"exact", NullOr(r.exact)},
                     {"ratio_cotrans", NullOr(r.ratio_cotrans)},
                     {"ratio_dim", NullOr(r.ratio_dim)},
                     {"diagram", diagram_to_json(r.diagram)}});
    }
    return out.dump() + "\n";
  }
  if (f.exact) {
    std::string text = "size,exact_cotransition\n";
    for (const GreedyRow& r : rows) {
      text += std::to_string(r.size) + "," + r.exact_text + "\n";
    }
    return text;
  }
  std::string text = "size,estimate,exact,ratio_cotrans,ratio_dim\n";
  for (const GreedyRow& r : rows) {
    text += std::to_string(r.size) + "," + CsvCell(r.estimate, 6) + "," +
            r.exact_text + "," + CsvCell(r.ratio_cotrans, 6) + "," +
            CsvCell(r.ratio_dim, 6) + "\n";
  }
  return text;
}

GrowthProcess ParseProcess(const std::string& name) {
  if (name == "pp") return GrowthProcess::kPseudoPlancherel;
  if (name == "plancherel2d") return GrowthProcess::kPlancherel2d;
  throw UsageError("--process must be pp or plancherel2d");
}

std::string PathCsv(const std::vector<Box>& path) {
  std::string text = "step,x,y,z\n";
  for (std::size_t i = 0; i < path.size(); ++i) {
    text += std::to_string(i + 1) + "," + std::to_string(path[i].x) + "," +
            std::to_string(path[i].y) + "," + std::to_string(path[i].z) +
            "\n";
  }
  return text;
}

std::string RunGenerate(const Flags& f) {
  if (f.n < 0) throw UsageError("--n must be non-negative");
  RandomSource rng(f.seed);
  SamplerOptions options;
  options.process = ParseProcess(f.process);
  const Tableau t = sample_pp_tableau(f.n, rng, options);
  if (f.csv) return PathCsv(t.path());
  return json{{"shape", diagram_to_json(shape_of(t))},
              {"tableau", path_to_json(t.path())}}
             .dump() +
         "\n";
}

std::string RunStep(const Flags& f) {
  if (f.tableau.empty()) throw UsageError("--tableau is required");
  if (f.iterations < 1) throw UsageError("--iterations must be positive");
  const std::string& v = f.variant;
  if (v != "classic" && v != "preserve" && v != "inverse" && v != "random") {
    throw UsageError("--variant must be classic, preserve, inverse or random");
  }
  Tableau t = parse_tableau(read_file(f.tableau));
  RandomSource rng(f.seed);
  std::optional<Nerve> nerve;
  for (int i = 0; i < f.iterations; ++i) {
    if (v == "inverse") {
      t = schutz_preserve_inverse(t);
      continue;
    }
    // schutz_rnd and schutz_preserve spelled out so the nerve is kept.
    if (v == "random") t = randomize_prefix(t, rng);
    SchutzResult r = schutz(t);
    std::vector<Box> path = r.tableau.path();
    if (v == "preserve" || (v == "random" && f.addlast)) {
      path.push_back(r.nerve.end);
    }
    t = Tableau::FromValidPath(std::move(path));
    nerve = std::move(r.nerve);
  }
  if (f.csv) return PathCsv(t.path());
  json out{{"tableau", path_to_json(t.path())}};
  if (nerve) {
    out["nerve"] = {{"steps", path_to_json(nerve->steps)},
                    {"end", box_to_json(nerve->end)}};
  }
  return out.dump() + "\n";
}

std::string RunUniformity(const Flags& f) {
  const Diagram3 shape = LoadShape(f);
  std::optional<BigDim> dim;
  if (shape.is_planar() || shape.size() <= CapOr(f, kDefaultSearchSizeCap)) {
    dim = DimensionOf(shape, CapOr(f, kDefaultSearchSizeCap));
  }
  int64_t iterations = f.iters;
  if (iterations <= 0) {
    if (!dim) throw UsageError("--iters is required when the dimension is unknown");
    const BigDim scaled = *dim * 1000;
    iterations = scaled > 100000000 ? 100000000 : scaled.convert_to<int64_t>();
  }
  std::optional<int64_t> cells;
  if (dim && *dim <= std::numeric_limits<int64_t>::max()) {
    cells = dim->convert_to<int64_t>();
  }

  std::vector<int> thinnings = {1};
  if (f.thinning > 1) thinnings.push_back(f.thinning);
  json summaries = json::array();
  std::string summary_text = "mean,sigma,chi2,dof,pvalue,thinning\n";
  std::map<int64_t, int64_t> histogram;
  for (int thinning : thinnings) {
    HistogramOptions options;
    options.chains = f.chains;
    options.thinning = thinning;
    options.burn_in = f.burn_in;
    options.workers = f.workers;
    const FrequencyHistogram h =
        run_histogram(shape, iterations, f.seed, options);
    histogram = h.count_histogram(cells);
    const GaussianSummary g = gaussian_summary(h, cells);
    std::optional<ChiSquare> chi;
    if (dim) chi = chi_square_uniform(h, *dim);
    summary_text += Fixed(g.mean, 6) + "," + Fixed(g.sigma, 6) + "," +
                    (chi ? Fixed(chi->statistic, 6) : "") + "," +
                    (chi ? std::to_string(chi->dof) : "") + "," +
                    (chi ? General(chi->p_value) : "") + "," +
                    std::to_string(thinning) + "\n";
    summaries.push_back(
        {{"mean", g.mean},
         {"sigma", g.sigma},
         {"chi2", chi ? json(chi->statistic) : json(nullptr)},
         {"dof", chi ? json(chi->dof) : json(nullptr)},
         {"pvalue", chi ? json(chi->p_value) : json(nullptr)},
         {"thinning", thinning}});
  }

  if (f.json) {
    json rows = json::array();
    for (const auto& [value, number] : histogram) {
      rows.push_back({{"count_value", value}, {"num_tableaux", number}});
    }
    return json{{"shape", diagram_to_json(shape)},
                {"iterations", iterations},
                {"chains", std::max(f.chains, 1)},
                {"histogram", rows},
                {"summary", summaries}}
               .dump() +
           "\n";
  }
  std::string text = "count_value,num_tableaux\n";
  for (const auto& [value, number] : histogram) {
    text += std::to_string(value) + "," + std::to_string(number) + "\n";
  }
  return text + summary_text;
}

std::string RunCoverage(const Flags& f) {
  Tableau start;
  if (!f.shape.empty()) {
    start = canonical_tableau(LoadShape(f));
  } else {
    if (f.n < 1) throw UsageError("--n or --shape is required");
    RandomSource rng(f.seed);
    SamplerOptions options;
    options.process = ParseProcess(f.process);
    start = sample_pp_tableau(f.n, rng, options);
  }
  const CoverageReport report =
      nerve_coverage(start, f.max_iters, DeriveSeed(f.seed, 1));
  if (f.json) {
    return json{{"iterations_to_full_coverage",
                 report.full_coverage_at ? json(*report.full_coverage_at)
                                         : json(nullptr)},
                {"num_positions", report.num_positions()},
                {"iterations", report.iterations},
                {"positions_hit", report.hits.size()}}
               .dump() +
           "\n";
  }
  return "iterations_to_full_coverage,num_positions\n" +
         (report.full_coverage_at ? std::to_string(*report.full_coverage_at)
                                  : std::string("not_reached")) +
         "," + std::to_string(report.num_positions()) + "\n";
}

// (size, probability) pairs of a greedy run, CSV or JSON.
std::vector<std::pair<int, double>> ReadGreedyRun(const std::string& text,
                                                  const std::string& column) {
  std::vector<std::pair<int, double>> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json rows;
    try {
      rows = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what());
    }
    for (const json& r : rows) {
      if (!r.contains(column) || !r[column].is_number()) {
        throw ParseError("greedy row lacks a numeric '" + column + "'");
      }
      out.emplace_back(r.at("size").get<int>(), r[column].get<double>());
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty greedy run");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) header.push_back(cell);
  }
  const auto size_at = std::find(header.begin(), header.end(), "size");
  const auto value_at = std::find(header.begin(), header.end(), column);
  if (size_at == header.end() || value_at == header.end()) {
    throw ParseError("greedy run has no 'size' and '" + column + "' columns");
  }
  const auto size_index = size_at - header.begin();
  const auto value_index = value_at - header.begin();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    cells.resize(header.size());
    if (cells[value_index].empty()) {
      throw ParseError("empty '" + column + "' value in greedy run");
    }
    try {
      out.emplace_back(std::stoi(cells[size_index]),
                       std::stod(cells[value_index]));
    } catch (const std::exception&) {
      throw ParseError("malformed greedy row: " + line);
    }
  }
  return out;
}

std::string RunNormdim(const Flags& f) {
  if (f.input.empty()) throw UsageError("--input is required");
  const auto run = ReadGreedyRun(read_file(f.input), f.column);
  double log_dim = 0.0;
  json rows = json::array();
  std::string text = "size,c_lambda\n";
  for (const auto& [size, p] : run) {
    if (!(p > 0.0)) throw ZeroFrequency("non-positive probability in run");
    log_dim -= std::log(p);
    const double c = normalized_dim(size, log_dim);
    text += std::to_string(size) + "," + Fixed(c, 9) + "\n";
    rows.push_back({{"size", size}, {"c_lambda", c}});
  }
  return f.json ? rows.dump() + "\n" : text;
}

// ---------------------------------------------------------------------------

void AddCommon(CLI::App* sub, Flags& f) {
  sub->add_flag("--csv", f.csv, "CSV output (default for tables)");
  sub->add_flag("--json", f.json, "JSON output");
  sub->add_option("--out", f.out, "write output here instead of stdout");
  sub->add_option("--manifest", f.manifest, "run manifest path");
  sub->add_option("--workers", f.workers, "worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "random seed")->capture_default_str();
}

std::map<std::string, std::string> ResolvedFlags(const CLI::App* sub) {
  std::map<std::string, std::string> flags;
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help") continue;
    if (opt->count() > 0) {
      std::string joined;
      for (const std::string& r : opt->results()) {
        if (!joined.empty()) joined += ",";
        joined += r;
      }
      flags[name] = joined;
    } else if (opt->get_expected_max() == 0) {
      flags[name] = "false";
    } else {
      flags[name] = opt->get_default_str();
    }
  }
  return flags;
}

std::string ManifestPath(const Flags& f, const std::string& subcommand) {
  if (!f.manifest.empty()) return f.manifest;
  if (!f.out.empty()) return f.out + ".manifest.json";
  return "taquin-" + subcommand + ".manifest.json";
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw ParseError("cannot write " + path);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Flags f;
  CLI::App app{"Tableaux, dimensions and growth processes on the 3D Young "
               "graph"};
  app.require_subcommand(1);
  std::map<std::string, std::function<std::string(const Flags&)>> handlers;

  auto* dim = app.add_subcommand("dim", "exact dimension of a diagram");
  dim->add_option("--shape", f.shape, "diagram JSON file")->required();
  dim->add_option("--cap", f.cap, "largest size handled exactly");
  handlers["dim"] = RunDim;

  auto* max_dim =
      app.add_subcommand("max-dim", "maximum dimension for each size <= n");
  max_dim->add_option("--n", f.n, "largest size")->required();
  max_dim->add_option("--cap", f.cap, "largest size searched");
  handlers["max-dim"] = RunMaxDim;

  auto* cotrans =
      app.add_subcommand("cotrans", "Monte Carlo co-transition estimates");
  cotrans->add_option("--shape", f.shape, "diagram JSON file")->required();
  cotrans->add_option("--trials", f.trials)->capture_default_str();
  cotrans->add_option("--burn-in", f.burn_in)->capture_default_str();
  cotrans->add_option("--thinning", f.thinning)->capture_default_str();
  cotrans->add_option("--chains", f.chains)->capture_default_str();
  cotrans->add_option("--exact-cap", f.exact_cap,
                      "fill the exact column up to this size")
      ->capture_default_str();
  handlers["cotrans"] = RunCotrans;

  auto* greedy = app.add_subcommand("greedy", "greedy sequence from the root");
  greedy->add_option("--n", f.n, "length of the sequence")->required();
  greedy->add_flag("--exact", f.exact, "exact greedy sequence only");
  greedy->add_option("--trials", f.trials, "trials per candidate")
      ->capture_default_str();
  greedy->add_option("--burn-in", f.burn_in)->capture_default_str();
  greedy->add_option("--thinning", f.thinning)->capture_default_str();
  greedy->add_option("--chains", f.chains)->capture_default_str();
  greedy->add_option("--exact-cap", f.exact_cap,
                     "fill the exact columns up to this size")
      ->capture_default_str();
  greedy->add_option("--cap", f.cap, "size cap of --exact");
  handlers["greedy"] = RunGreedy;

  auto* generate =
      app.add_subcommand("generate", "sample a tableau by a growth process");
  generate->add_option("--n", f.n, "number of boxes")->required();
  generate->add_option("--process", f.process, "pp or plancherel2d")
      ->capture_default_str();
  handlers["generate"] = RunGenerate;

  auto* step = app.add_subcommand("step", "apply a Schutzenberger transform");
  step->add_option("--tableau", f.tableau, "tableau JSON file")->required();
  step->add_option("--variant", f.variant, "classic, preserve, inverse or random")
      ->capture_default_str();
  step->add_option("--iterations", f.iterations)->capture_default_str();
  step->add_flag("--addlast", f.addlast, "random variant: keep the shape");
  handlers["step"] = RunStep;

  auto* uniformity =
      app.add_subcommand("uniformity", "frequency histogram of the generator");
  uniformity->add_option("--shape", f.shape, "diagram JSON file")->required();
  uniformity->add_option("--iters", f.iters,
                         "iterations (default 1000 x dim, at most 1e8)");
  uniformity->add_option("--chains", f.chains)->capture_default_str();
  uniformity->add_option("--thinning", f.thinning)->capture_default_str();
  uniformity->add_option("--burn-in", f.burn_in)->capture_default_str();
  uniformity->add_option("--cap", f.cap, "largest size for the exact dim");
  handlers["uniformity"] = RunUniformity;

  auto* coverage =
      app.add_subcommand("coverage", "iterations until every corner is hit");
  coverage->add_option("--n", f.n, "size of a sampled pseudo-Plancherel shape");
  coverage->add_option("--shape", f.shape, "use this diagram instead");
  coverage->add_option("--process", f.process)->capture_default_str();
  coverage->add_option("--max-iters", f.max_iters)->capture_default_str();
  handlers["coverage"] = RunCoverage;

  auto* normdim =
      app.add_subcommand("normdim", "normalized dimensions of a greedy run");
  normdim->add_option("--input", f.input, "greedy CSV or JSON")->required();
  normdim->add_option("--column", f.column, "estimate, exact or exact_cotransition")
      ->capture_default_str();
  handlers["normdim"] = RunNormdim;

  for (CLI::App* sub : app.get_subcommands({})) AddCommon(sub, f);

  std::vector<std::string> argv_text = {"taquin"};
  argv_text.insert(argv_text.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_text) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  RunManifest manifest;
  manifest.subcommand = name;
  manifest.argv = args;
  manifest.flags = ResolvedFlags(sub);
  manifest.seed = f.seed;
  manifest.started = UtcTimestamp();

  int code = 0;
  try {
    const std::string text = handlers.at(name)(f);
    if (f.out.empty()) {
      out << text;
      manifest.digests["stdout"] = Sha256Hex(text);
    } else {
      WriteFile(f.out, text);
      manifest.digests[f.out] = Sha256Hex(text);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    code = 1;
  } catch (const std::bad_alloc&) {
    err << "OutOfMemory: allocation failed\n";
    code = 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    code = 1;
  }
  manifest.exit_code = code;
  manifest.finished = UtcTimestamp();
  try {
    WriteFile(ManifestPath(f, name), manifest.ToJson().dump(2) + "\n");
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace taquin
