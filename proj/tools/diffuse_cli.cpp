// Copyright 2026 The diffuse Authors
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

// diffuse: command-line front end for the chip diffusion engine.
//
// Exit status: 0 on success, 1 when an oracle suite finds a mismatch, 2 on
// bad input, 3 on an internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffuse/dynamics.hpp"
#include "diffuse/error.hpp"
#include "diffuse/graph.hpp"
#include "diffuse/io.hpp"
#include "diffuse/periodicity.hpp"
#include "diffuse/state_graph.hpp"
#include "diffuse/trials.hpp"
#include "diffuse/verify.hpp"

namespace {

using diffuse::Chips;
using nlohmann::ordered_json;

constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

void print(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

struct SimulateArgs {
  std::string graph;
  std::string config;
  std::uint64_t seed = 0;
  std::size_t steps = 0;
  std::string out = "json";
  bool emit_trajectory = false;
};

int simulate(const SimulateArgs& a) {
  const auto g = diffuse::load_graph(a.graph);
  auto c = diffuse::load_configuration(a.config, g, a.seed);

  std::vector<diffuse::ChipConfiguration> rows;
  if (a.emit_trajectory) rows.push_back(c);
  diffuse::ChipConfiguration next;
  for (std::size_t t = 0; t < a.steps; ++t) {
    diffuse::fire_into(g, c, next);
    std::swap(c, next);
    if (a.emit_trajectory) rows.push_back(c);
  }

  if (a.out == "csv") {
    std::cout << 't';
    for (std::size_t v = 0; v < g.order(); ++v) std::cout << ",v" << v;
    std::cout << '\n';
    auto row = [](std::size_t t, const diffuse::ChipConfiguration& x) {
      std::cout << t;
      for (Chips chips : x) std::cout << ',' << chips;
      std::cout << '\n';
    };
    if (a.emit_trajectory) {
      for (std::size_t t = 0; t < rows.size(); ++t) row(t, rows[t]);
    } else {
      row(a.steps, c);
    }
    return 0;
  }

  ordered_json doc;
  doc["schema"] = diffuse::kSimulationSchema;
  doc["graph"] = a.graph;
  doc["vertices"] = g.order();
  doc["edges"] = g.size();
  doc["steps"] = a.steps;
  doc["final"] = diffuse::to_json(c);
  if (a.emit_trajectory) {
    ordered_json traj = ordered_json::array();
    for (const auto& x : rows) traj.push_back(diffuse::to_json(x));
    doc["trajectory"] = std::move(traj);
  }
  print(doc);
  return 0;
}

struct PeriodArgs {
  std::string graph;
  std::string config;
  std::uint64_t seed = 0;
  std::size_t budget = diffuse::kDefaultBudget;
};

int period(const PeriodArgs& a) {
  const auto g = diffuse::load_graph(a.graph);
  const auto c = diffuse::load_configuration(a.config, g, a.seed);
  print(diffuse::to_json(diffuse::detect_period(g, c, a.budget)));
  return 0;
}

struct TrialsArgs {
  std::string graph;
  std::string chips;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t budget = diffuse::kDefaultBudget;
  bool summary_only = false;
};

int trials(const TrialsArgs& a) {
  const auto g = diffuse::load_graph(a.graph);
  const auto [lo, hi] = diffuse::parse_chip_range(a.chips);
  diffuse::TrialOptions options;
  options.budget = a.budget;
  const auto summary = diffuse::run_trials(g, a.graph, lo, hi, a.trials, a.seed, options);
  print(diffuse::to_json(summary, !a.summary_only));
  return 0;
}

struct OracleArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;
  std::optional<std::size_t> max_vertices;
  std::size_t min_n = 3;
  std::size_t max_n = 64;
  std::size_t steps = 100;
  std::string chips = "-20..20";
  std::string graph;
};

int oracle(const OracleArgs& a) {
  diffuse::SuiteParams p;
  p.seed = a.seed;
  p.cases = a.cases;
  p.max_vertices = a.max_vertices;
  p.min_n = a.min_n;
  p.max_n = a.max_n;
  p.steps = a.steps;
  std::tie(p.chip_lo, p.chip_hi) = diffuse::parse_chip_range(a.chips);
  if (!a.graph.empty()) p.graph = diffuse::load_graph(a.graph);
  const auto report = diffuse::verify_oracle(a.suite, p);
  print(diffuse::to_json(report));
  std::cerr << (report.passed() ? "PASS " : "FAIL ") << report.suite << ": "
            << report.cases_checked << " cases, " << report.mismatches << " mismatches\n";
  return report.passed() ? 0 : kExitMismatch;
}

struct StateGraphArgs {
  std::string graph;
  Chips total = 0;
  std::optional<Chips> lo;
  std::optional<Chips> hi;
  std::size_t cap = diffuse::kDefaultWindowCap;
  std::string dump;
};

int stategraph(const StateGraphArgs& a) {
  const auto g = diffuse::load_graph(a.graph);
  diffuse::ConfigWindow w = diffuse::ConfigWindow::nonnegative(a.total);
  if (a.lo) w.lo = *a.lo;
  if (a.hi) w.hi = *a.hi;
  const auto report = diffuse::build_state_graph(g, w, a.cap);
  if (!a.dump.empty()) {
    std::ofstream out(a.dump);
    if (!out) throw diffuse::Error(diffuse::ErrorCode::kParseError, "cannot write " + a.dump);
    diffuse::write_successor_csv(out, report);
  }
  print(diffuse::to_json(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel chip diffusion: simulation, periodicity and oracle checks"};
  app.require_subcommand(1);
  int status = 0;

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Fire a configuration for a number of steps");
  s->add_option("--graph", sim.graph, "Family spec (path:7, grid:10x20, ...) or edge-list file")
      ->required();
  s->add_option("--config", sim.config,
                "full-degree | millpond:v | qf:v | zero | const:k | random:LO..HI | [..] | file")
      ->required();
  s->add_option("--steps", sim.steps, "Number of firings")->required();
  s->add_option("--out", sim.out, "Output format")->check(CLI::IsMember({"json", "csv"}));
  s->add_flag("--emit-trajectory", sim.emit_trajectory, "Include every intermediate step");
  s->add_option("--seed", sim.seed, "Seed for the random preset");
  s->callback([&] { status = simulate(sim); });

  PeriodArgs per;
  auto* p = app.add_subcommand("period", "Detect pre-period and period");
  p->add_option("--graph", per.graph, "Family spec or edge-list file")->required();
  p->add_option("--config", per.config, "Configuration preset or file")->required();
  p->add_option("--budget", per.budget, "Maximum number of firings");
  p->add_option("--seed", per.seed, "Seed for the random preset");
  p->callback([&] { status = period(per); });

  TrialsArgs tri;
  auto* t = app.add_subcommand("trials", "Seeded random trials from uniform configurations");
  t->add_option("--graph", tri.graph, "Family spec or edge-list file")->required();
  t->add_option("--chips", tri.chips, "Chip range LO..HI")->required();
  t->add_option("--trials", tri.trials, "Number of trials")->required();
  t->add_option("--seed", tri.seed, "Master seed")->required();
  t->add_option("--budget", tri.budget, "Per-trial firing budget");
  t->add_flag("--summary-only", tri.summary_only, "Omit per-trial rows");
  t->callback([&] { status = trials(tri); });

  OracleArgs ora;
  auto* o = app.add_subcommand("oracle", "Check a closed form against the simulation");
  o->add_option("--suite", ora.suite, "Suite name")->required();
  o->add_option("--seed", ora.seed, "Seed");
  o->add_option("--cases", ora.cases, "Random cases (per graph for bounds suites)");
  o->add_option("--max-vertices", ora.max_vertices, "Largest random graph (millpond, qf, star-bound, two-value-kn)");
  o->add_option("--min-n", ora.min_n, "Smallest path (path-full-degree)");
  o->add_option("--max-n", ora.max_n, "Largest path (path-full-degree)");
  o->add_option("--steps", ora.steps, "Trajectory length for bounds suites");
  o->add_option("--chips", ora.chips, "Chip range LO..HI for random configurations");
  o->add_option("--graph", ora.graph, "Graph for bounds suites");
  o->callback([&] { status = oracle(ora); });

  StateGraphArgs sg;
  auto* g = app.add_subcommand("stategraph", "Firing map on all configurations in a window");
  g->add_option("--graph", sg.graph, "Family spec or edge-list file")->required();
  g->add_option("--total", sg.total, "Chip total C")->required();
  g->add_option("--lo", sg.lo, "Smallest entry (default 0)");
  g->add_option("--hi", sg.hi, "Largest entry (default C)");
  g->add_option("--cap", sg.cap, "Refuse windows with more configurations");
  g->add_option("--dump", sg.dump, "Write successor arcs as CSV");
  g->callback([&] { status = stategraph(sg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  } catch (const diffuse::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return status;
}
