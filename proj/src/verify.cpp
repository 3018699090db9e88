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

#include "diffuse/verify.hpp"

#include <sstream>
#include <variant>

#include "diffuse/error.hpp"
#include "diffuse/oracles.hpp"
#include "diffuse/periodicity.hpp"
#include "diffuse/random.hpp"

namespace diffuse {

namespace {

constexpr std::size_t kMaxListed = 20;

class Recorder {
 public:
  explicit Recorder(std::string_view suite) { report_.suite = std::string(suite); }

  void checked() { ++report_.cases_checked; }
  void mismatch(std::string what) {
    ++report_.mismatches;
    if (report_.counterexamples.size() < kMaxListed) {
      report_.counterexamples.push_back(std::move(what));
    }
  }
  OracleReport take() { return std::move(report_); }

 private:
  OracleReport report_;
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : " ") << u << '-' << v;
    first = false;
  }
  out << ']';
  return out.str();
}

std::optional<PeriodReport> finished(const PeriodOutcome& outcome) {
  if (const auto* r = std::get_if<PeriodReport>(&outcome)) return *r;
  return std::nullopt;
}

OracleReport path_full_degree(const SuiteParams& p) {
  Recorder rec("path-full-degree");
  for (std::size_t n = std::max<std::size_t>(3, p.min_n); n <= p.max_n; ++n) {
    const Graph g = generate(Family::kPath, {n});
    const auto traj = trajectory(g, full_degree_config(g), n);
    for (std::size_t t = 0; t <= n; ++t) {
      rec.checked();
      const auto predicted = path_full_degree_predict(n, t);
      if (predicted != traj[t]) {
        rec.mismatch("P_" + std::to_string(n) + " t=" + std::to_string(t) + ": predicted " +
                     to_string(predicted) + ", simulated " + to_string(traj[t]));
      }
    }
  }
  return rec.take();
}

OracleReport millpond_like(const SuiteParams& p, bool qf) {
  Recorder rec(qf ? "qf" : "millpond");
  const std::size_t cases = p.cases.value_or(100);
  const std::size_t max_vertices = p.max_vertices.value_or(30);
  for (std::size_t c = 0; c < cases; ++c) {
    Rng rng(trial_seed(p.seed, c));
    const Graph g = random_connected_bipartite(max_vertices, rng);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto layers = layer_decomposition(g, v);
      if (qf && !qf_prediction_applies(layers, g)) continue;
      const ChipConfiguration start = qf ? qf_config(g, v) : millpond_config(g, v);
      const std::size_t horizon = 2 * layers.eccentricity + 4;
      const auto traj = trajectory(g, start, horizon);
      for (std::size_t t = 0; t <= horizon; ++t) {
        rec.checked();
        const auto predicted = qf ? qf_predict(layers, g, t) : millpond_predict(layers, g, t);
        if (predicted != traj[t]) {
          rec.mismatch(describe(g) + " source " + std::to_string(v) + " t=" + std::to_string(t) +
                       ": predicted " + to_string(predicted) + ", simulated " +
                       to_string(traj[t]));
          break;
        }
      }
      if (qf) continue;
      rec.checked();
      const auto report = finished(detect_period(g, start, 4 * layers.eccentricity + 8));
      const std::size_t allowed = layers.eccentricity == 0 ? 0 : layers.eccentricity - 1;
      if (!report || report->period > 2 || report->pre_period > allowed) {
        rec.mismatch(describe(g) + " source " + std::to_string(v) +
                     ": pre-period exceeds ecc - 1 = " + std::to_string(allowed));
      }
    }
  }
  return rec.take();
}

OracleReport star_bound(const SuiteParams& p) {
  Recorder rec("star-bound");
  const std::size_t cases = p.cases.value_or(500);
  const std::size_t max_vertices = p.max_vertices.value_or(50);
  for (std::size_t c = 0; c < cases; ++c) {
    Rng rng(trial_seed(p.seed, c));
    const std::size_t n = 1 + rng.below(max_vertices);
    const Graph g = generate(Family::kStar, {n});
    const auto c0 = random_config(n, p.chip_lo, p.chip_hi, rng);
    const Chips bound = star_preperiod_bound(g, c0);
    const auto report = finished(detect_period(g, c0));
    rec.checked();
    if (!report || !report->tight() || static_cast<Chips>(report->pre_period) > bound) {
      rec.mismatch("S_" + std::to_string(n) + " " + to_string(c0) + ": bound " +
                   std::to_string(bound) + ", pre-period " +
                   (report ? std::to_string(report->pre_period) : "none") + ", period " +
                   (report ? std::to_string(report->period) : "none"));
    }
  }
  return rec.take();
}

OracleReport two_value(const SuiteParams& p) {
  Recorder rec("two-value-kn");
  const std::size_t cases = p.cases.value_or(200);
  const std::size_t max_vertices = p.max_vertices.value_or(12);
  for (std::size_t c = 0; c < cases; ++c) {
    Rng rng(trial_seed(p.seed, c));
    const std::size_t n = 1 + rng.below(max_vertices);
    const std::size_t d = 1 + rng.below(n);
    const Chips alpha = rng.uniform(p.chip_lo, p.chip_hi);
    const Chips beta = rng.uniform(p.chip_lo, p.chip_hi);
    const Graph g = generate(Family::kComplete, {n});
    std::vector<Chips> values(n, beta);
    for (std::size_t i = 0; i < d; ++i) values[i] = alpha;
    const std::size_t horizon = 3 * n + 10;
    const auto traj = trajectory(g, ChipConfiguration(values), horizon);
    for (std::size_t t = 0; t <= horizon; ++t) {
      rec.checked();
      const auto predicted = complete_two_value_predict(n, d, alpha, beta, t);
      const bool match = traj[t][0] == predicted.a && (d == n || traj[t][d] == predicted.b);
      if (!match) {
        rec.mismatch("K_" + std::to_string(n) + " d=" + std::to_string(d) + " alpha=" +
                     std::to_string(alpha) + " beta=" + std::to_string(beta) + " t=" +
                     std::to_string(t) + ": predicted (" + std::to_string(predicted.a) + "," +
                     std::to_string(predicted.b) + "), simulated " + to_string(traj[t]));
        break;
      }
    }
  }
  return rec.take();
}

std::vector<Graph> bound_families(BoundId id) {
  std::vector<Graph> out;
  switch (id) {
    case BoundId::kDeg2Edge:
      for (std::size_t n : {3, 5, 8, 12}) out.push_back(generate(Family::kPath, {n}));
      for (std::size_t n : {3, 5, 8, 12}) out.push_back(generate(Family::kCycle, {n}));
      break;
    case BoundId::kTwinPair:
    case BoundId::kTwinLock:
      for (std::size_t n : {2, 4, 7}) out.push_back(generate(Family::kComplete, {n}));
      out.push_back(generate(Family::kCompleteBipartite, {2, 3}));
      out.push_back(generate(Family::kCompleteBipartite, {4, 4}));
      for (std::size_t n : {3, 6, 10}) out.push_back(generate(Family::kStar, {n}));
      break;
    case BoundId::kWheelRim:
    case BoundId::kWheelHub:
      for (std::size_t n = 4; n <= 12; ++n) out.push_back(generate(Family::kWheel, {n}));
      break;
  }
  return out;
}

OracleReport bounds(BoundId id, const SuiteParams& p) {
  Recorder rec("bounds:" + std::string(to_string(id)));
  const std::size_t cases = p.cases.value_or(100);
  const auto graphs = p.graph ? std::vector<Graph>{*p.graph} : bound_families(id);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    const auto pairs = twins(g);
    for (std::size_t c = 0; c < cases; ++c) {
      Rng rng(trial_seed(p.seed + gi, c));
      auto c0 = random_config(g.order(), p.chip_lo, p.chip_hi, rng);
      if (id == BoundId::kTwinLock && !pairs.empty()) {
        // Start one twin pair level so the lock has something to hold.
        const Twin& t = pairs[c % pairs.size()];
        c0[t.v] = c0[t.u];
      }
      const auto traj = trajectory(g, c0, p.steps);
      const auto report = check_bound(id, g, traj);
      rec.checked();
      if (!report.holds) {
        const auto& v = *report.first_violation;
        rec.mismatch(describe(g) + " from " + to_string(c0) + ": t=" + std::to_string(v.time) +
                     " pair " + std::to_string(v.u) + "," + std::to_string(v.v) + " observed " +
                     std::to_string(v.observed) + " > bound " + std::to_string(v.bound));
      }
    }
  }
  return rec.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names = {"path-full-degree", "millpond", "qf", "star-bound",
                                    "two-value-kn"};
  for (BoundId id : {BoundId::kDeg2Edge, BoundId::kTwinPair, BoundId::kTwinLock,
                     BoundId::kWheelRim, BoundId::kWheelHub}) {
    names.push_back("bounds:" + std::string(to_string(id)));
  }
  return names;
}

OracleReport verify_oracle(std::string_view suite, const SuiteParams& params) {
  if (suite == "path-full-degree") return path_full_degree(params);
  if (suite == "millpond") return millpond_like(params, false);
  if (suite == "qf") return millpond_like(params, true);
  if (suite == "star-bound") return star_bound(params);
  if (suite == "two-value-kn") return two_value(params);
  if (suite.starts_with("bounds:")) {
    if (auto id = parse_bound_id(suite.substr(7))) return bounds(*id, params);
  }
  throw Error(ErrorCode::kUnknownSuite, std::string(suite));
}

}  // namespace diffuse
