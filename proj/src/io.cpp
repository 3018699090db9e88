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

#include "diffuse/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include "diffuse/error.hpp"
#include "diffuse/oracles.hpp"
#include "diffuse/random.hpp"

namespace diffuse {

namespace {

using nlohmann::ordered_json;

template <typename Int>
Int parse_int(std::string_view text, std::string_view what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError,
                "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_file(std::string_view spec) {
  std::error_code ec;
  return std::filesystem::is_regular_file(std::filesystem::path(spec), ec);
}

template <typename Map>
ordered_json histogram(const Map& m) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, count] : m) out[std::to_string(key)] = count;
  return out;
}

}  // namespace

Graph load_graph(std::string_view spec) {
  if (is_file(spec)) {
    std::ifstream in{std::filesystem::path(spec)};
    return read_edge_list(in);
  }
  return parse_family_spec(spec);
}

ChipConfiguration parse_configuration(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    ordered_json parsed;
    try {
      parsed = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    if (!parsed.is_array()) throw Error(ErrorCode::kParseError, "expected a JSON array");
    std::vector<Chips> values;
    for (const auto& item : parsed) {
      if (!item.is_number_integer()) throw Error(ErrorCode::kParseError, "non-integer entry");
      values.push_back(item.get<Chips>());
    }
    return ChipConfiguration(std::move(values));
  }
  std::vector<Chips> values;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) values.push_back(parse_int<Chips>(token, "chip count"));
  return ChipConfiguration(std::move(values));
}

std::pair<Chips, Chips> parse_chip_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "chip range must look like LO..HI");
  }
  const auto lo = parse_int<Chips>(text.substr(0, dots), "range bound");
  const auto hi = parse_int<Chips>(text.substr(dots + 2), "range bound");
  if (lo > hi) throw Error(ErrorCode::kInvalidRange, std::string(text));
  return {lo, hi};
}

ChipConfiguration load_configuration(std::string_view spec, const Graph& g,
                                     std::uint64_t seed) {
  ChipConfiguration c;
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : spec.substr(colon + 1);

  if (spec == "full-degree") {
    c = full_degree_config(g);
  } else if (spec == "zero") {
    c = ChipConfiguration::constant(g.order(), 0);
  } else if (name == "const" && !arg.empty()) {
    c = ChipConfiguration::constant(g.order(), parse_int<Chips>(arg, "constant"));
  } else if (name == "millpond" && !arg.empty()) {
    c = millpond_config(g, parse_int<Vertex>(arg, "vertex"));
  } else if (name == "qf" && !arg.empty()) {
    c = qf_config(g, parse_int<Vertex>(arg, "vertex"));
  } else if (name == "random" && !arg.empty()) {
    const auto [lo, hi] = parse_chip_range(arg);
    c = random_config(g, lo, hi, seed);
  } else if (!spec.empty() && spec.front() == '[') {
    c = parse_configuration(spec);
  } else if (is_file(spec)) {
    c = parse_configuration(read_file(std::filesystem::path(spec)));
  } else {
    throw Error(ErrorCode::kParseError, "unknown configuration '" + std::string(spec) + "'");
  }

  if (c.size() != g.order()) {
    throw Error(ErrorCode::kLengthMismatch, "configuration has " + std::to_string(c.size()) +
                                                " entries, graph has " +
                                                std::to_string(g.order()));
  }
  return c;
}

ordered_json to_json(const ChipConfiguration& c) {
  ordered_json out = ordered_json::array();
  for (Chips v : c) out.push_back(v);
  return out;
}

ordered_json to_json(const PeriodOutcome& outcome) {
  ordered_json out;
  out["schema"] = kPeriodSchema;
  if (const auto* r = std::get_if<PeriodReport>(&outcome)) {
    out["pre_period"] = r->pre_period;
    out["period"] = r->period;
    out["class"] = to_string(r->classification);
    out["steps_used"] = r->steps_used;
  } else {
    const auto& ex = std::get<BudgetExhausted>(outcome);
    out["pre_period"] = nullptr;
    out["period"] = nullptr;
    out["class"] = "budget_exhausted";
    out["steps_used"] = ex.steps_used;
    out["last"] = to_json(ex.last);
  }
  return out;
}

ordered_json to_json(const TrialSummary& s, bool include_trials) {
  ordered_json out;
  out["schema"] = kTrialsSchema;
  out["graph"] = s.graph;
  out["chips"] = {s.lo, s.hi};
  out["trials"] = s.trials;
  out["seed"] = s.seed;
  out["budget"] = s.budget;
  out["all_tight"] = s.all_tight;
  out["exhausted"] = s.exhausted;
  out["period_histogram"] = histogram(s.period_histogram);
  out["pre_period_histogram"] = histogram(s.pre_period_histogram);
  if (include_trials) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : s.results) {
      ordered_json row;
      row["index"] = r.index;
      row["seed"] = r.seed;
      if (r.report) {
        row["pre_period"] = r.report->pre_period;
        row["period"] = r.report->period;
      } else {
        row["pre_period"] = nullptr;
        row["period"] = nullptr;
      }
      row["steps_used"] = r.steps_used;
      rows.push_back(std::move(row));
    }
    out["per_trial"] = std::move(rows);
  }
  return out;
}

ordered_json to_json(const StateGraphReport& report) {
  const CycleCensus census = cycle_census(report);
  ordered_json out;
  out["schema"] = kStateGraphSchema;
  out["window"] = {{"total", report.window.total},
                   {"lo", report.window.lo},
                   {"hi", report.window.hi}};
  out["node_count"] = report.node_count();
  out["escaped_count"] = report.escaped_count;
  out["cycle_count"] = report.cycles.size();
  out["cycle_length_histogram"] = histogram(census.lengths);
  out["in_degree_histogram"] = histogram(report.in_degree_histogram);
  out["conjecture_holds"] = census.conjecture_holds;
  ordered_json cycles = ordered_json::array();
  for (const auto& cycle : report.cycles) {
    cycles.push_back({{"entry", to_json(report.nodes[cycle.entry])}, {"length", cycle.length}});
  }
  out["cycles"] = std::move(cycles);
  return out;
}

ordered_json to_json(const OracleReport& report) {
  ordered_json out;
  out["schema"] = kOracleSchema;
  out["suite"] = report.suite;
  out["passed"] = report.passed();
  out["cases_checked"] = report.cases_checked;
  out["mismatches"] = report.mismatches;
  out["counterexamples"] = report.counterexamples;
  return out;
}

void write_successor_csv(std::ostream& out, const StateGraphReport& report) {
  out << "source,target\n";
  for (std::size_t i = 0; i < report.node_count(); ++i) {
    out << '"' << to_string(report.nodes[i]) << "\",";
    if (const auto& s = report.successor[i]) out << '"' << to_string(report.nodes[*s]) << "\"\n";
    else out << "escaped\n";
  }
}

}  // namespace diffuse
