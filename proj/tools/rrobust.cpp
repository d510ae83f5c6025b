// Copyright 2026 The rrobust Authors
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

// rrobust — command-line frontend for digraph robustness analysis.
//
// Commands:
//   rmax | rs | fmax | bounds   analyze a graph file (JSON report on stdout)
//   gen                         emit a seeded random graph as an edge list
//   bench                       benchmark harness (CSV on stdout or --out)
//
// Exit codes: 0 success; 2 unusable input (bad flags, unparsable file);
// 3 internal inconsistency (a certificate failed its replay — indicates a
// solver bug); 4 time limit reached before the requested value was proven.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rrobust/exhaustive.hpp"
#include "rrobust/graph.hpp"
#include "rrobust/random_graphs.hpp"
#include "rrobust/robustness.hpp"

namespace {

using nlohmann::json;
using rrobust::Digraph;

constexpr const char* kToolVersion = "1.0.0";
constexpr const char* kReportSchema = "rrobust-report-1";
constexpr const char* kBenchSchema = "rrobust-bench-1";
constexpr const char* kTimeLimitEnv = "RROBUST_TIME_LIMIT";
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kExitTimeLimit = 4;
// Exhaustive search walks all ordered disjoint subset pairs (3^n of them);
// past this point a single query stops being interactive.
constexpr int kExhaustiveCap = 14;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Graph file I/O
// ---------------------------------------------------------------------------

// Canonical edge-list text: "n m" header, then one "i j" line per directed
// edge in lexicographic order, 1-based vertex ids.
std::string serialize_graph(const Digraph& d) {
  auto edges = d.edges();
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << d.n() << ' ' << edges.size() << '\n';
  for (auto [i, j] : edges) out << i << ' ' << j << '\n';
  return out.str();
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

Digraph parse_adjacency_csv(const std::vector<std::string>& lines,
                            bool undirected) {
  const int n = int(lines.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    std::istringstream row(lines[std::size_t(i - 1)]);
    std::string cell;
    int j = 0;
    while (std::getline(row, cell, ',')) {
      ++j;
      if (j > n) throw UsageError("adjacency row has more entries than rows");
      std::istringstream v(cell);
      int flag = -1;
      char extra;
      if (!(v >> flag) || (v >> extra) || (flag != 0 && flag != 1))
        throw UsageError("adjacency entries must be 0 or 1");
      if (flag == 1) edges.push_back({i, j});
    }
    if (j != n)
      throw UsageError("adjacency matrix must be square (row " +
                       std::to_string(i) + " has " + std::to_string(j) +
                       " entries, expected " + std::to_string(n) + ")");
  }
  if (undirected) {
    const auto forward = edges;
    for (auto [i, j] : forward) edges.push_back({j, i});
  }
  try {
    return Digraph::from_edge_list(n, edges);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad adjacency matrix: ") + e.what());
  }
}

Digraph parse_edge_list(const std::vector<std::string>& lines,
                        bool undirected) {
  auto two_ints = [](const std::string& line, const char* what) {
    std::istringstream in(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(in >> a >> b) || (in >> extra))
      throw UsageError(std::string("expected two integers for ") + what +
                       ", got: " + line);
    return std::pair<long long, long long>{a, b};
  };
  const auto [n, m] = two_ints(lines[0], "the `n <edge-count>` header");
  if (n < 1 || n > rrobust::kMaxVertices)
    throw UsageError("vertex count must lie in [1, 64]");
  if (m < 0 || std::size_t(m) != lines.size() - 1)
    throw UsageError("header announces " + std::to_string(m) +
                     " edges but the file lists " +
                     std::to_string(lines.size() - 1));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [i, j] = two_ints(lines[k], "an edge line");
    edges.push_back({int(i), int(j)});
    if (undirected) edges.push_back({int(j), int(i)});
  }
  try {
    return Digraph::from_edge_list(int(n), edges);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad edge list: ") + e.what());
  }
}

Digraph parse_graph_text(const std::string& text, bool undirected) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw UsageError("graph file has no content");
  if (lines[0].find(',') != std::string::npos)
    return parse_adjacency_csv(lines, undirected);
  return parse_edge_list(lines, undirected);
}

Digraph load_graph(const std::string& path, bool undirected) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str(), undirected);
}

std::string input_hash(const Digraph& d) {
  const std::string canon = serialize_graph(d);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64-bit
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", (unsigned long long)h);
  return std::string("fnv1a64:") + hex;
}

// ---------------------------------------------------------------------------
// Report plumbing
// ---------------------------------------------------------------------------

const char* status_name(rrobust::SolveStatus s) {
  switch (s) {
    case rrobust::SolveStatus::Optimal: return "Optimal";
    case rrobust::SolveStatus::Infeasible: return "Infeasible";
    case rrobust::SolveStatus::TimeLimit: return "TimeLimit";
    case rrobust::SolveStatus::NodeLimit: return "NodeLimit";
    case rrobust::SolveStatus::Aborted: return "Aborted";
  }
  return "?";
}

json range_json(const rrobust::ValueRange& r) {
  return {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}};
}

json stage_json(const rrobust::StageSummary& s) {
  json j{{"name", s.name},
         {"status", status_name(s.status)},
         {"bound_floor", s.bound_floor},
         {"nodes", s.nodes},
         {"elapsed_seconds", s.elapsed_seconds}};
  j["optimum"] = s.optimum ? json(*s.optimum) : json(nullptr);
  j["incumbent"] = s.incumbent ? json(*s.incumbent) : json(nullptr);
  return j;
}

json subset_json(const rrobust::VertexSubset& s) { return json(s.vertices()); }

json pair_json(const rrobust::PartitionCertificate& c) {
  return {{"s1", subset_json(c.s1)}, {"s2", subset_json(c.s2)}};
}

rrobust::StageSummary exhaustive_stage(const std::string& name,
                                       double elapsed) {
  rrobust::StageSummary s;
  s.name = name;
  s.status = rrobust::SolveStatus::Optimal;
  s.bound_floor = 0;
  s.nodes = 0;
  s.elapsed_seconds = elapsed;
  return s;
}

struct AnalysisFlags {
  std::string file;
  std::string method = "milp";
  double time_limit = -1;  // < 0: unset, fall back to the environment
  bool undirected = false;
  bool compact = false;
  std::string out_path;
  std::uint64_t seed = 0;
};

std::optional<double> env_time_limit() {
  const char* raw = std::getenv(kTimeLimitEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0))
    throw UsageError(std::string(kTimeLimitEnv) +
                     " must be a positive number of seconds");
  return v;
}

rrobust::SolveConfig solve_config(const AnalysisFlags& f) {
  rrobust::SolveConfig cfg;
  if (f.time_limit > 0)
    cfg.time_limit = f.time_limit;
  else
    cfg.time_limit = env_time_limit();
  cfg.rng_seed = f.seed;
  return cfg;
}

json base_report(const char* command, const AnalysisFlags& f,
                 const Digraph& d, const rrobust::SolveConfig& cfg) {
  json j{{"schema", kReportSchema},
         {"tool_version", kToolVersion},
         {"command", command},
         {"method", f.method},
         {"seed", f.seed},
         {"input",
          {{"hash", input_hash(d)},
           {"n", d.n()},
           {"edges", d.edge_count()}}}};
  j["time_limit"] = cfg.time_limit ? json(*cfg.time_limit) : json(nullptr);
  j["certificates"] = json::object();
  j["stages"] = json::array();
  return j;
}

int emit_report(const json& report, const AnalysisFlags& f, bool proven) {
  const std::string text = f.compact ? report.dump() : report.dump(2);
  std::cout << text << '\n';
  if (!f.out_path.empty()) {
    std::ofstream out(f.out_path);
    if (!out) throw UsageError("cannot write report to: " + f.out_path);
    out << text << '\n';
  }
  return proven ? kExitOk : kExitTimeLimit;
}

void require_exhaustive_scale(const Digraph& d) {
  if (d.n() > kExhaustiveCap)
    throw UsageError("method=exhaustive is capped at n <= " +
                     std::to_string(kExhaustiveCap) +
                     " (subset pairs grow as 3^n); use --method milp");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---------------------------------------------------------------------------
// Analysis commands
// ---------------------------------------------------------------------------

int run_rmax(const AnalysisFlags& f) {
  const Digraph d = load_graph(f.file, f.undirected);
  const rrobust::SolveConfig cfg = solve_config(f);
  json report = base_report("rmax", f, d, cfg);
  bool proven = true;
  if (f.method == "exhaustive") {
    require_exhaustive_scale(d);
    const auto t0 = std::chrono::steady_clock::now();
    const int v = rrobust::determine_rmax_exhaustive(d);
    report["r_max"] = range_json({v, v, true});
    report["stages"].push_back(
        stage_json(exhaustive_stage("rmax-exhaustive", seconds_since(t0))));
  } else {
    const rrobust::RmaxReport rep = rrobust::r_max(d, cfg);
    report["r_max"] = range_json(rep.r);
    if (rep.certificate)
      report["certificates"]["r_pair"] = pair_json(*rep.certificate);
    report["stages"].push_back(stage_json(rep.stage));
    proven = rep.r.exact;
  }
  return emit_report(report, f, proven);
}

int run_rs(const AnalysisFlags& f) {
  const Digraph d = load_graph(f.file, f.undirected);
  const rrobust::SolveConfig cfg = solve_config(f);
  json report = base_report("rs", f, d, cfg);
  bool proven = true;
  if (f.method == "exhaustive") {
    require_exhaustive_scale(d);
    const auto t0 = std::chrono::steady_clock::now();
    const rrobust::RobustnessPair pair = rrobust::determine_robustness(d);
    report["r_max"] = range_json({pair.r, pair.r, true});
    report["s_max"] = range_json({pair.s, pair.s, true});
    report["stages"].push_back(
        stage_json(exhaustive_stage("rs-exhaustive", seconds_since(t0))));
  } else {
    const rrobust::RsReport rep = rrobust::rs_robustness(d, cfg);
    report["r_max"] = range_json(rep.r);
    report["s_max"] = rep.s ? range_json(*rep.s) : json(nullptr);
    report["notes"] = {{"shortcut_min_degree", rep.shortcut_min_degree},
                       {"convention_r0", rep.convention_r0}};
    if (rep.r_certificate)
      report["certificates"]["r_pair"] = pair_json(*rep.r_certificate);
    if (rep.s_certificate)
      report["certificates"]["s_pair"] = pair_json(*rep.s_certificate);
    for (const auto& st : rep.stages)
      report["stages"].push_back(stage_json(st));
    proven = rep.r.exact && rep.s.has_value() && rep.s->exact;
  }
  return emit_report(report, f, proven);
}

int run_fmax(const AnalysisFlags& f) {
  const Digraph d = load_graph(f.file, f.undirected);
  const rrobust::SolveConfig cfg = solve_config(f);
  json report = base_report("fmax", f, d, cfg);
  bool proven = true;
  if (f.method == "exhaustive") {
    require_exhaustive_scale(d);
    const auto t0 = std::chrono::steady_clock::now();
    const int v = rrobust::fmax_exhaustive(d);
    report["f_max"] = v;
    report["stages"].push_back(
        stage_json(exhaustive_stage("fmax-exhaustive", seconds_since(t0))));
  } else {
    const rrobust::FmaxReport rep = rrobust::f_max(d, cfg);
    report["f_max"] = rep.value ? json(*rep.value) : json(nullptr);
    for (const auto& st : rep.stages)
      report["stages"].push_back(stage_json(st));
    proven = rep.value.has_value();
  }
  return emit_report(report, f, proven);
}

int run_bounds(const AnalysisFlags& f) {
  if (f.method != "milp")
    throw UsageError(
        "bounds is computed from the relaxation models and is milp-only");
  const Digraph d = load_graph(f.file, f.undirected);
  const rrobust::SolveConfig cfg = solve_config(f);
  json report = base_report("bounds", f, d, cfg);
  const rrobust::BoundsReport rep = rrobust::r_max_bounds(d, cfg);
  report["bounds"] = {{"lower", range_json(rep.lower)},
                      {"upper", range_json(rep.upper)}};
  if (rep.lower_certificate)
    report["certificates"]["lower_subset"] = subset_json(*rep.lower_certificate);
  if (rep.upper_certificate)
    report["certificates"]["upper_subset"] = subset_json(*rep.upper_certificate);
  report["stages"].push_back(stage_json(rep.lower_stage));
  report["stages"].push_back(stage_json(rep.upper_stage));
  return emit_report(report, f, rep.lower.exact && rep.upper.exact);
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenFlags {
  std::string family = "digraph";
  int n = 0;
  double p = 0.5;
  int k = 1;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_gen(const GenFlags& f) {
  const auto family = rrobust::family_from_name(f.family);
  if (!family)
    throw UsageError("unknown family (expected er|digraph|kout|kin): " +
                     f.family);
  rrobust::GenSpec spec;
  spec.family = *family;
  spec.n = f.n;
  spec.p = f.p;
  spec.k = f.k;
  spec.seed = f.seed;
  const std::string text = serialize_graph(rrobust::generate(spec));
  if (f.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.out_path);
    if (!out) throw UsageError("cannot write graph to: " + f.out_path);
    out << text;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchFlags {
  std::string families = "er,digraph,kout,kin";
  int n_min = 7;
  int n_max = 12;
  int trials = 10;
  double time_limit = -1;  // < 0: environment, then 10 s
  std::vector<double> p_values{0.3, 0.5, 0.8};
  std::vector<int> k_values{3, 4, 5};
  std::uint64_t seed = 1;
  int exhaustive_cap = 12;
  std::string out_path;
};

std::vector<rrobust::GraphFamily> parse_families(const std::string& csv) {
  std::vector<rrobust::GraphFamily> out;
  std::istringstream in(csv);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto f = rrobust::family_from_name(name);
    if (!f)
      throw UsageError("unknown family (expected er|digraph|kout|kin): " +
                       name);
    out.push_back(*f);
  }
  if (out.empty()) throw UsageError("no families selected");
  return out;
}

int run_bench(const BenchFlags& f) {
  const auto families = parse_families(f.families);
  if (f.n_min < 2 || f.n_max > rrobust::kMaxVertices || f.n_min > f.n_max)
    throw UsageError("need 2 <= n-min <= n-max <= 64");
  if (f.trials < 1) throw UsageError("trials must be positive");
  if (f.n_max > f.exhaustive_cap)
    throw UsageError(
        "the exhaustive arm is capped at n <= " +
        std::to_string(f.exhaustive_cap) +
        " (override with --exhaustive-cap if you accept the blowup)");
  double limit = f.time_limit;
  if (limit <= 0) limit = env_time_limit().value_or(10.0);

  std::ofstream file_out;
  if (!f.out_path.empty()) {
    file_out.open(f.out_path);
    if (!file_out) throw UsageError("cannot write CSV to: " + f.out_path);
  }
  std::ostream& out = f.out_path.empty() ? std::cout : file_out;

  out << "# schema: " << kBenchSchema << "\n";
  out << "family,n,param,trial,seed,method,r,s,status,elapsed_seconds\n";

  rrobust::SolveConfig cfg;
  cfg.time_limit = limit;

  std::uint64_t cell_index = 0;
  for (const rrobust::GraphFamily family : families) {
    const bool probabilistic =
        family == rrobust::GraphFamily::ErdosRenyiUndirected ||
        family == rrobust::GraphFamily::RandomDigraph;
    const std::size_t params =
        probabilistic ? f.p_values.size() : f.k_values.size();
    for (int n = f.n_min; n <= f.n_max; ++n) {
      for (std::size_t pi = 0; pi < params; ++pi, ++cell_index) {
        std::ostringstream param;
        if (probabilistic)
          param << "p=" << f.p_values[pi];
        else
          param << "k=" << f.k_values[pi];

        std::vector<double> milp_times, exh_times;
        for (int trial = 0; trial < f.trials; ++trial) {
          // Documented per-trial seed schedule: reproducible from the flags.
          const std::uint64_t seed =
              f.seed + 1000003ull * cell_index + std::uint64_t(trial);
          rrobust::GenSpec spec;
          spec.family = family;
          spec.n = n;
          spec.p = probabilistic ? f.p_values[pi] : 0.5;
          spec.k = probabilistic ? 1 : f.k_values[pi];
          spec.seed = seed;

          const std::string prefix =
              std::string(rrobust::family_name(family)) + "," +
              std::to_string(n) + "," + param.str() + "," +
              std::to_string(trial) + "," + std::to_string(seed);

          Digraph d = Digraph::from_edge_list(1, {});
          try {
            d = rrobust::generate(spec);
          } catch (const std::exception& e) {
            out << prefix << ",generate,,,error: " << e.what() << ",0\n";
            out << prefix << ",milp,,,skipped,0\n";
            out << prefix << ",exhaustive,,,skipped,0\n";
            continue;
          }

          try {
            const rrobust::RsReport rep = rrobust::rs_robustness(d, cfg);
            double elapsed = 0;
            for (const auto& st : rep.stages) elapsed += st.elapsed_seconds;
            milp_times.push_back(elapsed);
            const bool proven =
                rep.r.exact && rep.s.has_value() && rep.s->exact;
            out << prefix << ",milp,";
            if (proven)
              out << rep.r.lower << ',' << rep.s->lower << ",Optimal,";
            else
              out << ",,TimeLimit,";
            out << elapsed << '\n';
          } catch (const std::exception& e) {
            out << prefix << ",milp,,,error: " << e.what() << ",0\n";
          }

          try {
            const auto t0 = std::chrono::steady_clock::now();
            const rrobust::RobustnessPair pair =
                rrobust::determine_robustness(d);
            const double elapsed = seconds_since(t0);
            exh_times.push_back(elapsed);
            out << prefix << ",exhaustive," << pair.r << ',' << pair.s
                << ",Optimal," << elapsed << '\n';
          } catch (const std::exception& e) {
            out << prefix << ",exhaustive,,,error: " << e.what() << ",0\n";
          }
        }

        const auto summarize = [&](const char* method,
                                   const std::vector<double>& times) {
          if (times.empty()) return;
          const auto [lo, hi] = std::minmax_element(times.begin(), times.end());
          double sum = 0;
          for (double t : times) sum += t;
          const std::string head = std::string(rrobust::family_name(family)) +
                                   "," + std::to_string(n) + "," +
                                   param.str() + ",";
          out << head << "min,," << method << ",,,summary," << *lo << '\n';
          out << head << "mean,," << method << ",,,summary,"
              << sum / double(times.size()) << '\n';
          out << head << "max,," << method << ",,,summary," << *hi << '\n';
        };
        summarize("milp", milp_times);
        summarize("exhaustive", exh_times);
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

void add_analysis_flags(CLI::App* cmd, AnalysisFlags& f,
                        bool with_method = true) {
  cmd->add_option("file", f.file, "graph file (edge list or adjacency CSV)")
      ->required();
  if (with_method)
    cmd->add_option("--method", f.method, "milp (default) or exhaustive")
        ->check(CLI::IsMember({"milp", "exhaustive"}));
  cmd->add_option("--time-limit", f.time_limit,
                  "per-solve limit in seconds (default: $" +
                      std::string(kTimeLimitEnv) + " or none)");
  cmd->add_flag("--undirected", f.undirected,
                "treat each input edge as a bidirectional pair");
  cmd->add_flag("--json", f.compact,
                "compact single-line JSON (default is pretty-printed)");
  cmd->add_option("--out", f.out_path, "also write the report to this file");
  cmd->add_option("--seed", f.seed, "echoed in the report; solver is "
                                    "deterministic regardless");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digraph robustness analyzer (r-, (r,s)-robustness via "
               "Laplacian integer programs)"};
  app.require_subcommand(1);

  AnalysisFlags rmax_f, rs_f, fmax_f, bounds_f;
  add_analysis_flags(app.add_subcommand("rmax", "largest r-robustness radius"),
                     rmax_f);
  add_analysis_flags(
      app.add_subcommand("rs", "lexicographic maximum (r, s) pair"), rs_f);
  add_analysis_flags(
      app.add_subcommand("fmax", "largest F with (F+1,F+1)-robustness"),
      fmax_f);
  add_analysis_flags(
      app.add_subcommand("bounds", "radius sandwich from relaxation models"),
      bounds_f);

  GenFlags gen_f;
  CLI::App* gen = app.add_subcommand("gen", "emit a seeded random graph");
  gen->add_option("--family", gen_f.family, "er | digraph | kout | kin")
      ->required();
  gen->add_option("--n", gen_f.n, "vertex count")->required();
  gen->add_option("--p", gen_f.p, "edge probability (er/digraph)");
  gen->add_option("--k", gen_f.k, "selections per vertex (kout/kin)");
  gen->add_option("--seed", gen_f.seed, "64-bit stream seed");
  gen->add_option("--out", gen_f.out_path, "write edge list here (else stdout)");

  BenchFlags bench_f;
  CLI::App* bench = app.add_subcommand("bench", "benchmark harness (CSV)");
  bench->add_option("--families", bench_f.families,
                    "comma list of er,digraph,kout,kin");
  bench->add_option("--n-min", bench_f.n_min, "smallest vertex count");
  bench->add_option("--n-max", bench_f.n_max, "largest vertex count");
  bench->add_option("--trials", bench_f.trials, "graphs per cell");
  bench->add_option("--time-limit", bench_f.time_limit,
                    "per-solve limit in seconds (default: $" +
                        std::string(kTimeLimitEnv) + " or 10)");
  bench->add_option("--p", bench_f.p_values, "probability grid");
  bench->add_option("--k", bench_f.k_values, "selection-count grid");
  bench->add_option("--seed", bench_f.seed, "base of the per-trial schedule");
  bench->add_option("--exhaustive-cap", bench_f.exhaustive_cap,
                    "refuse n above this for the exhaustive arm");
  bench->add_option("--out", bench_f.out_path, "CSV path (else stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("rmax")) return run_rmax(rmax_f);
    if (app.got_subcommand("rs")) return run_rs(rs_f);
    if (app.got_subcommand("fmax")) return run_fmax(fmax_f);
    if (app.got_subcommand("bounds")) return run_bounds(bounds_f);
    if (app.got_subcommand("gen")) return run_gen(gen_f);
    if (app.got_subcommand("bench")) return run_bench(bench_f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
