// Copyright 2026 The Cyclobound Authors
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

// cyclobound: analyze | verify | search | enumerate | ms.
// Exit status: 0 clean, 1 violation found, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclobound/report_json.h"

namespace {

using namespace cyclobound;

constexpr int kExitClean = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CorpusArgs {
  int min_n = 1;
  int max_n = 0;
  std::vector<std::string> filters;
  std::string shard = "0/1";
  int threads = 0;

  CorpusSpec spec() const {
    CorpusSpec s;
    s.min_n = min_n;
    s.max_n = max_n;
    for (const std::string& f : filters) add_filter(s.filter, f);
    s.shard = parse_shard(shard);
    validate(s);
    return s;
  }
};

void add_corpus_options(CLI::App* cmd, CorpusArgs& args) {
  cmd->add_option("--max-n", args.max_n, "Largest order (at most 10)")->required();
  cmd->add_option("--min-n", args.min_n, "Smallest order");
  cmd->add_option("--filter", args.filters,
                  "connected, bipartite, non_bipartite, no_K4, min_degree>=K");
  cmd->add_option("--shard", args.shard, "Process shard i of k, written i/k");
  cmd->add_option("--threads", args.threads,
                  "Worker threads (default: $CYCLOBOUND_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
}

int default_threads() {
  const char* env = std::getenv("CYCLOBOUND_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const int t = std::stoi(env, &used);
    if (used == std::string(env).size() && t >= 0) return t;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("CYCLOBOUND_THREADS must be a non-negative integer, got '") +
                              env + "'");
}

Graph read_graph(std::string text) {
  if (text == "-") {
    if (!(std::cin >> text)) throw Graph6Error("graph6: no input on standard input");
  }
  return parse_graph6(text);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-cycle bound toolkit for small connected graphs"};
  app.require_subcommand(1);

  std::string graph_text;
  AnalysisOptions analysis;
  auto* analyze = app.add_subcommand("analyze", "Invariants, bounds and structure of one graph");
  analyze->add_option("graph", graph_text, "graph6 string, or - for standard input")->required();
  analyze->add_flag("--allow-disconnected", analysis.allow_disconnected,
                   "Report invariants only for a disconnected graph");
  analyze->add_flag("--ms", analysis.motzkin_straus, "Include the replicator solver result");
  analyze->add_option("--ms-iters", analysis.ms_max_iters, "Replicator iteration cap")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--cycle-cap", analysis.cycle_cap, "Cycle census limit; 0 skips it")
      ->check(CLI::NonNegativeNumber);

  CorpusArgs verify_args;
  bool timing = false;
  bool no_ms = false;
  auto* verify = app.add_subcommand("verify", "Check every bound over a corpus");
  add_corpus_options(verify, verify_args);
  verify->add_flag("--timing", timing, "Report runtime_ms");
  verify->add_flag("--no-ms", no_ms, "Skip the replicator solver");

  CorpusArgs search_args;
  std::string bound_text;
  auto* search = app.add_subcommand("search", "List graphs attaining a bound");
  add_corpus_options(search, search_args);
  search->add_option("--bound", bound_text, "a..g or c4_minus_k4")->required();

  int enum_n = 0;
  std::string enum_shard = "0/1";
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs on n vertices as graph6");
  enumerate->add_option("--n", enum_n, "Order (1..10)")->required();
  enumerate->add_option("--shard", enum_shard, "Process shard i of k, written i/k");

  int ms_iters = kDefaultMaxIterations;
  double ms_tol = kDefaultStepTolerance;
  auto* ms = app.add_subcommand("ms", "Replicator dynamics for the edge form");
  ms->add_option("--graph", graph_text, "graph6 string, or - for standard input")->required();
  ms->add_option("--iters", ms_iters, "Iteration cap")->check(CLI::PositiveNumber);
  ms->add_option("--tol", ms_tol, "Stop when value and x change less than this")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*analyze) {
      print(analysis_document(read_graph(graph_text), analysis));
      return kExitClean;
    }
    if (*verify) {
      const CorpusSpec spec = verify_args.spec();
      VerifyOptions options;
      options.threads = verify->count("--threads") ? verify_args.threads : default_threads();
      options.motzkin_straus = !no_ms;
      const VerificationReport report = verify_corpus(spec, options);
      print(verification_json(spec, report, timing));
      return report.clean() ? kExitClean : kExitViolation;
    }
    if (*search) {
      const auto bound = parse_bound_id(bound_text);
      if (!bound) throw std::invalid_argument("unknown bound '" + bound_text + "'");
      const CorpusSpec spec = search_args.spec();
      const int threads =
          search->count("--threads") ? search_args.threads : default_threads();
      print(equality_cases_json(find_equality(spec, *bound, threads)));
      return kExitClean;
    }
    if (*enumerate) {
      const Shard shard = parse_shard(enum_shard);
      for_each_connected_graph(enum_n, enum_n, shard, [](const Graph& g) {
        std::cout << encode_graph6(g) << '\n';
      });
      return kExitClean;
    }
    if (*ms) {
      const Graph g = read_graph(graph_text);
      const int omega = clique_number(g);
      Json doc;
      doc["graph6"] = encode_graph6(g);
      const Json result =
          replicator_json(g, replicator_maximize(g, ms_iters, ms_tol), omega);
      for (const auto& [key, value] : result.items()) doc[key] = value;
      print(doc);
      return kExitClean;
    }
  } catch (const std::exception& e) {
    std::cerr << "cyclobound: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
