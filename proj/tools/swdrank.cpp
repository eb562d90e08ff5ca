// swdrank: ingest, build, query, bench and inspect a semantic-document
// ranking state.
//
// Exit codes: 0 success, 1 user or query error, 2 corrupt state,
// 3 convergence refusal.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swdrank/engine.hpp"
#include "swdrank/errors.hpp"
#include "swdrank/synthetic.hpp"

namespace fs = std::filesystem;
using namespace swdrank;

namespace {

enum ExitCode { kOk = 0, kUserError = 1, kCorruptState = 2, kConvergence = 3 };

fs::path state_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ENGINE_STATE_DIR"); env && *env) return env;
  return "state";
}

EngineConfig effective_config(const std::string& path) {
  if (!path.empty()) return load_config(path);
  if (fs::exists("engine.toml")) return load_config("engine.toml");
  return {};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  for (std::string item; std::getline(stream, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic document ranking: offline ObjectRank, query-time HITS"};
  app.require_subcommand(1);

  std::string state_flag;
  std::string config_path;
  app.add_option("--state", state_flag, "State directory (default $ENGINE_STATE_DIR or ./state)");
  app.add_option("--config", config_path, "Config file (default ./engine.toml when present)");

  // Overrides shared by several subcommands; unset means "use the config".
  std::optional<double> damping, epsilon;
  std::optional<int> max_iter;

  auto* ingest = app.add_subcommand("ingest", "Parse a directory of .nt documents");
  std::string corpus_dir;
  ingest->add_option("dir", corpus_dir, "Corpus directory")->required();

  auto* build = app.add_subcommand("build", "Compute ObjectRank and the keyword index");
  std::string init_flag;
  bool allow_unconverged = false;
  build->add_option("--init", init_flag, "Initialization: uniform or inratio")
      ->check(CLI::IsMember({"uniform", "inratio"}));
  build->add_flag("--allow-unconverged", allow_unconverged,
                  "Keep the last iterate when max_iter is reached");
  build->add_option("--damping", damping, "Damping factor d");
  build->add_option("--epsilon", epsilon, "L1 convergence threshold");
  build->add_option("--max-iter", max_iter, "Iteration limit");

  auto* query = app.add_subcommand("query", "Answer a keyword query");
  std::vector<std::string> terms;
  std::optional<std::size_t> n_flag, c_flag, k_flag;
  bool unweighted = false;
  bool json = false;
  query->add_option("terms", terms, "Query keywords")->required();
  query->add_option("-n", n_flag, "Number of seed documents");
  query->add_option("-c", c_flag, "In-linking pages added per seed");
  query->add_option("-k", k_flag, "Length of each result list");
  query->add_flag("--unweighted", unweighted, "Classic HITS (every link weighs 1)");
  query->add_flag("--json", json, "Print the result as one JSON object");

  auto* bench = app.add_subcommand("bench", "Sweep the (n, c) grid");
  std::string grid;
  std::size_t reps = 1;
  std::string out_path;
  std::string queries;
  std::optional<std::size_t> bench_k;
  bool bench_unweighted = false;
  bench->add_option("--grid", grid, "Grid, e.g. 'n=5,10,20,40;c=1,2,3,5,8,13'");
  bench->add_option("--reps", reps, "Repetitions per query and cell");
  bench->add_option("--out", out_path, "CSV output file (default stdout)");
  bench->add_option("--queries", queries, "Comma-separated query terms");
  bench->add_option("-k", bench_k, "Overlap depth k");
  bench->add_flag("--unweighted", bench_unweighted, "Classic HITS");

  auto* inspect = app.add_subcommand("inspect", "Describe one document");
  std::string key;
  inspect->add_option("id", key, "Document id or uri")->required();

  auto* synth = app.add_subcommand("synth", "Write a synthetic corpus");
  std::string synth_dir;
  std::size_t synth_docs = 1000;
  std::uint64_t synth_seed = 7;
  synth->add_option("dir", synth_dir, "Output directory")->required();
  synth->add_option("--docs", synth_docs, "Number of documents");
  synth->add_option("--seed", synth_seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    auto config = effective_config(config_path);
    if (damping) config.rank.damping = *damping;
    if (epsilon) config.rank.epsilon = *epsilon;
    if (max_iter) config.rank.max_iter = *max_iter;
    config.validate();
    const auto dir = state_dir(state_flag);

    if (*ingest) {
      const auto summary = run_ingest(corpus_dir, dir, config);
      std::cout << "docs: " << summary.docs << "\n";
      for (const auto& [kind, count] : summary.kinds) {
        std::cout << "  " << kind << ": " << count << "\n";
      }
      std::cout << "relation edges: " << summary.relation_edges << "\n"
                << "unresolved references: " << summary.unresolved << "\n"
                << "transfer edges: " << summary.transfer_edges << "\n"
                << "state: " << dir.string() << "\n";
      for (const auto& f : summary.failures) {
        std::cerr << "error: " << f.file << ": " << f.message << "\n";
      }
      return summary.failures.empty() ? kOk : kUserError;
    }

    if (*build) {
      BuildOptions options;
      if (!init_flag.empty()) options.init = parse_init_mode(init_flag);
      options.allow_unconverged = allow_unconverged;
      const auto summary = run_build(dir, config, options);
      std::cout << "init: " << to_string(summary.init_mode) << "\n"
                << "iterations: " << summary.iterations_used << "\n"
                << "residual: " << summary.final_residual << "\n"
                << "converged: " << (summary.converged ? "yes" : "no") << "\n"
                << "indexed terms: " << summary.indexed_terms << "\n";
      return kOk;
    }

    if (*query) {
      const auto state = load_state(dir);
      auto options = QueryOptions::from(config);
      if (n_flag) options.n = *n_flag;
      if (c_flag) options.c = *c_flag;
      if (k_flag) options.top_k = *k_flag;
      if (unweighted) options.weighted = false;
      if (options.n == 0 || options.top_k == 0) throw ConfigError("-n and -k must be >= 1");
      const auto result = run_query(state, terms, options, config.tokenizer);
      if (json) {
        std::cout << format_query_json(result) << "\n";
      } else {
        std::cout << format_query_table(state, result);
      }
      return kOk;
    }

    if (*bench) {
      const auto state = load_state(dir);
      BenchOptions options;
      if (!grid.empty()) parse_grid(grid, options);
      options.reps = reps;
      options.queries = split_commas(queries);
      options.top_k = bench_k.value_or(config.top_k);
      options.weighted = config.weighted && !bench_unweighted;
      const auto csv = bench_csv(run_bench(state, options, config.tokenizer));
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure(out_path, "cannot open for writing");
        out << csv;
      }
      return kOk;
    }

    if (*inspect) {
      const auto state = load_state(dir);
      std::cout << format_report(run_inspect(state, key));
      return kOk;
    }

    if (*synth) {
      synthetic::write_corpus(synthetic::corpus(synth_docs, synth_seed), synth_dir);
      std::cout << "wrote " << synth_docs << " documents to " << synth_dir << "\n";
      return kOk;
    }
  } catch (const NoMatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const VersionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCorruptState;
  } catch (const CorruptRecord& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCorruptState;
  } catch (const MissingFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCorruptState;
  } catch (const NotConverged& e) {
    std::cerr << "error: " << e.what() << " (use --allow-unconverged to keep it)\n";
    return kConvergence;
  } catch (const MassExceedsOne& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  }
  return kOk;
}
