#ifndef SWDRANK_ENGINE_HPP
#define SWDRANK_ENGINE_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swdrank/config.hpp"
#include "swdrank/hits.hpp"
#include "swdrank/store.hpp"

namespace swdrank {

// ---- ingest ----------------------------------------------------------------

struct IngestFailure {
  std::string file;
  std::string message;
};

struct IngestSummary {
  std::size_t docs = 0;
  std::size_t relation_edges = 0;
  std::size_t unresolved = 0;
  std::size_t internal = 0;
  std::size_t data_edges = 0;
  std::size_t transfer_edges = 0;
  std::map<std::string, std::size_t> kinds;  // SWO / SWDB / Hybrid counts
  std::vector<IngestFailure> failures;
};

/// Parses every `.nt` file under `corpus_dir` (sorted by path, doc ids
/// assigned densely in that order) and derives the transfer data graph.
/// Bad files are skipped and listed in the summary.
EngineState ingest_corpus(const std::filesystem::path& corpus_dir, const EngineConfig& config,
                          IngestSummary& summary);

/// ingest_corpus followed by save_state.
IngestSummary run_ingest(const std::filesystem::path& corpus_dir,
                         const std::filesystem::path& state_dir, const EngineConfig& config);

// ---- build -----------------------------------------------------------------

struct BuildOptions {
  std::optional<InitMode> init;  // overrides config.rank.init_mode
  bool allow_unconverged = false;
};

struct BuildSummary {
  InitMode init_mode = InitMode::InRatio;
  int iterations_used = 0;
  double final_residual = 0.0;
  bool converged = true;
  std::size_t indexed_terms = 0;
};

/// ObjectRank plus the inverted index, stored into `state`. Throws
/// MassExceedsOne, or NotConverged unless allow_unconverged is set.
BuildSummary build_state(EngineState& state, const EngineConfig& config,
                         const BuildOptions& options = {});

/// load_state, build_state, save_state.
BuildSummary run_build(const std::filesystem::path& state_dir, const EngineConfig& config,
                       const BuildOptions& options = {});

// ---- query -----------------------------------------------------------------

struct QueryOptions {
  std::size_t n = 10;
  std::size_t c = 3;
  std::size_t top_k = 10;
  bool weighted = true;

  static QueryOptions from(const EngineConfig& config) {
    return {config.n, config.c, config.top_k, config.weighted};
  }
};

struct QueryTimings {
  double seed_us = 0.0;
  double build_us = 0.0;
  double hits_us = 0.0;
  double total_us = 0.0;
};

struct QueryResult {
  std::vector<std::string> terms;
  std::vector<DocId> seeds;
  std::size_t subgraph_nodes = 0;
  std::size_t subgraph_edges = 0;
  bool degenerate = false;  // no edges: authorities are the seeds by ObjectRank
  int hits_iterations = 0;
  std::vector<RankedDoc> authorities;
  std::vector<RankedDoc> hubs;
  QueryTimings timings;
};

/// Seeds -> sub-graph -> HITS -> dual lists. Throws NoMatch.
QueryResult run_query(const EngineState& state, const std::vector<std::string>& raw_terms,
                      const QueryOptions& options, const TokenizerConfig& tokenizer);

std::string format_query_table(const EngineState& state, const QueryResult& result);
/// One JSON object; timings omitted when `with_timings` is false.
std::string format_query_json(const QueryResult& result, bool with_timings = true);

// ---- bench -----------------------------------------------------------------

struct BenchOptions {
  std::vector<std::size_t> n_values{5, 10, 20, 40};
  std::vector<std::size_t> c_values{1, 2, 3, 5, 8, 13};
  std::size_t reps = 1;
  std::vector<std::string> queries;  // empty: the 20 most frequent terms
  std::size_t top_k = 10;
  bool weighted = true;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t c = 0;
  double subgraph_nodes = 0.0;
  double build_us = 0.0;
  double hits_us = 0.0;
  double total_us = 0.0;
  double overlap_at_k = 0.0;
};

/// Parses `n=5,10;c=1,2` into the grid fields of `options`.
void parse_grid(const std::string& text, BenchOptions& options);

/// One row per (n, c) cell, n-major. Quality is overlap@k of each query's
/// authority list with the top-k authorities of HITS over the full graph.
std::vector<BenchRow> run_bench(const EngineState& state, const BenchOptions& options,
                                const TokenizerConfig& tokenizer);

std::string bench_csv(const std::vector<BenchRow>& rows);

// ---- inspect ---------------------------------------------------------------

struct DocumentReport {
  CorpusEntry entry;
  std::optional<double> score;
  std::map<RelationKind, std::vector<RelationEdge>> outgoing;
  std::map<RelationKind, std::vector<RelationEdge>> incoming;
};

/// `key` is a numeric doc id or a document uri. Throws UnknownDocument.
DocumentReport run_inspect(const EngineState& state, const std::string& key);

std::string format_report(const DocumentReport& report, std::size_t keyword_sample = 10);

}  // namespace swdrank

#endif  // SWDRANK_ENGINE_HPP
