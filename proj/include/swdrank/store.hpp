#ifndef SWDRANK_STORE_HPP
#define SWDRANK_STORE_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swdrank/corpus.hpp"
#include "swdrank/graph.hpp"
#include "swdrank/keyword_index.hpp"
#include "swdrank/objectrank.hpp"

namespace swdrank {

inline constexpr int kFormatVersion = 1;

/// What the state keeps of a parsed document.
struct CorpusEntry {
  DocId doc_id = 0;
  std::string uri;
  std::string path;
  DocumentKind kind = DocumentKind::SWDB;
  BasicMetadata stats;
  KeywordBag keywords;

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

/// Everything the engine persists between ingest, build and query. `ranks`
/// is empty until the state has been built.
struct EngineState {
  int format_version = kFormatVersion;
  std::string config_fingerprint;
  std::vector<CorpusEntry> docs;
  std::vector<RelationEdge> relations;
  std::size_t unresolved_references = 0;
  TransferDataGraph graph;
  std::optional<RankVector> ranks;
  RankParams rank_params;
  InvertedIndex index;

  bool built() const { return ranks.has_value(); }

  friend bool operator==(const EngineState&, const EngineState&) = default;
};

struct ManifestSummary {
  std::filesystem::path dir;
  std::map<std::string, std::size_t> record_counts;  // file name -> lines
};

/// Writes manifest.json plus one JSON-lines file per component. Apart from
/// `created_at`, the bytes depend only on the state.
ManifestSummary save_state(const EngineState& state, const std::filesystem::path& dir,
                           const std::string& created_at = {});

EngineState load_state(const std::filesystem::path& dir);

/// The state's file names, in the order they are written.
const std::vector<std::string>& state_files();

/// Canonical line-format writer: one `<s> <p> <o> .` statement per triple,
/// preceded by a `# uri:` header when the document has a uri.
std::string write_ntriples(const Document& doc);

/// Current UTC time as an ISO-8601 string.
std::string utc_timestamp();

}  // namespace swdrank

#endif  // SWDRANK_STORE_HPP
