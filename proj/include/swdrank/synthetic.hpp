#ifndef SWDRANK_SYNTHETIC_HPP
#define SWDRANK_SYNTHETIC_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "swdrank/graph.hpp"

// Deterministic generators for benchmark graphs and corpora.
namespace swdrank::synthetic {

/// Preferential-attachment document graph: node i links to up to
/// `links_per_node` earlier nodes picked in proportion to (in-degree + 1),
/// each link with a random relation role, then weighted with `rates`.
TransferDataGraph power_law_graph(std::size_t nodes, std::uint64_t seed,
                                  std::size_t links_per_node = 3,
                                  const RateTable& rates = default_document_rates());

struct CorpusFile {
  std::string name;  // e.g. "doc0042.nt"
  std::string text;
};

/// A corpus of line-format documents mixing ontologies, databases and hybrids,
/// linked by imports / subclassing / term references / prior versions with a
/// power-law in-degree.
std::vector<CorpusFile> corpus(std::size_t docs, std::uint64_t seed);

void write_corpus(const std::vector<CorpusFile>& files, const std::filesystem::path& dir);

}  // namespace swdrank::synthetic

#endif  // SWDRANK_SYNTHETIC_HPP
