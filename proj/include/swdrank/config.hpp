#ifndef SWDRANK_CONFIG_HPP
#define SWDRANK_CONFIG_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "swdrank/graph.hpp"
#include "swdrank/objectrank.hpp"
#include "swdrank/tokenizer.hpp"

namespace swdrank {

/// Effective engine configuration. The text form is a small sectioned
/// key/value file:
///
///   [rates]
///   Imports = 0.30, 0.05      # forward, backward
///   [rank]
///   damping = 0.85
///   epsilon = 1e-8
///   max_iter = 200
///   init = inratio
///   [tokenizer]
///   lowercase = true
///   min_length = 2
///   stopwords = a an the     # replaces the default list
///   [query]
///   n = 10
///   c = 3
///   top_k = 10
///   weighted = true
struct EngineConfig {
  RateTable rates = default_document_rates();
  RankParams rank;
  TokenizerConfig tokenizer;
  std::size_t n = 10;
  std::size_t c = 3;
  std::size_t top_k = 10;
  bool weighted = true;

  /// Rates in [0, 1], d in (0, 1), positive counts. Throws ConfigError.
  void validate() const;

  /// Canonical text; parse_config(to_text()) reproduces the config.
  std::string to_text() const;

  /// FNV-1a 64 of to_text(), as 16 hex digits.
  std::string fingerprint() const;
};

EngineConfig parse_config(std::string_view text);
EngineConfig load_config(const std::filesystem::path& path);

}  // namespace swdrank

#endif  // SWDRANK_CONFIG_HPP
