#ifndef SWDRANK_TOKENIZER_HPP
#define SWDRANK_TOKENIZER_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace swdrank {

struct TokenizerConfig {
  bool lowercase = true;
  std::size_t min_length = 2;
  std::set<std::string> stopwords = default_stopwords();

  /// The shipped 30-word English stopword list.
  static std::set<std::string> default_stopwords();
};

/// Splits on every non-alphanumeric byte, optionally folds case, then drops
/// short tokens and stopwords. Order and duplicates are preserved.
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config = {});

}  // namespace swdrank

#endif  // SWDRANK_TOKENIZER_HPP
