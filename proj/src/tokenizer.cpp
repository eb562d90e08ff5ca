#include "swdrank/tokenizer.hpp"

#include <cctype>

namespace swdrank {

std::set<std::string> TokenizerConfig::default_stopwords() {
  return {"a",    "an",   "and",  "are",  "as",   "at",    "be",   "by",
          "for",  "from", "has",  "he",   "in",   "is",    "it",   "its",
          "of",   "on",   "or",   "that", "the",  "to",    "was",  "were",
          "will", "with", "this", "which", "but", "not"};
}

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.size() >= config.min_length && !config.stopwords.contains(current)) {
      tokens.push_back(current);
    }
    current.clear();
  };
  for (const char ch : text) {
    const auto byte = static_cast<unsigned char>(ch);
    if (std::isalnum(byte)) {
      current.push_back(config.lowercase ? static_cast<char>(std::tolower(byte)) : ch);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

}  // namespace swdrank
