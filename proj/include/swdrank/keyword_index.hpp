#ifndef SWDRANK_KEYWORD_INDEX_HPP
#define SWDRANK_KEYWORD_INDEX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "swdrank/corpus.hpp"

namespace swdrank {

struct Posting {
  DocId doc = 0;
  double score = 0.0;

  friend bool operator==(const Posting&, const Posting&) = default;
};

/// Orders postings by score descending, then doc id ascending.
inline bool posting_before(const Posting& a, const Posting& b) {
  return a.score != b.score ? a.score > b.score : a.doc < b.doc;
}

/// term -> postings in posting_before order.
class InvertedIndex {
 public:
  InvertedIndex() = default;
  explicit InvertedIndex(std::map<std::string, std::vector<Posting>> postings);

  /// Empty span for unknown terms.
  std::span<const Posting> lookup(const std::string& term) const;
  std::optional<double> score(const std::string& term, DocId doc) const;

  const std::map<std::string, std::vector<Posting>>& postings() const { return postings_; }
  std::size_t term_count() const { return postings_.size(); }

  friend bool operator==(const InvertedIndex&, const InvertedIndex&) = default;

 private:
  std::map<std::string, std::vector<Posting>> postings_;
};

/// `scores` is indexed by doc id. Every doc with a non-empty bag needs one.
InvertedIndex build_index(const std::map<DocId, KeywordBag>& bags,
                          const Eigen::VectorXd& scores);

/// AND across terms, OR when the intersection is empty and there is more
/// than one term; the first n candidates in posting order.
std::vector<DocId> top_n(const InvertedIndex& index, const std::vector<std::string>& terms,
                         std::size_t n);

/// Terms by descending posting-list length (ties alphabetical).
std::vector<std::string> most_frequent_terms(const InvertedIndex& index, std::size_t count);

}  // namespace swdrank

#endif  // SWDRANK_KEYWORD_INDEX_HPP
