#include "swdrank/keyword_index.hpp"

#include <algorithm>
#include <unordered_map>

#include "swdrank/errors.hpp"

namespace swdrank {

InvertedIndex::InvertedIndex(std::map<std::string, std::vector<Posting>> postings)
    : postings_(std::move(postings)) {
  for (const auto& [term, list] : postings_) {
    if (!std::is_sorted(list.begin(), list.end(), posting_before)) {
      throw Error("postings for '" + term + "' are not in rank order");
    }
  }
}

std::span<const Posting> InvertedIndex::lookup(const std::string& term) const {
  const auto it = postings_.find(term);
  if (it == postings_.end()) return {};
  return it->second;
}

std::optional<double> InvertedIndex::score(const std::string& term, DocId doc) const {
  for (const auto& p : lookup(term)) {
    if (p.doc == doc) return p.score;
  }
  return std::nullopt;
}

InvertedIndex build_index(const std::map<DocId, KeywordBag>& bags,
                          const Eigen::VectorXd& scores) {
  std::map<std::string, std::vector<Posting>> postings;
  for (const auto& [doc, bag] : bags) {
    if (bag.empty()) continue;
    if (doc < 0 || doc >= scores.size()) throw MissingScore(doc);
    const double score = scores[Eigen::Index(doc)];
    for (const auto& entry : bag) postings[entry.first].push_back({doc, score});
  }
  for (auto& entry : postings) {
    std::sort(entry.second.begin(), entry.second.end(), posting_before);
  }
  return InvertedIndex(std::move(postings));
}

std::vector<DocId> top_n(const InvertedIndex& index, const std::vector<std::string>& terms,
                         std::size_t n) {
  if (n == 0) throw Error("top_n needs n >= 1");
  std::unordered_map<DocId, std::size_t> hits;
  std::unordered_map<DocId, double> score;
  for (const auto& term : std::set<std::string>(terms.begin(), terms.end())) {
    for (const auto& p : index.lookup(term)) {
      ++hits[p.doc];
      score[p.doc] = p.score;
    }
  }
  const auto distinct = std::set<std::string>(terms.begin(), terms.end()).size();
  std::vector<Posting> candidates;
  for (const auto& [doc, count] : hits) {
    if (count == distinct) candidates.push_back({doc, score[doc]});
  }
  if (candidates.empty() && distinct > 1) {
    for (const auto& entry : hits) candidates.push_back({entry.first, score[entry.first]});
  }
  if (candidates.empty()) throw NoMatch();
  std::sort(candidates.begin(), candidates.end(), posting_before);
  if (candidates.size() > n) candidates.resize(n);
  std::vector<DocId> seeds;
  seeds.reserve(candidates.size());
  for (const auto& p : candidates) seeds.push_back(p.doc);
  return seeds;
}

std::vector<std::string> most_frequent_terms(const InvertedIndex& index, std::size_t count) {
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const auto& [term, list] : index.postings()) ranked.emplace_back(list.size(), term);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < ranked.size() && i < count; ++i) terms.push_back(ranked[i].second);
  return terms;
}

}  // namespace swdrank
