#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "swdrank/errors.hpp"
#include "swdrank/keyword_index.hpp"
#include "swdrank/tokenizer.hpp"

namespace swdrank {
namespace {

using Strings = std::vector<std::string>;

TEST(Tokenize, SplitAndFold) {
  EXPECT_EQ(tokenize("Semantic-Web search"), (Strings{"semantic", "web", "search"}));
  EXPECT_EQ(tokenize("a I x"), Strings{});
  EXPECT_EQ(tokenize("OWL2 owl2"), (Strings{"owl2", "owl2"}));
  EXPECT_EQ(tokenize(""), Strings{});
  EXPECT_EQ(tokenize("the ranking of the web"), (Strings{"ranking", "web"}));
}

TEST(Tokenize, Configurable) {
  TokenizerConfig keep_case;
  keep_case.lowercase = false;
  keep_case.min_length = 1;
  keep_case.stopwords.clear();
  EXPECT_EQ(tokenize("a I x", keep_case), (Strings{"a", "I", "x"}));
  EXPECT_EQ(tokenize("OWL2 owl2", keep_case), (Strings{"OWL2", "owl2"}));
}

Eigen::VectorXd scores(std::initializer_list<double> values) {
  Eigen::VectorXd v(Eigen::Index(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

TEST(BuildIndex, OrderedByScoreThenId) {
  const auto index = build_index({{1, {{"web", 1}}}, {2, {{"web", 3}}}}, scores({0.0, 0.3, 0.9}));
  const auto web = index.lookup("web");
  ASSERT_EQ(web.size(), 2u);
  EXPECT_EQ(web[0], (Posting{2, 0.9}));
  EXPECT_EQ(web[1], (Posting{1, 0.3}));
  EXPECT_TRUE(index.lookup("absent").empty());
  EXPECT_FALSE(index.postings().contains("absent"));
  EXPECT_EQ(index.score("web", 1), 0.3);
  EXPECT_FALSE(index.score("web", 0).has_value());
}

TEST(BuildIndex, TiesByDocId) {
  const auto index = build_index({{2, {{"web", 1}}}, {1, {{"web", 1}}}}, scores({0.0, 0.5, 0.5}));
  const auto web = index.lookup("web");
  ASSERT_EQ(web.size(), 2u);
  EXPECT_EQ(web[0].doc, 1);
  EXPECT_EQ(web[1].doc, 2);
}

TEST(BuildIndex, MissingScore) {
  EXPECT_THROW(build_index({{3, {{"web", 1}}}}, scores({0.1, 0.2})), MissingScore);
  EXPECT_NO_THROW(build_index({{3, {}}}, scores({0.1, 0.2})));
}

TEST(TopN, HeadOfPostings) {
  const auto index = build_index({{1, {{"web", 1}}}, {2, {{"web", 1}}}}, scores({0.0, 0.3, 0.9}));
  EXPECT_EQ(top_n(index, {"web"}, 1), std::vector<DocId>{2});
  EXPECT_EQ(top_n(index, {"web"}, 5), (std::vector<DocId>{2, 1}));
}

TEST(TopN, IntersectionThenUnion) {
  // rank: 0:.1 1:.9 2:.5 3:.7 4:.3
  const auto index = build_index({{0, {{"owl", 1}, {"web", 1}}},
                                  {1, {{"owl", 1}}},
                                  {2, {{"web", 1}}},
                                  {3, {{"web", 1}, {"owl", 2}}},
                                  {4, {{"rdf", 1}}}},
                                 scores({0.1, 0.9, 0.5, 0.7, 0.3}));
  EXPECT_EQ(top_n(index, {"owl", "web"}, 10), (std::vector<DocId>{3, 0}));
  // Disjoint terms fall back to the union, merged in posting order.
  EXPECT_EQ(top_n(index, {"rdf", "owl"}, 10), (std::vector<DocId>{1, 3, 4, 0}));
  EXPECT_EQ(top_n(index, {"rdf", "owl"}, 2), (std::vector<DocId>{1, 3}));
  // One known and one unknown term: union of what exists.
  EXPECT_EQ(top_n(index, {"rdf", "nothing"}, 10), std::vector<DocId>{4});
  EXPECT_THROW(top_n(index, {"nothing"}, 3), NoMatch);
  EXPECT_THROW(top_n(index, {}, 3), NoMatch);
}

TEST(TopN, PrefixProperty) {
  std::mt19937_64 rng(4);
  std::map<DocId, KeywordBag> bags;
  const Strings vocabulary = {"alpha", "beta", "gamma", "delta"};
  Eigen::VectorXd rank(60);
  for (DocId d = 0; d < 60; ++d) {
    rank[d] = double(rng() % 20) / 10.0;
    for (const auto& word : vocabulary) {
      if (rng() % 3 == 0) bags[d][word] = 1;
    }
  }
  const auto index = build_index(bags, rank);
  for (const auto& query : {Strings{"alpha"}, Strings{"alpha", "beta"},
                            Strings{"gamma", "delta", "beta"}}) {
    const auto all = top_n(index, query, 1000);
    for (std::size_t n = 1; n <= all.size(); ++n) {
      const auto head = top_n(index, query, n);
      ASSERT_EQ(head.size(), n);
      EXPECT_TRUE(std::equal(head.begin(), head.end(), all.begin()));
    }
    for (std::size_t i = 1; i < all.size(); ++i) {
      const double a = rank[all[i - 1]], b = rank[all[i]];
      EXPECT_TRUE(a > b || (a == b && all[i - 1] < all[i]));
    }
  }
}

TEST(MostFrequentTerms, ByPostingLength) {
  const auto index = build_index({{0, {{"b", 1}, {"a", 1}}}, {1, {{"b", 1}, {"c", 1}}}},
                                 scores({1.0, 1.0}));
  EXPECT_EQ(most_frequent_terms(index, 2), (Strings{"b", "a"}));
  EXPECT_EQ(most_frequent_terms(index, 10).size(), 3u);
}

}  // namespace
}  // namespace swdrank
