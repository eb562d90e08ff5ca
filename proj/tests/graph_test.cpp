#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "swdrank/errors.hpp"
#include "swdrank/graph.hpp"

namespace swdrank {
namespace {

using testing::make_graph;

// Conferences contain papers, papers cite papers.
SchemaGraph bibliography_schema() {
  SchemaGraph g;
  g.add_label("Conference");
  g.add_label("Paper");
  g.add_edge("Conference", "Paper", "contains");
  g.add_edge("Paper", "Paper", "cites");
  return g;
}

TEST(Conformance, SingleNode) {
  DataGraph d;
  d.add_node("Paper");
  SchemaGraph g;
  g.add_label("Paper");
  const auto mu = check_conformance(d, g);
  EXPECT_EQ(mu.node_map, std::vector<std::string>{"Paper"});
  EXPECT_TRUE(mu.edge_map.empty());
}

TEST(Conformance, EdgeWithoutSchemaImage) {
  DataGraph d;
  const auto p = d.add_node("Paper");
  const auto a = d.add_node("Author");
  d.add_edge(p, a, "authored-by");
  SchemaGraph g;
  g.add_label("Paper");
  g.add_label("Author");
  EXPECT_THROW(check_conformance(d, g), UnmappableEdge);
}

TEST(Conformance, UnknownLabel) {
  DataGraph d;
  d.add_node("Paper");
  d.add_node("Journal");
  try {
    check_conformance(d, bibliography_schema());
    FAIL() << "expected UnknownLabel";
  } catch (const UnknownLabel& e) {
    EXPECT_EQ(e.node(), 1u);
  }
}

TEST(Conformance, BibliographyInstance) {
  DataGraph d;
  const auto conf = d.add_node("Conference", {"vldb"});
  const auto p1 = d.add_node("Paper", {"ranking"});
  const auto p2 = d.add_node("Paper", {"hits"});
  const auto p3 = d.add_node("Paper", {"pagerank"});
  const auto p4 = d.add_node("Paper");
  d.add_edge(conf, p1, "contains");
  d.add_edge(conf, p2, "contains");
  d.add_edge(p1, p3, "cites");
  d.add_edge(p2, p3, "cites");
  d.add_edge(p4, p1, "cites");
  const auto schema = bibliography_schema();
  const auto mu = check_conformance(d, schema);
  EXPECT_EQ(mu.node_map,
            (std::vector<std::string>{"Conference", "Paper", "Paper", "Paper", "Paper"}));
  EXPECT_EQ(mu.edge_map, (std::vector<std::size_t>{0, 0, 1, 1, 1}));
}

TEST(DataGraph, ParallelEdgesPerRole) {
  DataGraph d;
  d.add_node("N");
  d.add_node("N");
  EXPECT_TRUE(d.add_edge(0, 1, "a"));
  EXPECT_FALSE(d.add_edge(0, 1, "a"));
  EXPECT_TRUE(d.add_edge(0, 1, "b"));
  EXPECT_EQ(d.edges().size(), 2u);
}

TEST(TransferSchema, RatesAreReadBack) {
  const auto ga = expand_transfer_schema(bibliography_schema(),
                                         {{"cites", {0.7, 0.2}}, {"contains", {0.0, 0.0}}});
  ASSERT_EQ(ga.rates.size(), 2u);
  EXPECT_EQ(ga.rates[1], (TransferRates{0.7, 0.2}));
  EXPECT_EQ(ga.rates[0], (TransferRates{0.0, 0.0}));
}

TEST(TransferSchema, MissingAndInvalidRates) {
  EXPECT_THROW(expand_transfer_schema(bibliography_schema(), {{"cites", {0.7, 0.2}}}),
               MissingRate);
  EXPECT_THROW(expand_transfer_schema(bibliography_schema(),
                                      {{"cites", {1.2, 0.2}}, {"contains", {0.1, 0.1}}}),
               RateOutOfRange);
  EXPECT_THROW(expand_transfer_schema(bibliography_schema(),
                                      {{"cites", {0.7, -0.1}}, {"contains", {0.1, 0.1}}}),
               RateOutOfRange);
}

double weight_of(const TransferDataGraph& g, NodeId from, NodeId to, Direction dir) {
  for (const auto& e : g.edges()) {
    if (e.from == from && e.to == to && e.direction == dir) return e.weight;
  }
  return std::nan("");
}

TEST(TransferData, ForwardWeightSplitsByOutDegree) {
  const auto g = make_graph(4, {{0, 1, "cites"}, {0, 2, "cites"}, {3, 1, "cites"}},
                            {{"cites", {0.7, 0.2}}});
  EXPECT_DOUBLE_EQ(weight_of(g, 0, 1, Direction::Forward), 0.35);
  EXPECT_DOUBLE_EQ(weight_of(g, 0, 2, Direction::Forward), 0.35);
  EXPECT_DOUBLE_EQ(weight_of(g, 3, 1, Direction::Forward), 0.7);
  // Node 1 receives two cites edges, node 2 one.
  EXPECT_DOUBLE_EQ(weight_of(g, 1, 0, Direction::Backward), 0.1);
  EXPECT_DOUBLE_EQ(weight_of(g, 1, 3, Direction::Backward), 0.1);
  EXPECT_DOUBLE_EQ(weight_of(g, 2, 0, Direction::Backward), 0.2);
  for (const auto& e : g.edges()) {
    if (e.direction == Direction::Forward) {
      EXPECT_NE(e.from, 1u);
    }
  }
}

TEST(TransferData, ZeroRatesStillMaterialize) {
  const auto g = make_graph(2, {{0, 1, "r"}}, {{"r", {0.0, 0.0}}});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0].weight, 0.0);
  EXPECT_EQ(g.edges()[1].weight, 0.0);
  EXPECT_EQ(g.A(1, 0), 0.0);
}

TEST(TransferData, MatrixSumsRolesOnTheSamePair) {
  const auto g = make_graph(2, {{0, 1, "a"}, {0, 1, "b"}}, {{"a", {0.3, 0.1}}, {"b", {0.4, 0.2}}});
  EXPECT_DOUBLE_EQ(g.A(1, 0), 0.7);
  EXPECT_DOUBLE_EQ(g.A(0, 1), 0.3);
  EXPECT_EQ(g.A(0, 0), 0.0);
  EXPECT_EQ(g.forward_out(0).size(), 2u);
  EXPECT_EQ(g.forward_in(1).size(), 2u);
  EXPECT_TRUE(g.forward_out(1).empty());
}

TEST(TransferData, StructuralProperties) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = testing::random_graph(rng);
    const auto& g = r.transfer;
    const auto& data_edges = r.data.edges();
    EXPECT_LE(g.edges().size(), 2 * data_edges.size());

    std::size_t forward = 0;
    std::map<std::pair<NodeId, std::string>, double> out_sum;
    std::map<std::pair<NodeId, NodeId>, bool> linked;
    for (const auto& e : g.edges()) {
      linked[{e.from, e.to}] = true;
      if (e.direction != Direction::Forward) continue;
      ++forward;
      out_sum[{e.from, e.role}] += e.weight;
    }
    EXPECT_EQ(forward, data_edges.size());
    // Conservation: a node's type-t forward weights add up to the schema rate.
    for (const auto& [key, sum] : out_sum) {
      EXPECT_NEAR(sum, r.rates.at(key.second).forward, 1e-12);
    }
    for (NodeId i = 0; i < g.node_count(); ++i) {
      for (NodeId j = 0; j < g.node_count(); ++j) {
        if (!linked.contains({j, i})) {
          EXPECT_EQ(g.A(i, j), 0.0);
        }
      }
    }
    EXPECT_TRUE(overloaded_nodes(g).empty());
  }
}

TEST(OutgoingMass, Examples) {
  const auto single = make_graph(2, {{0, 1, "r"}}, {{"r", {0.85, 0.0}}});
  auto mass = validate_outgoing_mass(single);
  EXPECT_DOUBLE_EQ(mass[0].sum, 0.85);
  EXPECT_FALSE(mass[0].exceeds_one);

  const auto doubled =
      make_graph(4, {{0, 1, "a"}, {0, 2, "b"}}, {{"a", {0.7, 0.0}}, {"b", {0.7, 0.0}}});
  mass = validate_outgoing_mass(doubled);
  EXPECT_DOUBLE_EQ(mass[0].sum, 1.4);
  EXPECT_TRUE(mass[0].exceeds_one);
  EXPECT_EQ(mass[3].sum, 0.0);
  EXPECT_FALSE(mass[3].exceeds_one);
  EXPECT_EQ(overloaded_nodes(doubled), std::vector<NodeId>{0});
}

TEST(DocumentGraph, DefaultRatesNeverOverload) {
  const auto rates = default_document_rates();
  ASSERT_EQ(rates.size(), 4u);
  double worst = 0.0;
  for (const auto& [role, r] : rates) worst += r.forward + r.backward;
  EXPECT_LE(worst, 1.0 + 1e-12);

  // Node 0 sends and receives every kind of relation.
  std::vector<Document> docs(3);
  for (DocId i = 0; i < 3; ++i) docs[std::size_t(i)].doc_id = i;
  std::vector<RelationEdge> relations;
  for (auto kind : {RelationKind::TermRef, RelationKind::Imports, RelationKind::Extends,
                    RelationKind::PriorVersion}) {
    relations.push_back({0, 1, kind, ""});
    relations.push_back({2, 0, kind, ""});
  }
  const auto data = document_data_graph(docs, relations);
  EXPECT_EQ(data.edges().size(), 8u);
  const auto schema = document_schema();
  const auto g = derive_transfer_data_graph(data, expand_transfer_schema(schema, rates),
                                            check_conformance(data, schema));
  EXPECT_NEAR(validate_outgoing_mass(g)[0].sum, worst, 1e-12);
  EXPECT_TRUE(overloaded_nodes(g).empty());
}

TEST(DocumentGraph, CollapsesRepeatedRelations) {
  std::vector<Document> docs(2);
  docs[1].doc_id = 1;
  const std::vector<RelationEdge> relations = {
      {0, 1, RelationKind::Extends, "http://www.w3.org/2000/01/rdf-schema#subClassOf"},
      {0, 1, RelationKind::Extends, "http://www.w3.org/2002/07/owl#equivalentClass"}};
  EXPECT_EQ(document_data_graph(docs, relations).edges().size(), 1u);
}

}  // namespace
}  // namespace swdrank
