#ifndef SWDRANK_GRAPH_HPP
#define SWDRANK_GRAPH_HPP

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "swdrank/corpus.hpp"

namespace swdrank {

using NodeId = std::size_t;

struct DataNode {
  std::string label;
  std::set<std::string> keywords;

  friend bool operator==(const DataNode&, const DataNode&) = default;
};

struct DataEdge {
  NodeId from = 0;
  NodeId to = 0;
  std::string role;

  friend bool operator==(const DataEdge&, const DataEdge&) = default;
  friend auto operator<=>(const DataEdge&, const DataEdge&) = default;
};

/// Labeled directed graph D(V_D, E_D). Node ids are dense and assigned in
/// insertion order; an edge is unique per (from, to, role).
class DataGraph {
 public:
  NodeId add_node(std::string label, std::set<std::string> keywords = {});
  /// Returns false (and adds nothing) when the (from, to, role) edge exists.
  bool add_edge(NodeId from, NodeId to, std::string role);

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<DataNode>& nodes() const { return nodes_; }
  const std::vector<DataEdge>& edges() const { return edges_; }

 private:
  std::vector<DataNode> nodes_;
  std::vector<DataEdge> edges_;
  std::set<DataEdge> seen_;
};

struct SchemaEdge {
  std::string from_label;
  std::string to_label;
  std::string role;

  friend bool operator==(const SchemaEdge&, const SchemaEdge&) = default;
};

/// Type-level graph G(V_G, E_G).
class SchemaGraph {
 public:
  void add_label(std::string label);
  /// Both labels must already exist; a role may appear once per label pair.
  void add_edge(std::string from_label, std::string to_label, std::string role);

  const std::set<std::string>& labels() const { return labels_; }
  const std::vector<SchemaEdge>& edges() const { return edges_; }
  /// Index of the schema edge matching the triple, or npos.
  std::size_t find(const std::string& from_label, const std::string& to_label,
                   const std::string& role) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::set<std::string> labels_;
  std::vector<SchemaEdge> edges_;
};

/// The assignment mu: node -> schema label, data edge -> schema edge index.
struct ConformanceMapping {
  std::vector<std::string> node_map;
  std::vector<std::size_t> edge_map;
};

ConformanceMapping check_conformance(const DataGraph& data, const SchemaGraph& schema);

struct TransferRates {
  double forward = 0.0;
  double backward = 0.0;

  friend bool operator==(const TransferRates&, const TransferRates&) = default;
};

using RateTable = std::map<std::string, TransferRates>;

/// G^A: each schema edge annotated with its forward and backward rate.
struct TransferSchemaGraph {
  SchemaGraph schema;
  std::vector<TransferRates> rates;  // parallel to schema.edges()
};

TransferSchemaGraph expand_transfer_schema(const SchemaGraph& schema,
                                           const RateTable& rates);

enum class Direction { Forward, Backward };

struct TransferEdge {
  NodeId from = 0;
  NodeId to = 0;
  double weight = 0.0;
  std::string role;  // with the endpoint labels, names the source schema edge
  Direction direction = Direction::Forward;

  friend bool operator==(const TransferEdge&, const TransferEdge&) = default;
};

/// D^A: the weighted graph authority flows over. `matrix()` is A with
/// A(i, j) the summed weight of edges j -> i.
class TransferDataGraph {
 public:
  TransferDataGraph() = default;
  TransferDataGraph(std::vector<DataNode> nodes, std::vector<TransferEdge> edges);

  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<DataNode>& nodes() const { return nodes_; }
  const std::vector<TransferEdge>& edges() const { return edges_; }
  const Eigen::SparseMatrix<double>& matrix() const { return matrix_; }
  double A(NodeId i, NodeId j) const { return matrix_.coeff(Eigen::Index(i), Eigen::Index(j)); }

  /// Indices into edges() of forward edges leaving / entering a node, in
  /// edge order.
  std::span<const std::size_t> forward_out(NodeId u) const;
  std::span<const std::size_t> forward_in(NodeId v) const;

  friend bool operator==(const TransferDataGraph& a, const TransferDataGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<DataNode> nodes_;
  std::vector<TransferEdge> edges_;
  Eigen::SparseMatrix<double> matrix_;
  std::vector<std::size_t> out_offsets_, out_edges_;
  std::vector<std::size_t> in_offsets_, in_edges_;
};

TransferDataGraph derive_transfer_data_graph(const DataGraph& data,
                                             const TransferSchemaGraph& transfer_schema,
                                             const ConformanceMapping& mapping);

struct OutgoingMass {
  double sum = 0.0;
  bool exceeds_one = false;
};

std::vector<OutgoingMass> validate_outgoing_mass(const TransferDataGraph& graph);

/// Nodes whose outgoing mass is flagged, in ascending order.
std::vector<NodeId> overloaded_nodes(const TransferDataGraph& graph);

// ---- document corpora --------------------------------------------------------

inline constexpr const char* kDocumentLabel = "Document";

/// Single "Document" label with one self-edge per relation kind.
SchemaGraph document_schema();

RateTable default_document_rates();

/// One node per document (doc_id must equal its position) and one edge per
/// distinct (from, to, kind) relation.
DataGraph document_data_graph(const std::vector<Document>& docs,
                              const std::vector<RelationEdge>& relations);

}  // namespace swdrank

#endif  // SWDRANK_GRAPH_HPP
