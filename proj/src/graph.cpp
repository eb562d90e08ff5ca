#include "swdrank/graph.hpp"

#include <cmath>
#include <utility>

#include "swdrank/errors.hpp"

namespace swdrank {
namespace {

// CSR adjacency over a subset of edges.
void build_adjacency(std::size_t nodes, const std::vector<TransferEdge>& edges,
                     bool outgoing, std::vector<std::size_t>& offsets,
                     std::vector<std::size_t>& list) {
  offsets.assign(nodes + 1, 0);
  for (const auto& e : edges) {
    if (e.direction != Direction::Forward) continue;
    ++offsets[(outgoing ? e.from : e.to) + 1];
  }
  for (std::size_t i = 0; i < nodes; ++i) offsets[i + 1] += offsets[i];
  list.assign(offsets.back(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const auto& e = edges[idx];
    if (e.direction != Direction::Forward) continue;
    list[cursor[outgoing ? e.from : e.to]++] = idx;
  }
}

}  // namespace

NodeId DataGraph::add_node(std::string label, std::set<std::string> keywords) {
  nodes_.push_back({std::move(label), std::move(keywords)});
  return nodes_.size() - 1;
}

bool DataGraph::add_edge(NodeId from, NodeId to, std::string role) {
  if (from >= nodes_.size() || to >= nodes_.size()) {
    throw Error("data edge endpoint out of range");
  }
  DataEdge edge{from, to, std::move(role)};
  if (!seen_.insert(edge).second) return false;
  edges_.push_back(std::move(edge));
  return true;
}

void SchemaGraph::add_label(std::string label) { labels_.insert(std::move(label)); }

void SchemaGraph::add_edge(std::string from_label, std::string to_label,
                           std::string role) {
  if (!labels_.contains(from_label) || !labels_.contains(to_label)) {
    throw Error("schema edge references an unknown label");
  }
  if (find(from_label, to_label, role) != npos) {
    throw Error("schema role '" + role + "' already defined for this label pair");
  }
  edges_.push_back({std::move(from_label), std::move(to_label), std::move(role)});
}

std::size_t SchemaGraph::find(const std::string& from_label, const std::string& to_label,
                              const std::string& role) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.from_label == from_label && e.to_label == to_label && e.role == role) return i;
  }
  return npos;
}

ConformanceMapping check_conformance(const DataGraph& data, const SchemaGraph& schema) {
  ConformanceMapping mu;
  mu.node_map.reserve(data.node_count());
  for (NodeId v = 0; v < data.node_count(); ++v) {
    const auto& label = data.nodes()[v].label;
    if (!schema.labels().contains(label)) throw UnknownLabel(v, label);
    mu.node_map.push_back(label);
  }
  mu.edge_map.reserve(data.edges().size());
  for (std::size_t i = 0; i < data.edges().size(); ++i) {
    const auto& e = data.edges()[i];
    const auto& from = mu.node_map[e.from];
    const auto& to = mu.node_map[e.to];
    const auto image = schema.find(from, to, e.role);
    if (image == SchemaGraph::npos) {
      throw UnmappableEdge(i, from + " -[" + e.role + "]-> " + to);
    }
    mu.edge_map.push_back(image);
  }
  return mu;
}

TransferSchemaGraph expand_transfer_schema(const SchemaGraph& schema,
                                           const RateTable& rates) {
  auto in_range = [](double r) { return std::isfinite(r) && r >= 0.0 && r <= 1.0; };
  TransferSchemaGraph result{schema, {}};
  result.rates.reserve(schema.edges().size());
  for (const auto& edge : schema.edges()) {
    const auto it = rates.find(edge.role);
    if (it == rates.end()) throw MissingRate(edge.role);
    if (!in_range(it->second.forward) || !in_range(it->second.backward)) {
      throw RateOutOfRange(edge.role);
    }
    result.rates.push_back(it->second);
  }
  return result;
}

TransferDataGraph::TransferDataGraph(std::vector<DataNode> nodes,
                                     std::vector<TransferEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const auto n = nodes_.size();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.from >= n || e.to >= n) throw Error("transfer edge endpoint out of range");
    if (!(e.weight >= 0.0)) throw Error("transfer edge weight must be non-negative");
    triplets.emplace_back(Eigen::Index(e.to), Eigen::Index(e.from), e.weight);
  }
  matrix_.resize(Eigen::Index(n), Eigen::Index(n));
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.makeCompressed();
  build_adjacency(n, edges_, true, out_offsets_, out_edges_);
  build_adjacency(n, edges_, false, in_offsets_, in_edges_);
}

std::span<const std::size_t> TransferDataGraph::forward_out(NodeId u) const {
  return std::span(out_edges_).subspan(out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]);
}

std::span<const std::size_t> TransferDataGraph::forward_in(NodeId v) const {
  return std::span(in_edges_).subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

TransferDataGraph derive_transfer_data_graph(const DataGraph& data,
                                             const TransferSchemaGraph& transfer_schema,
                                             const ConformanceMapping& mapping) {
  const auto& edges = data.edges();
  if (mapping.edge_map.size() != edges.size() ||
      mapping.node_map.size() != data.node_count()) {
    throw Error("conformance mapping does not cover the data graph");
  }
  // OutDeg(u, t) for forward edges and the arriving count at v for backward.
  std::map<std::pair<NodeId, std::size_t>, std::size_t> out_degree, in_degree;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    ++out_degree[{edges[i].from, mapping.edge_map[i]}];
    ++in_degree[{edges[i].to, mapping.edge_map[i]}];
  }
  std::vector<TransferEdge> weighted;
  weighted.reserve(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const auto type = mapping.edge_map[i];
    const auto& rate = transfer_schema.rates.at(type);
    const auto fwd = static_cast<double>(out_degree.at({e.from, type}));
    const auto bwd = static_cast<double>(in_degree.at({e.to, type}));
    weighted.push_back({e.from, e.to, rate.forward / fwd, e.role, Direction::Forward});
    weighted.push_back({e.to, e.from, rate.backward / bwd, e.role, Direction::Backward});
  }
  return TransferDataGraph(data.nodes(), std::move(weighted));
}

std::vector<OutgoingMass> validate_outgoing_mass(const TransferDataGraph& graph) {
  std::vector<OutgoingMass> report(graph.node_count());
  for (const auto& e : graph.edges()) report[e.from].sum += e.weight;
  for (auto& entry : report) entry.exceeds_one = entry.sum > 1.0 + 1e-12;
  return report;
}

std::vector<NodeId> overloaded_nodes(const TransferDataGraph& graph) {
  std::vector<NodeId> nodes;
  const auto report = validate_outgoing_mass(graph);
  for (NodeId v = 0; v < report.size(); ++v) {
    if (report[v].exceeds_one) nodes.push_back(v);
  }
  return nodes;
}

SchemaGraph document_schema() {
  SchemaGraph schema;
  schema.add_label(kDocumentLabel);
  for (auto kind : {RelationKind::TermRef, RelationKind::Imports, RelationKind::Extends,
                    RelationKind::PriorVersion}) {
    schema.add_edge(kDocumentLabel, kDocumentLabel, std::string(to_string(kind)));
  }
  return schema;
}

RateTable default_document_rates() {
  return {{"Imports", {0.30, 0.05}},
          {"Extends", {0.20, 0.05}},
          {"TermRef", {0.15, 0.05}},
          {"PriorVersion", {0.05, 0.15}}};
}

DataGraph document_data_graph(const std::vector<Document>& docs,
                              const std::vector<RelationEdge>& relations) {
  DataGraph graph;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].doc_id != static_cast<DocId>(i)) {
      throw Error("document ids must be dense and ordered to form a data graph");
    }
    std::set<std::string> keywords;
    for (const auto& entry : docs[i].keywords) keywords.insert(entry.first);
    graph.add_node(kDocumentLabel, std::move(keywords));
  }
  for (const auto& rel : relations) {
    if (rel.kind == RelationKind::None) continue;
    graph.add_edge(static_cast<NodeId>(rel.from_doc), static_cast<NodeId>(rel.to_doc),
                   std::string(to_string(rel.kind)));
  }
  return graph;
}

}  // namespace swdrank
