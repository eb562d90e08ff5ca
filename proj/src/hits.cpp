#include "swdrank/hits.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace swdrank {

bool SubGraph::contains(NodeId v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

Eigen::Index SubGraph::local(NodeId v) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
  if (it == nodes.end() || *it != v) throw Error("node is not in the sub-graph");
  return Eigen::Index(it - nodes.begin());
}

SubGraph build_subgraph(const TransferDataGraph& graph, const Eigen::VectorXd& ranks,
                        const std::vector<NodeId>& seeds, std::size_t inlink_cap) {
  if (seeds.empty()) throw Error("build_subgraph needs at least one seed");
  if (ranks.size() != Eigen::Index(graph.node_count())) {
    throw Error("rank vector length does not match the graph");
  }
  const auto& edges = graph.edges();
  std::set<NodeId> members;
  SubGraph sub;
  for (const NodeId seed : seeds) {
    if (seed >= graph.node_count()) throw Error("seed is not a node of the graph");
    if (members.insert(seed).second) sub.seeds.push_back(seed);
  }
  for (const NodeId seed : sub.seeds) {
    for (const auto idx : graph.forward_out(seed)) members.insert(edges[idx].to);

    std::vector<NodeId> in_linkers;
    for (const auto idx : graph.forward_in(seed)) {
      if (edges[idx].from != seed) in_linkers.push_back(edges[idx].from);
    }
    std::sort(in_linkers.begin(), in_linkers.end());
    in_linkers.erase(std::unique(in_linkers.begin(), in_linkers.end()), in_linkers.end());
    const auto take = std::min(inlink_cap, in_linkers.size());
    std::partial_sort(in_linkers.begin(), in_linkers.begin() + std::ptrdiff_t(take),
                      in_linkers.end(), [&](NodeId a, NodeId b) {
                        const double ra = ranks[Eigen::Index(a)];
                        const double rb = ranks[Eigen::Index(b)];
                        return ra != rb ? ra > rb : a < b;
                      });
    members.insert(in_linkers.begin(), in_linkers.begin() + std::ptrdiff_t(take));
  }
  sub.nodes.assign(members.begin(), members.end());
  for (const NodeId u : sub.nodes) {
    for (const auto idx : graph.forward_out(u)) {
      const auto& e = edges[idx];
      if (members.contains(e.to)) sub.edges.push_back({e.from, e.to, e.weight});
    }
  }
  return sub;
}

Eigen::SparseMatrix<double> adjacency(const SubGraph& graph, bool weighted) {
  const auto n = Eigen::Index(graph.nodes.size());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(graph.edges.size());
  for (const auto& e : graph.edges) {
    triplets.emplace_back(graph.local(e.from), graph.local(e.to), weighted ? e.weight : 1.0);
  }
  Eigen::SparseMatrix<double> matrix(n, n);
  matrix.setFromTriplets(triplets.begin(), triplets.end());
  matrix.makeCompressed();
  return matrix;
}

HitsScores hits(const SubGraph& graph, const SubGraphParams& params,
                const HitsObserver<double>& observer) {
  if (graph.edges.empty()) throw DegenerateSubGraph();
  const auto n = Eigen::Index(graph.nodes.size());
  const Eigen::VectorXd start = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  auto run = hits_iterate<double>(adjacency(graph, params.weighted), start, start,
                                  params.epsilon, params.max_iter, observer);
  return {graph.nodes, std::move(run.authority), std::move(run.hub), run.iterations,
          run.converged};
}

std::vector<RankedDoc> top_k(const std::vector<NodeId>& nodes, const Eigen::VectorXd& weights,
                             std::size_t k) {
  std::vector<RankedDoc> ranked;
  ranked.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ranked.push_back({static_cast<DocId>(nodes[i]), weights[Eigen::Index(i)]});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedDoc& a, const RankedDoc& b) {
    return a.weight != b.weight ? a.weight > b.weight : a.doc < b.doc;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

DualLists dual_lists(const HitsScores& scores, std::size_t k) {
  if (k == 0) throw Error("dual_lists needs k >= 1");
  return {top_k(scores.nodes, scores.authority, k), top_k(scores.nodes, scores.hub, k)};
}

}  // namespace swdrank
