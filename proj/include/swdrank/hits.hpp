#ifndef SWDRANK_HITS_HPP
#define SWDRANK_HITS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "swdrank/corpus.hpp"
#include "swdrank/errors.hpp"
#include "swdrank/graph.hpp"
#include "swdrank/objectrank.hpp"

namespace swdrank {

struct SubGraphParams {
  std::size_t n = 10;
  std::size_t inlink_cap = 3;  // c: in-linking pages added per seed
  bool weighted = true;
  double epsilon = 1e-10;
  int max_iter = 100;
};

struct SubGraphEdge {
  NodeId from = 0;
  NodeId to = 0;
  double weight = 0.0;

  friend bool operator==(const SubGraphEdge&, const SubGraphEdge&) = default;
};

/// The base set S_sigma: seeds, their out-link targets and up to c of their
/// best-ranked in-linkers, with the forward edges of D^A among them.
struct SubGraph {
  std::vector<NodeId> nodes;  // ascending
  std::vector<NodeId> seeds;  // in the order given
  std::vector<SubGraphEdge> edges;

  bool contains(NodeId v) const;
  /// Position of v in `nodes`.
  Eigen::Index local(NodeId v) const;
};

SubGraph build_subgraph(const TransferDataGraph& graph, const Eigen::VectorXd& ranks,
                        const std::vector<NodeId>& seeds, std::size_t inlink_cap);

/// The sub-graph's adjacency E with E(u, v) the summed weight of u -> v, in
/// local indices. Unweighted maps every edge to 1.
Eigen::SparseMatrix<double> adjacency(const SubGraph& graph, bool weighted);

/// Called after each normalized I/O round with the current (x, y).
template <typename Scalar>
using HitsObserver = std::function<void(int, const Vector<Scalar>&, const Vector<Scalar>&)>;

template <typename Scalar>
struct HitsIteration {
  Vector<Scalar> authority;
  Vector<Scalar> hub;
  int iterations = 0;
  bool converged = false;
};

/// Alternating I (x <- E^T y) and O (y <- E x) steps, each vector rescaled
/// to unit square-sum, until the largest entry change is below epsilon.
template <typename Scalar>
HitsIteration<Scalar> hits_iterate(const Eigen::SparseMatrix<Scalar>& adjacency,
                                   Vector<Scalar> authority, Vector<Scalar> hub,
                                   Scalar epsilon, int max_iter,
                                   const HitsObserver<Scalar>& observer = {}) {
  const Eigen::SparseMatrix<Scalar> transposed = adjacency.transpose();
  HitsIteration<Scalar> result;
  for (int it = 1; it <= max_iter; ++it) {
    Vector<Scalar> x = transposed * hub;
    Vector<Scalar> y = adjacency * x;
    const Scalar x_norm = x.norm();
    const Scalar y_norm = y.norm();
    if (!(x_norm > Scalar(0)) || !(y_norm > Scalar(0))) throw DegenerateSubGraph();
    x /= x_norm;
    y /= y_norm;
    const Scalar change = std::max((x - authority).cwiseAbs().maxCoeff(),
                                   (y - hub).cwiseAbs().maxCoeff());
    authority.swap(x);
    hub.swap(y);
    result.iterations = it;
    if (observer) observer(it, authority, hub);
    if (change < epsilon) {
      result.converged = true;
      break;
    }
  }
  result.authority = std::move(authority);
  result.hub = std::move(hub);
  return result;
}

struct HitsScores {
  std::vector<NodeId> nodes;  // same order as SubGraph::nodes
  Eigen::VectorXd authority;  // x
  Eigen::VectorXd hub;        // y
  int iterations_used = 0;
  bool converged = false;
};

/// HITS over the sub-graph from uniform positive weights. Throws
/// DegenerateSubGraph when there are no edges (or no positive weight).
HitsScores hits(const SubGraph& graph, const SubGraphParams& params = {},
                const HitsObserver<double>& observer = {});

struct RankedDoc {
  DocId doc = 0;
  double weight = 0.0;

  friend bool operator==(const RankedDoc&, const RankedDoc&) = default;
};

struct DualLists {
  std::vector<RankedDoc> authorities;
  std::vector<RankedDoc> hubs;
};

/// Sorts by weight descending then doc id ascending and truncates to k.
std::vector<RankedDoc> top_k(const std::vector<NodeId>& nodes, const Eigen::VectorXd& weights,
                             std::size_t k);

DualLists dual_lists(const HitsScores& scores, std::size_t k);

}  // namespace swdrank

#endif  // SWDRANK_HITS_HPP
