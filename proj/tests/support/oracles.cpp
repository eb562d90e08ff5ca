#include "oracles.hpp"

#include <algorithm>
#include <cmath>

#include "swdrank/errors.hpp"

namespace swdrank::testing {

Eigen::VectorXd oracle_rank(const TransferDataGraph& graph, double damping) {
  const auto n = Eigen::Index(graph.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : graph.edges()) a(Eigen::Index(e.to), Eigen::Index(e.from)) += e.weight;
  const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - damping * a;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible()) throw SingularSystem();
  return lu.solve(Eigen::VectorXd::Constant(n, 1.0 - damping));
}

namespace {

Eigen::VectorXd dominant(const Eigen::MatrixXd& m, int steps) {
  Eigen::VectorXd v = Eigen::VectorXd::Ones(m.rows());
  v.normalize();
  for (int i = 0; i < steps; ++i) {
    Eigen::VectorXd next = m * v;
    const double norm = next.norm();
    if (norm == 0.0) return next;
    v = next / norm;
  }
  return v;
}

}  // namespace

OracleHits oracle_hits(const Eigen::MatrixXd& adjacency, int steps) {
  const Eigen::MatrixXd ata = adjacency.transpose() * adjacency;
  const Eigen::MatrixXd aat = adjacency * adjacency.transpose();
  return {dominant(ata, steps), dominant(aat, steps)};
}

OracleHits oracle_hits(const SubGraph& graph, bool weighted) {
  const auto n = Eigen::Index(graph.nodes.size());
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  for (const auto& edge : graph.edges) {
    const auto from = std::lower_bound(graph.nodes.begin(), graph.nodes.end(), edge.from);
    const auto to = std::lower_bound(graph.nodes.begin(), graph.nodes.end(), edge.to);
    e(from - graph.nodes.begin(), to - graph.nodes.begin()) += weighted ? edge.weight : 1.0;
  }
  return oracle_hits(e);
}

std::vector<double> pagerank_direct(const std::vector<std::vector<std::size_t>>& links,
                                    double damping, double tolerance) {
  const std::size_t n = links.size();
  std::vector<double> pr(n, 1.0);
  for (int sweep = 0; sweep < 100000; ++sweep) {
    std::vector<double> next(n, 1.0 - damping);
    for (std::size_t t = 0; t < n; ++t) {
      if (links[t].empty()) continue;
      const double share = damping * pr[t] / double(links[t].size());
      for (const auto a : links[t]) next[a] += share;
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next[i] - pr[i]));
    pr.swap(next);
    if (change <= tolerance) break;
  }
  return pr;
}

}  // namespace swdrank::testing
