#include "swdrank/objectrank.hpp"

#include <cmath>
#include <string>

namespace swdrank {

std::string_view to_string(InitMode mode) {
  return mode == InitMode::Uniform ? "uniform" : "inratio";
}

InitMode parse_init_mode(std::string_view text) {
  if (text == "uniform") return InitMode::Uniform;
  if (text == "inratio") return InitMode::InRatio;
  throw ConfigError("unknown init mode '" + std::string(text) +
                    "' (expected uniform or inratio)");
}

void RankParams::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw ConfigError("damping must lie in (0, 1)");
  }
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (max_iter < 1) throw ConfigError("max_iter must be at least 1");
}

Eigen::VectorXd rank_step(const TransferDataGraph& graph, const Eigen::VectorXd& scores,
                          double damping) {
  if (scores.size() != Eigen::Index(graph.node_count())) {
    throw Error("score vector length does not match node count");
  }
  return rank_step<double>(graph.matrix(), scores, damping);
}

Eigen::VectorXd init_rank(const TransferDataGraph& graph, InitMode mode) {
  const auto n = Eigen::Index(graph.node_count());
  if (n == 0) throw EmptyGraph();
  const auto total = graph.edges().size();
  if (mode == InitMode::Uniform || total == 0) {
    return Eigen::VectorXd::Constant(n, 1.0 / double(n));
  }
  Eigen::VectorXd init = Eigen::VectorXd::Zero(n);
  for (const auto& e : graph.edges()) init[Eigen::Index(e.to)] += 1.0;
  return init / double(total);
}

RankVector compute_objectrank(const TransferDataGraph& graph, const RankParams& params) {
  params.validate();
  if (graph.node_count() == 0) throw EmptyGraph();
  if (auto bad = overloaded_nodes(graph); !bad.empty()) {
    throw MassExceedsOne(std::move(bad));
  }
  auto run = power_iterate<double>(graph.matrix(), init_rank(graph, params.init_mode),
                                   params.damping, params.epsilon, params.max_iter);
  RankVector ranks{std::move(run.scores), run.iterations, run.residual};
  if (!run.converged) throw NotConverged(std::move(ranks));
  return ranks;
}

}  // namespace swdrank
