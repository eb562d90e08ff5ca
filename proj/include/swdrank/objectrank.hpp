#ifndef SWDRANK_OBJECTRANK_HPP
#define SWDRANK_OBJECTRANK_HPP

#include <string_view>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "swdrank/errors.hpp"
#include "swdrank/graph.hpp"

namespace swdrank {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class InitMode { Uniform, InRatio };

std::string_view to_string(InitMode mode);
InitMode parse_init_mode(std::string_view text);

struct RankParams {
  double damping = 0.85;
  double epsilon = 1e-8;
  int max_iter = 200;
  InitMode init_mode = InitMode::InRatio;

  /// Throws ConfigError unless 0 < d < 1, epsilon > 0 and max_iter >= 1.
  void validate() const;

  friend bool operator==(const RankParams&, const RankParams&) = default;
};

struct RankVector {
  Eigen::VectorXd scores;
  int iterations_used = 0;
  double final_residual = 0.0;

  friend bool operator==(const RankVector& a, const RankVector& b) {
    return a.scores.size() == b.scores.size() && a.scores == b.scores &&
           a.iterations_used == b.iterations_used &&
           a.final_residual == b.final_residual;
  }
};

/// Raised when max_iter is exhausted. Carries the last iterate so the caller
/// can accept it.
class NotConverged : public Error {
 public:
  explicit NotConverged(RankVector best)
      : Error("ObjectRank did not converge (residual " +
              std::to_string(best.final_residual) + " after " +
              std::to_string(best.iterations_used) + " iterations)"),
        best_(std::move(best)) {}
  const RankVector& best() const { return best_; }

 private:
  RankVector best_;
};

/// One application of r' = (1 - d) + d * A r.
template <typename Scalar>
Vector<Scalar> rank_step(const Eigen::SparseMatrix<Scalar>& transfer,
                         const Eigen::Ref<const Vector<Scalar>>& scores, Scalar damping) {
  Vector<Scalar> next = transfer * scores;
  next *= damping;
  next.array() += Scalar(1) - damping;
  return next;
}

/// Residual threshold that keeps the L1 distance to the fixed point within
/// `tolerance`. With outgoing mass at most one, that distance is bounded by
/// d / (1 - d) times the last step.
template <typename Scalar>
Scalar residual_for_error(Scalar tolerance, Scalar damping) {
  return tolerance * (Scalar(1) - damping) / damping;
}

template <typename Scalar>
struct PowerIterationResult {
  Vector<Scalar> scores;
  int iterations = 0;
  Scalar residual = Scalar(0);
  bool converged = false;
};

/// Iterates rank_step until the L1 change drops below epsilon.
template <typename Scalar>
PowerIterationResult<Scalar> power_iterate(const Eigen::SparseMatrix<Scalar>& transfer,
                                           Vector<Scalar> scores, Scalar damping,
                                           Scalar epsilon, int max_iter) {
  PowerIterationResult<Scalar> result;
  for (int it = 1; it <= max_iter; ++it) {
    Vector<Scalar> next = rank_step<Scalar>(transfer, scores, damping);
    result.residual = (next - scores).template lpNorm<1>();
    scores.swap(next);
    result.iterations = it;
    if (result.residual < epsilon) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(scores);
  return result;
}

Eigen::VectorXd rank_step(const TransferDataGraph& graph, const Eigen::VectorXd& scores,
                          double damping);

/// Uniform: 1/N everywhere. InRatio: in-edge count / total edge count,
/// falling back to Uniform on an edgeless graph.
Eigen::VectorXd init_rank(const TransferDataGraph& graph, InitMode mode);

/// Offline authority scores. Refuses graphs with any node whose outgoing
/// transfer mass exceeds one.
RankVector compute_objectrank(const TransferDataGraph& graph, const RankParams& params = {});

}  // namespace swdrank

#endif  // SWDRANK_OBJECTRANK_HPP
