#pragma once

// Within-task bandit algorithms.  Each runs m rounds against a loss table
// fixed before round 1 and reports the trajectory, the accumulated loss
// estimator, and the estimated optimum.

#include <cstdint>
#include <vector>

#include "metabandit/domains.hpp"
#include "metabandit/linalg.hpp"
#include "metabandit/mirror_descent.hpp"
#include "metabandit/regularizers.hpp"
#include "metabandit/rng.hpp"

namespace metabandit {

struct TaskOutcome {
  Vec estimated_optimum;           // extreme point of K
  Vec true_optimum;                // empty when the environment does not expose it
  double realized_regret = 0.0;    // vs true_optimum, when known
  double realized_loss = 0.0;      // sum of played losses
  Vec estimator_sum;               // compensated sum of loss estimators
  std::vector<int> arm_trajectory;      // MAB
  std::vector<double> loss_trajectory;  // losses actually observed
};

// MAB with implicit exploration: sample from the iterate, estimate with
// l_hat(a) = loss * 1{played a} / (x(a) + gamma), mirror-descend with the
// Tsallis regularizer on the full simplex.  losses is m x d in [0,1].
TaskOutcome run_task_mab_implicit(const Vec& init, double eta, double beta, double gamma,
                                  const Matrix& losses, int true_arm, SplitRng& rng,
                                  bool record_trajectory = true);

// MAB with guaranteed exploration: gamma = 0 (unbiased estimators) and the
// simplex floored at eps/d.  init must already satisfy the floor.
TaskOutcome run_task_mab_guaranteed(const Vec& init, double eta, double beta, double eps,
                                    const Matrix& losses, int true_arm, SplitRng& rng,
                                    bool record_trajectory = true);

// Bandit linear optimization with barrier mirror descent and Dikin-ellipsoid
// exploration.  Each round: eigendecompose H = hessian(x), play
// y = x + s * lambda_j^{-1/2} v_j for a uniform axis j and sign s, observe
// <loss, y> (+offset), estimate l_hat = d <loss,y> s lambda_j^{1/2} v_j.
// `offsets` holds a per-round additive loss constant (zero if absent); it
// affects the realized loss but not the estimator direction.  `vertices`
// enumerates the extreme points for the estimated optimum on polytopes
// (ignored for the ball).
TaskOutcome run_task_blo(const Vec& init, double eta, const Regularizer& barrier,
                         const Domain& domain, const std::vector<Vec>& losses,
                         const std::vector<double>& offsets, const std::vector<Vec>& vertices,
                         const Vec& true_opt, SplitRng& rng, bool record_trajectory = true);

// argmin_{x in K} <l_hat, x>: simplex -> lowest-index minimal vertex;
// sphere -> -l_hat/||l_hat|| (center when l_hat = 0); polytope -> best of
// the enumerated vertices (lowest index wins ties).
Vec estimated_optimum(const Domain& domain, const Vec& lhat_sum,
                      const std::vector<Vec>& vertices = {});

}  // namespace metabandit
