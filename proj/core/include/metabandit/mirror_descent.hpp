#pragma once

// Lazy (FTRL-form) mirror descent: every iterate re-solves
//   argmin_{x in K}  B(x || x1) + eta <L, x>
// against the initialization with the cumulative estimator sum L.

#include <limits>
#include <vector>

#include "metabandit/domains.hpp"
#include "metabandit/linalg.hpp"
#include "metabandit/regularizers.hpp"

namespace metabandit {

// Solve the simplex iterate for the Tsallis family.  Finds the normalization
// multiplier mu in grad psi(x) = grad psi(x1) - eta_l + mu 1_d by safeguarded
// 1-D Newton/bisection, clamping coordinates at eps_floor/d (active-set,
// smallest unconstrained values first).  The result sums to 1 within 1e-10.
Vec solve_tsallis_dual(const Vec& x1, const Vec& eta_l, double beta, double eps_floor = 0.0);

// Same solve with an in/out warm start for the multiplier; pass the previous
// round's value to cut Newton iterations in long loops.
Vec solve_tsallis_dual_warm(const Vec& x1, const Vec& eta_l, double beta, double eps_floor,
                            double* mu_io);

// Damped Newton on F(x) = <eta_l, x> + B(x || x1) for a barrier regularizer.
// Steps are capped at 0.95 of the distance to the boundary; Armijo
// backtracking (1e-4, halving); stops when the Newton decrement drops below
// 1e-10.  Throws std::runtime_error after 200 iterations.
Vec solve_barrier_newton(const Vec& x1, const Vec& eta_l, const Regularizer& barrier,
                         const Vec* warm = nullptr);

class OmdState {
 public:
  // eps_floor > 0 floors simplex coordinates at eps_floor/d (Tsallis only).
  OmdState(const Regularizer& reg, Vec x1, double eta, double eps_floor = 0.0);

  // Accumulate one estimator (compensated summation) and return the next
  // iterate of the lazy solve.
  const Vec& update(const Vec& estimator);

  const Vec& iterate() const { return x_; }
  const Vec& cumulative_estimator() const { return sum_; }
  double eta() const { return eta_; }

 private:
  const Regularizer* reg_;
  Vec x1_;
  double eta_;
  double eps_floor_;
  Vec sum_, comp_;  // Kahan pair
  Vec x_;
  double mu_warm_ = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace metabandit
