#pragma once

// Distance-generating functions: the Tsallis family on the positive orthant
// (restricted to the simplex by the mirror-descent solver), the unit-ball
// log barrier, and polytope log barriers; plus Bregman divergences and the
// divergence radii that bound them.

#include <vector>

#include "metabandit/domains.hpp"
#include "metabandit/linalg.hpp"

namespace metabandit {

enum class RegularizerFamily { Tsallis, SphereBarrier, PolytopeBarrier };

// The ball proof constants differ from its geometric radius; both are kept.
inline constexpr double kSphereGeometricRadius = 1.0;
inline constexpr double kSphereProofK = 2.0;
inline constexpr double kSphereProofS1 = 2.0;

// psi_beta(p) = (1 - sum p^beta) / (1 - beta), Shannon limit at beta = 1.
double tsallis_value(const Vec& p, double beta);
// H_beta = -psi_beta; nonnegative, 0 at vertices.
double tsallis_entropy(const Vec& p, double beta);

class Regularizer {
 public:
  static Regularizer tsallis(std::size_t d, double beta);
  static Regularizer sphere_barrier(std::size_t d);
  // `minimizer` is the analytic center when available; pass an empty vector
  // for polytopes without one (value/derivatives still work).
  static Regularizer polytope_barrier(std::vector<Constraint> constraints, Vec minimizer);

  RegularizerFamily family() const { return family_; }
  std::size_t dimension() const { return d_; }
  double beta() const { return beta_; }
  // Self-concordance parameter: 1 for the ball, |C| for polytopes.
  double nu() const;
  const Vec& minimizer() const { return minimizer_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  Matrix hessian(const Vec& x) const;

  // S1 = spectral norm of the Hessian at the minimizer.
  double s1() const;

  // B(x || y) = psi(x) - psi(y) - <grad psi(y), x - y>.
  double bregman(const Vec& x, const Vec& y) const;

  // Largest t >= 0 with x + t dx still strictly feasible for the barrier
  // families (infinity is capped at 1e18).  Tsallis: step to the orthant wall.
  double max_step(const Vec& x, const Vec& dx) const;

 private:
  Regularizer(RegularizerFamily f, std::size_t d) : family_(f), d_(d) {}

  void check_interior(const Vec& x) const;

  RegularizerFamily family_;
  std::size_t d_;
  double beta_ = 0.0;
  std::vector<Constraint> constraints_;
  Vec minimizer_;
};

// D_beta^2 = (d^{1-beta} - 1)/(1 - beta), log d in the beta -> 1 limit.
double mab_divergence_radius_sq(double beta, std::size_t d);

// D_eps^2 = 9 nu^{3/2} K sqrt(S1) / eps, with K the per-domain proof constant.
double blo_divergence_radius_sq(double eps, double nu, double k_const, double s1);

}  // namespace metabandit
