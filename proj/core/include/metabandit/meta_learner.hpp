#pragma once

// The meta-algorithm across tasks: FTL over initializations (running mean of
// estimated optima), per-grid-point EWOO for step-sizes, and multiplicative
// weights over the tuning-parameter grid, with the schedule constants that
// tie them together.

#include <cstdint>
#include <string>
#include <vector>

#include "metabandit/bandit_learners.hpp"
#include "metabandit/domains.hpp"
#include "metabandit/regularizers.hpp"
#include "metabandit/rng.hpp"

namespace metabandit {

enum class Mode { MabImplicit, MabGuaranteed, Blo };

struct Schedule {
  double eta_lo = 0.0;
  double eta_hi = 0.0;
  double alpha = 0.0;
};

struct MetaConfig {
  Mode mode = Mode::MabImplicit;
  std::size_t d = 2;   // decision dimension (reduced dimension for polytopes)
  std::size_t m = 100;
  std::size_t T = 10;
  std::size_t k = 4;   // grid size
  double theta_lo = 0.5, theta_hi = 1.0;  // beta range (MAB) or eps range (BLO)
  double rho = 0.1;
  double eps = 0.1;    // fixed interior-projection eps (MAB modes)
  double gamma = 0.0;  // implicit-exploration parameter (MabImplicit)
  // Barrier constants (BLO): self-concordance nu, proof radius K, S1.
  double nu = 1.0;
  double k_const = kSphereProofK;
  double s1 = kSphereProofS1;
};

// Per-round loss coefficient g(theta): d^beta/beta for MAB, 32 d^2 for BLO.
double schedule_g(double theta, std::size_t d, Mode mode);
// Additive per-round term f(theta): 0 for MAB, theta (= eps) for BLO.
double schedule_f(double theta, Mode mode);
// Divergence radius D_theta^2 for the grid point.
double schedule_dsq(double theta, const MetaConfig& cfg);
// Step-size interval and EWOO exponent weight for one grid point.
Schedule hyperparam_schedule(double theta, const MetaConfig& cfg);
// MW learning rate lambda = sqrt(log k / (2T)) / (M (1/rho + sqrt(1+rho^2)) + F m).
double mw_lambda(const MetaConfig& cfg);

// Upper-bound surrogate U = B/eta + eta g m + f m (+ rho^2 D^2 / eta when
// regularized).
double upper_bound_value(double bregman_term, double eta, double g_m, double f_m,
                         bool regularized, double rho, double dsq);

// EWOO posterior mean over [eta_lo, eta_hi] for the accumulated exponent
// -alpha (sum_b / v + sum_g v); composite Simpson on 2049 nodes with
// max-shifted exponent.  Empty history (both sums zero) gives the midpoint.
double ewoo_update(double sum_b, double sum_g, const Schedule& sched);

// Sampling index ~ softmax(log_weights) via inverse CDF; update subtracts
// lambda * loss per grid point.
std::size_t mw_sample(const std::vector<double>& log_weights, SplitRng& rng);
void mw_update(std::vector<double>& log_weights, double lambda,
               const std::vector<double>& losses);
std::vector<double> mw_distribution(const std::vector<double>& log_weights);

// FTL initialization: interior projection of the running mean of estimated
// optima (the domain center when no history exists).  For MAB modes
// eps_proj is the fixed eps; for BLO it is the sampled theta.
Vec ftl_init(const Vec& running_sum, std::size_t t, double eps_proj, Mode mode,
             const Domain& domain);

// V^2 = (1/T) sum psi(c(x_t)) - psi(c(mean)); nonnegative by convexity.
double task_similarity_v(const std::vector<Vec>& estimates, const Regularizer& reg,
                         const Domain& domain, double eps_proj, Mode mode);

class MetaState {
 public:
  // `barrier` is required for BLO and ignored otherwise.
  MetaState(const MetaConfig& cfg, const Domain& domain, const Regularizer* barrier = nullptr);

  const MetaConfig& config() const { return cfg_; }
  std::size_t grid_size() const { return thetas_.size(); }
  double theta(std::size_t idx) const { return thetas_[idx]; }
  double eta(std::size_t idx) const { return eta_cur_[idx]; }
  const Schedule& schedule(std::size_t idx) const { return schedules_[idx]; }
  double lambda() const { return lambda_; }
  std::size_t task_count() const { return t_; }
  const std::vector<double>& log_weights() const { return logw_; }
  const Vec& running_sum() const { return running_sum_; }

  std::size_t sample_theta(SplitRng& rng) const { return mw_sample(logw_, rng); }

  // Initialization for a task launched with grid point idx.
  Vec init_for(std::size_t idx) const;

  // Digest one finished task: update the running mean, every EWOO copy with
  // its regularized surrogate, and every MW weight with its unregularized
  // surrogate.  `used_init` is the initialization the task actually ran with.
  void step(const TaskOutcome& outcome, const Vec& used_init);

  // JSON snapshot (schema documented in the README) for checkpoints and
  // golden-record tests.
  std::string snapshot_json() const;

 private:
  MetaConfig cfg_;
  const Domain* domain_;
  const Regularizer* barrier_;
  double lambda_;
  std::vector<double> thetas_;
  std::vector<Schedule> schedules_;
  std::vector<double> dsq_, g_, f_;
  std::vector<double> ewoo_sum_b_;  // per theta: sum of (B_s + rho^2 D^2)
  std::vector<double> eta_cur_;
  std::vector<double> logw_;
  Vec running_sum_;
  std::size_t t_ = 0;
};

}  // namespace metabandit
