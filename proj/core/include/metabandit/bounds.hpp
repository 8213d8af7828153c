#pragma once

// Closed-form evaluation of the regret-bound expressions used by the
// harness: asymptotic leading terms, the conditional gapped bound and its
// piecewise entropy surrogate, identification probabilities, the Lambert-W
// remainder, and the sphere similarity closed form.

#include <map>
#include <string>

#include "metabandit/linalg.hpp"

namespace metabandit {

struct BoundSpec {
  std::string which;
  std::map<std::string, double> params;
  Vec histogram;  // optimum frequencies, for entropy-dependent bounds
};

// Principal branch of w e^w = z for z >= 0, Newton, tolerance 1e-12.
double lambert_w(double z);

// Tsallis entropy of a (normalized) histogram at a given beta.
double histogram_entropy(const Vec& histogram, double beta);

// Indicator of m >= (75 d / (eps Delta^2)) log(d / (eps Delta^2)).
bool iota_condition(double d, double m, double eps, double delta);

// Piecewise entropy surrogate: H_beta + 56/(m d) when the iota condition
// holds, else the worst case (d^{1-beta}-1)/(1-beta).
double h_beta_conditional(double h_beta, double beta, double d, double m, double eps,
                          double delta);

// Per-task misidentification bound d * exp(-3 eps Delta^2 m / (28 d)).
double identification_kappa(double d, double m, double eps, double delta);

// Evaluate a named bound.  Supported `which` values:
//   mab-asymptotic        2 min_beta sqrt(H_beta d^beta m / beta), dense scan
//   mab-conditional       eps m + min_beta 2 sqrt(h_beta(Delta) d^beta m/beta)
//   iota                  the indicator as 0/1
//   lambert-term          75 d / Delta^2 * W(m / 75)
//   identification-kappa  exp(-3 eps Delta^2 m / (28 d))
//   misid-bound           d * kappa
//   robust-entropy        C (s + d^{1-beta} / T^{beta (1-p)})
//   single-task-mab       2 sqrt(D_beta^2 d^beta m / beta) at beta = 1/2
//   single-task-blo       2 sqrt(32 D^2 d^2 m)
//   sphere-similarity     log((1-(1+eps)^{-2} r^2)/(1-(1+eps)^{-2}))
// Missing parameters raise std::invalid_argument.
double eval_bound(const BoundSpec& spec);

}  // namespace metabandit
