#include "metabandit/mirror_descent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metabandit {

namespace {

constexpr double kShannonSwitch = 1e-6;

// Coordinate-wise link function phi = psi' and its inverse.  For beta < 1,
// phi(x) = -beta x^{beta-1}/(1-beta) is increasing with range (-inf, 0).
double phi(double x, double beta) {
  if (std::abs(1.0 - beta) < kShannonSwitch) return 1.0 + std::log(x);
  if (beta == 0.5) return -1.0 / std::sqrt(x);
  return -beta / (1.0 - beta) * std::pow(x, beta - 1.0);
}

double phi_inv(double q, double beta) {
  if (std::abs(1.0 - beta) < kShannonSwitch) return std::exp(q - 1.0);
  if (beta == 0.5) return 1.0 / (q * q);
  // q < 0 here; invert q = -c x^{beta-1} with c = beta/(1-beta).
  const double c = beta / (1.0 - beta);
  return std::pow(-q / c, 1.0 / (beta - 1.0));
}

struct DualSolve {
  Vec x;
  double mu;
};

// Solve sum_a max(floor, phi_inv(base_a + mu)) = 1 for mu.  The sum is
// increasing in mu, so a bracketed Newton (bisection fallback) is safe.
// Clamped coordinates contribute the floor; the monotone sweep realizes the
// water-filling active set implicitly.
DualSolve solve_mu(const Vec& base, double beta, double floor, const double* warm) {
  const std::size_t d = base.size();
  const bool shannon = std::abs(1.0 - beta) < kShannonSwitch;
  double base_max = base[0];
  for (double b : base) base_max = std::max(base_max, b);

  auto eval = [&](double mu, double* deriv) {
    double s = 0.0, ds = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      const double q = base[a] + mu;
      if (!shannon && q >= 0.0) {
        s = 1e300;  // past the pole of the inverse link
        continue;
      }
      const double xv = phi_inv(q, beta);
      if (xv <= floor) {
        s += floor;
      } else {
        s += xv;
        // dx/dq = 1/psi''(x) = x^{2-beta}/beta (x for the Shannon case).
        ds += shannon ? xv
                      : (beta == 0.5 ? 2.0 * xv * std::sqrt(xv)
                                     : std::pow(xv, 2.0 - beta) / beta);
      }
    }
    if (deriv) *deriv = ds;
    return s;
  };

  // Bracket: lo makes every unclamped coordinate <= tiny; hi makes the
  // largest coordinate >= 1.
  const double tiny = 1e-6 * (1.0 - floor * d) / d;
  double lo = phi(tiny, beta) - base_max;
  double hi = shannon ? phi(1.5, beta) - base_max
                      : -base_max - 1e-18 * std::max(1.0, std::abs(base_max));
  while (eval(hi, nullptr) < 1.0) hi = shannon ? hi + 1.0 : 0.5 * (hi + (-base_max));
  while (eval(lo, nullptr) > 1.0) lo -= std::max(1.0, hi - lo);

  double mu = (warm && std::isfinite(*warm) && *warm > lo && *warm < hi) ? *warm
                                                                         : 0.5 * (lo + hi);
  double g = 0.0, dg = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    g = eval(mu, &dg);
    const double resid = g - 1.0;
    if (std::abs(resid) <= 1e-13) break;
    if (resid > 0.0)
      hi = mu;
    else
      lo = mu;
    double next = (dg > 0.0 && std::isfinite(g)) ? mu - resid / dg : mu;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == mu) break;
    mu = next;
  }
  if (!std::isfinite(g)) throw std::runtime_error("solve_tsallis_dual: bracketing failure");

  DualSolve out;
  out.mu = mu;
  out.x.resize(d);
  double free_sum = 0.0;
  std::size_t clamped = 0;
  for (std::size_t a = 0; a < d; ++a) {
    const double q = base[a] + mu;
    const double xv = (!shannon && q >= 0.0) ? 1e300 : phi_inv(q, beta);
    if (xv <= floor) {
      out.x[a] = floor;
      ++clamped;
    } else {
      out.x[a] = xv;
      free_sum += xv;
    }
  }
  // Exact renormalization of the free coordinates (removes the 1e-13 slack).
  const double target = 1.0 - floor * static_cast<double>(clamped);
  if (free_sum > 0.0 && target > 0.0) {
    const double scale = target / free_sum;
    for (std::size_t a = 0; a < d; ++a)
      if (out.x[a] > floor) out.x[a] *= scale;
  }
  return out;
}

}  // namespace

Vec solve_tsallis_dual_warm(const Vec& x1, const Vec& eta_l, double beta, double eps_floor,
                            double* mu_io) {
  if (beta <= 0.0 || beta > 1.0)
    throw std::invalid_argument("solve_tsallis_dual: beta must be in (0,1]");
  if (eps_floor < 0.0 || eps_floor >= 1.0)
    throw std::invalid_argument("solve_tsallis_dual: eps_floor must be in [0,1)");
  if (x1.size() != eta_l.size())
    throw std::invalid_argument("solve_tsallis_dual: size mismatch");
  const std::size_t d = x1.size();
  Vec base(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (x1[a] <= 0.0) throw std::domain_error("solve_tsallis_dual: initialization on boundary");
    base[a] = phi(x1[a], beta) - eta_l[a];
  }
  DualSolve s = solve_mu(base, beta, eps_floor / static_cast<double>(d), mu_io);
  if (mu_io) *mu_io = s.mu;
  return s.x;
}

Vec solve_tsallis_dual(const Vec& x1, const Vec& eta_l, double beta, double eps_floor) {
  return solve_tsallis_dual_warm(x1, eta_l, beta, eps_floor, nullptr);
}

Vec solve_barrier_newton(const Vec& x1, const Vec& eta_l, const Regularizer& barrier,
                         const Vec* warm) {
  if (barrier.family() == RegularizerFamily::Tsallis)
    throw std::invalid_argument("solve_barrier_newton: barrier family required");
  const std::size_t d = x1.size();
  const Vec g1 = barrier.gradient(x1);
  auto objective = [&](const Vec& x) {
    double f = barrier.value(x);
    for (std::size_t i = 0; i < d; ++i) f += (eta_l[i] - g1[i]) * x[i];
    return f;
  };

  Vec x = x1;
  if (warm != nullptr && warm->size() == d) {
    // A warm start from the previous solution keeps the iteration count small
    // when the linear term changes only slightly between calls.
    try {
      objective(*warm);
      x = *warm;
    } catch (const std::domain_error&) {
      // warm point left the domain; fall back to the anchor
    }
  }
  double prev_decrement_sq = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 500; ++iter) {
    Vec grad = barrier.gradient(x);
    for (std::size_t i = 0; i < d; ++i) grad[i] += eta_l[i] - g1[i];
    const Matrix h = barrier.hessian(x);
    Vec dx = cholesky_solve(h, grad);
    for (double& v : dx) v = -v;
    const double decrement_sq = -dot(grad, dx);
    if (decrement_sq < 1e-22) return x;

    double t = std::min(1.0, 0.95 * barrier.max_step(x, dx));
    if (decrement_sq < 1e-8) {
      // Quadratic-convergence region: objective progress is below double
      // precision here, so skip the line search and take full Newton steps
      // until the decrement bottoms out.
      if (decrement_sq >= prev_decrement_sq) return x;
      prev_decrement_sq = decrement_sq;
      for (std::size_t i = 0; i < d; ++i) x[i] += t * dx[i];
      continue;
    }
    prev_decrement_sq = decrement_sq;
    const double f0 = objective(x);
    const double slope = dot(grad, dx);
    Vec trial(d);
    for (int bt = 0; bt < 80; ++bt) {
      bool ok = true;
      for (std::size_t i = 0; i < d; ++i) trial[i] = x[i] + t * dx[i];
      try {
        if (objective(trial) > f0 + 1e-4 * t * slope) ok = false;
      } catch (const std::domain_error&) {
        ok = false;
      }
      if (ok) break;
      t *= 0.5;
    }
    // Stop once rounding swamps the remaining decrement: no measurable
    // objective progress along a descent direction means the iterate cannot
    // be improved in double precision.
    const double fn = objective(trial);
    if (fn >= f0) return x;
    x = trial;
    if (decrement_sq < 1e-16 && f0 - fn <= 1e-15 * (1.0 + std::abs(f0))) return x;
  }
  throw std::runtime_error("solve_barrier_newton: no convergence in 500 iterations");
}

OmdState::OmdState(const Regularizer& reg, Vec x1, double eta, double eps_floor)
    : reg_(&reg),
      x1_(std::move(x1)),
      eta_(eta),
      eps_floor_(eps_floor),
      sum_(x1_.size(), 0.0),
      comp_(x1_.size(), 0.0),
      x_(x1_) {
  if (eta <= 0.0) throw std::invalid_argument("OmdState: eta must be positive");
  if (eps_floor > 0.0 && reg.family() != RegularizerFamily::Tsallis)
    throw std::invalid_argument("OmdState: eps_floor applies to the simplex only");
}

const Vec& OmdState::update(const Vec& estimator) {
  if (estimator.size() != sum_.size()) throw std::invalid_argument("OmdState: size mismatch");
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    const double y = estimator[i] - comp_[i];
    const double t = sum_[i] + y;
    comp_[i] = (t - sum_[i]) - y;
    sum_[i] = t;
  }
  Vec eta_l(sum_.size());
  for (std::size_t i = 0; i < sum_.size(); ++i) eta_l[i] = eta_ * sum_[i];
  if (reg_->family() == RegularizerFamily::Tsallis) {
    // The hint starts as NaN; solve_mu falls back to the bracket midpoint
    // whenever the hint is out of range.
    x_ = solve_tsallis_dual_warm(x1_, eta_l, reg_->beta(), eps_floor_, &mu_warm_);
  } else {
    x_ = solve_barrier_newton(x1_, eta_l, *reg_, &x_);
  }
  return x_;
}

}  // namespace metabandit
