#include "metabandit/meta_learner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace metabandit {

double schedule_g(double theta, std::size_t d, Mode mode) {
  const double dd = static_cast<double>(d);
  if (mode == Mode::Blo) return 32.0 * dd * dd;
  return std::pow(dd, theta) / theta;
}

double schedule_f(double theta, Mode mode) { return mode == Mode::Blo ? theta : 0.0; }

double schedule_dsq(double theta, const MetaConfig& cfg) {
  if (cfg.mode == Mode::Blo)
    return blo_divergence_radius_sq(theta, cfg.nu, cfg.k_const, cfg.s1);
  return mab_divergence_radius_sq(theta, cfg.d);
}

Schedule hyperparam_schedule(double theta, const MetaConfig& cfg) {
  if (cfg.rho <= 0.0 || cfg.rho >= 1.0)
    throw std::invalid_argument("hyperparam_schedule: rho must be in (0,1)");
  const double dsq = schedule_dsq(theta, cfg);
  const double dtheta = std::sqrt(dsq);
  const double gm = schedule_g(theta, cfg.d, cfg.mode) * static_cast<double>(cfg.m);
  Schedule s;
  s.eta_lo = cfg.rho * dtheta / std::sqrt(gm);
  s.eta_hi = dtheta * std::sqrt((1.0 + cfg.rho * cfg.rho) / gm);
  s.alpha = 2.0 * cfg.rho * cfg.rho / (dtheta * std::sqrt(gm));
  return s;
}

double mw_lambda(const MetaConfig& cfg) {
  const double dd = static_cast<double>(cfg.d);
  const double mm = static_cast<double>(cfg.m);
  double M, F;
  if (cfg.mode == Mode::Blo) {
    // M = 12 d sqrt(2 K m / eps_lo) (nu^3 S1)^{1/4} with eps_lo = 1/m.
    M = 12.0 * dd * std::sqrt(2.0 * cfg.k_const * mm * mm) *
        std::pow(cfg.nu * cfg.nu * cfg.nu * cfg.s1, 0.25);
    F = 1.0;
  } else {
    M = dd * std::sqrt(mm);
    F = 0.0;
  }
  const double denom = M * (1.0 / cfg.rho + std::sqrt(1.0 + cfg.rho * cfg.rho)) + F * mm;
  const double logk = std::log(static_cast<double>(std::max<std::size_t>(cfg.k, 2)));
  return std::sqrt(logk / (2.0 * static_cast<double>(cfg.T))) / denom;
}

double upper_bound_value(double bregman_term, double eta, double g_m, double f_m,
                         bool regularized, double rho, double dsq) {
  if (eta <= 0.0) throw std::invalid_argument("upper_bound_value: eta must be positive");
  double u = bregman_term / eta + eta * g_m + f_m;
  if (regularized) u += rho * rho * dsq / eta;
  return u;
}

double ewoo_update(double sum_b, double sum_g, const Schedule& sched) {
  if (sched.eta_hi <= sched.eta_lo)
    throw std::invalid_argument("ewoo_update: empty step-size interval");
  if (sum_b == 0.0 && sum_g == 0.0) return 0.5 * (sched.eta_lo + sched.eta_hi);

  constexpr int kNodes = 2049;  // odd, so composite Simpson applies directly
  const double h = (sched.eta_hi - sched.eta_lo) / (kNodes - 1);
  double exps[kNodes];
  double max_e = -1e300;
  for (int i = 0; i < kNodes; ++i) {
    const double v = sched.eta_lo + h * i;
    exps[i] = -sched.alpha * (sum_b / v + sum_g * v);
    max_e = std::max(max_e, exps[i]);
  }
  double num = 0.0, den = 0.0;
  for (int i = 0; i < kNodes; ++i) {
    const double w = (i == 0 || i == kNodes - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double e = std::exp(exps[i] - max_e);
    if (!std::isfinite(e)) throw std::runtime_error("ewoo_update: non-finite integrand");
    const double v = sched.eta_lo + h * i;
    num += w * v * e;
    den += w * e;
  }
  const double eta = num / den;
  // The posterior mean lies strictly inside the interval; clip rounding dust.
  return std::min(std::max(eta, sched.eta_lo), sched.eta_hi);
}

std::vector<double> mw_distribution(const std::vector<double>& log_weights) {
  double mx = log_weights[0];
  for (double w : log_weights) mx = std::max(mx, w);
  std::vector<double> p(log_weights.size());
  double z = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(log_weights[i] - mx);
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

std::size_t mw_sample(const std::vector<double>& log_weights, SplitRng& rng) {
  const std::vector<double> p = mw_distribution(log_weights);
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return i;
  }
  return p.size() - 1;
}

void mw_update(std::vector<double>& log_weights, double lambda,
               const std::vector<double>& losses) {
  if (losses.size() != log_weights.size())
    throw std::invalid_argument("mw_update: size mismatch");
  for (std::size_t i = 0; i < log_weights.size(); ++i) log_weights[i] -= lambda * losses[i];
  // Keep the log-weights anchored so long runs cannot underflow.
  double mx = log_weights[0];
  for (double w : log_weights) mx = std::max(mx, w);
  for (double& w : log_weights) w -= mx;
}

Vec ftl_init(const Vec& running_sum, std::size_t t, double eps_proj, Mode mode,
             const Domain& domain) {
  if (t == 0) {
    if (mode == Mode::Blo) return domain.center();
    return domain.simplex_shrink(domain.center(), eps_proj);
  }
  Vec mean(running_sum.size());
  for (std::size_t i = 0; i < mean.size(); ++i)
    mean[i] = running_sum[i] / static_cast<double>(t);
  mean = domain.snap_inside(mean);
  if (mode == Mode::Blo) return domain.project_center(mean, eps_proj);
  return domain.simplex_shrink(mean, eps_proj);
}

double task_similarity_v(const std::vector<Vec>& estimates, const Regularizer& reg,
                         const Domain& domain, double eps_proj, Mode mode) {
  if (estimates.empty()) throw std::invalid_argument("task_similarity_v: empty list");
  auto project = [&](const Vec& x) {
    return mode == Mode::Blo ? domain.project_center(x, eps_proj)
                             : domain.simplex_shrink(x, eps_proj);
  };
  KahanSum acc;
  Vec mean(estimates.front().size(), 0.0);
  for (const Vec& x : estimates) {
    acc.add(reg.value(project(x)));
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += x[i];
  }
  for (double& v : mean) v /= static_cast<double>(estimates.size());
  mean = domain.snap_inside(mean);
  return acc.value() / static_cast<double>(estimates.size()) - reg.value(project(mean));
}

MetaState::MetaState(const MetaConfig& cfg, const Domain& domain, const Regularizer* barrier)
    : cfg_(cfg), domain_(&domain), barrier_(barrier) {
  if (cfg.k == 0) throw std::invalid_argument("MetaState: grid must be non-empty");
  if (cfg.mode == Mode::Blo && barrier == nullptr)
    throw std::invalid_argument("MetaState: BLO mode needs a barrier");
  thetas_.resize(cfg.k);
  if (cfg.k == 1) {
    thetas_[0] = 0.5 * (cfg.theta_lo + cfg.theta_hi);
  } else {
    for (std::size_t i = 0; i < cfg.k; ++i)
      thetas_[i] = cfg.theta_lo +
                   (cfg.theta_hi - cfg.theta_lo) * static_cast<double>(i) /
                       static_cast<double>(cfg.k - 1);
  }
  lambda_ = mw_lambda(cfg);
  const double mm = static_cast<double>(cfg.m);
  for (double th : thetas_) {
    schedules_.push_back(hyperparam_schedule(th, cfg));
    dsq_.push_back(schedule_dsq(th, cfg));
    g_.push_back(schedule_g(th, cfg.d, cfg.mode) * mm);
    f_.push_back(schedule_f(th, cfg.mode) * mm);
    ewoo_sum_b_.push_back(0.0);
    eta_cur_.push_back(0.5 * (schedules_.back().eta_lo + schedules_.back().eta_hi));
  }
  logw_.assign(cfg.k, 0.0);
  running_sum_.assign(domain.dimension(), 0.0);
}

Vec MetaState::init_for(std::size_t idx) const {
  const double eps_proj = cfg_.mode == Mode::Blo ? thetas_[idx] : cfg_.eps;
  return ftl_init(running_sum_, t_, eps_proj, cfg_.mode, *domain_);
}

void MetaState::step(const TaskOutcome& outcome, const Vec& used_init) {
  const Vec& xhat = outcome.estimated_optimum;
  std::vector<double> mw_losses(thetas_.size());
  for (std::size_t i = 0; i < thetas_.size(); ++i) {
    double breg;
    if (cfg_.mode == Mode::Blo) {
      const Vec proj = domain_->project_center(xhat, thetas_[i]);
      breg = barrier_->bregman(proj, used_init);
    } else {
      const Vec proj = domain_->simplex_shrink(xhat, cfg_.eps);
      const Regularizer reg = Regularizer::tsallis(cfg_.d, thetas_[i]);
      breg = reg.bregman(proj, used_init);
    }
    // MW sees the unregularized surrogate at the current EWOO step-size.
    mw_losses[i] = upper_bound_value(breg, eta_cur_[i], g_[i], f_[i], false, cfg_.rho, dsq_[i]);
    // EWOO accumulates the regularized surrogate and re-integrates.
    ewoo_sum_b_[i] += breg + cfg_.rho * cfg_.rho * dsq_[i];
    eta_cur_[i] = ewoo_update(ewoo_sum_b_[i], static_cast<double>(t_ + 1) * g_[i],
                              schedules_[i]);
  }
  mw_update(logw_, lambda_, mw_losses);
  for (std::size_t i = 0; i < running_sum_.size(); ++i) running_sum_[i] += xhat[i];
  ++t_;
}

std::string MetaState::snapshot_json() const {
  nlohmann::json j;
  j["task_count"] = t_;
  j["lambda"] = lambda_;
  j["running_sum"] = running_sum_;
  j["theta"] = thetas_;
  j["eta"] = eta_cur_;
  j["ewoo_sum_b"] = ewoo_sum_b_;
  j["log_weights"] = logw_;
  return j.dump(2);
}

}  // namespace metabandit
