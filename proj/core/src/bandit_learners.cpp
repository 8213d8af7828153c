#include "metabandit/bandit_learners.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metabandit {

namespace {

int sample_categorical(const Vec& p, SplitRng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    acc += p[a];
    if (u < acc) return static_cast<int>(a);
  }
  return static_cast<int>(p.size()) - 1;  // guard against rounding at the top
}

TaskOutcome run_task_mab(const Vec& init, double eta, double beta, double eps_floor,
                         double gamma, const Matrix& losses, int true_arm, SplitRng& rng,
                         bool record_trajectory) {
  const std::size_t m = losses.rows();
  const std::size_t d = losses.cols();
  if (init.size() != d) throw std::invalid_argument("run_task_mab: init size mismatch");

  Regularizer reg = Regularizer::tsallis(d, beta);
  OmdState omd(reg, init, eta, eps_floor);

  TaskOutcome out;
  if (record_trajectory) {
    out.arm_trajectory.reserve(m);
    out.loss_trajectory.reserve(m);
  }
  KahanSum played_loss, opt_loss;
  Vec lhat(d, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& x = omd.iterate();
    const int a = sample_categorical(x, rng);
    const double loss = losses(i, a);
    if (loss < 0.0 || loss > 1.0)
      throw std::runtime_error("run_task_mab: loss outside [0,1]");
    played_loss.add(loss);
    if (true_arm >= 0) opt_loss.add(losses(i, true_arm));
    if (record_trajectory) {
      out.arm_trajectory.push_back(a);
      out.loss_trajectory.push_back(loss);
    }
    std::fill(lhat.begin(), lhat.end(), 0.0);
    lhat[a] = loss / (x[a] + gamma);
    omd.update(lhat);
  }
  out.estimator_sum = omd.cumulative_estimator();
  out.realized_loss = played_loss.value();
  if (true_arm >= 0) {
    out.true_optimum.assign(d, 0.0);
    out.true_optimum[true_arm] = 1.0;
    out.realized_regret = played_loss.value() - opt_loss.value();
  }
  out.estimated_optimum = estimated_optimum(Domain::simplex(d), out.estimator_sum);
  return out;
}

}  // namespace

TaskOutcome run_task_mab_implicit(const Vec& init, double eta, double beta, double gamma,
                                  const Matrix& losses, int true_arm, SplitRng& rng,
                                  bool record_trajectory) {
  if (gamma <= 0.0)
    throw std::invalid_argument("run_task_mab_implicit: gamma must be positive");
  return run_task_mab(init, eta, beta, 0.0, gamma, losses, true_arm, rng, record_trajectory);
}

TaskOutcome run_task_mab_guaranteed(const Vec& init, double eta, double beta, double eps,
                                    const Matrix& losses, int true_arm, SplitRng& rng,
                                    bool record_trajectory) {
  if (eps <= 0.0 || eps >= 1.0)
    throw std::invalid_argument("run_task_mab_guaranteed: eps must be in (0,1)");
  const double floor = eps / static_cast<double>(losses.cols());
  for (double v : init)
    if (v < floor - 1e-12)
      throw std::invalid_argument("run_task_mab_guaranteed: init below the eps/d floor");
  return run_task_mab(init, eta, beta, eps, 0.0, losses, true_arm, rng, record_trajectory);
}

TaskOutcome run_task_blo(const Vec& init, double eta, const Regularizer& barrier,
                         const Domain& domain, const std::vector<Vec>& losses,
                         const std::vector<double>& offsets, const std::vector<Vec>& vertices,
                         const Vec& true_opt, SplitRng& rng, bool record_trajectory) {
  const std::size_t m = losses.size();
  const std::size_t d = domain.dimension();
  if (init.size() != d) throw std::invalid_argument("run_task_blo: init size mismatch");
  if (!offsets.empty() && offsets.size() != m)
    throw std::invalid_argument("run_task_blo: offsets size mismatch");

  OmdState omd(barrier, init, eta);
  TaskOutcome out;
  if (record_trajectory) out.loss_trajectory.reserve(m);
  KahanSum played_loss, opt_loss;
  const double dd = static_cast<double>(d);

  for (std::size_t i = 0; i < m; ++i) {
    const Vec& x = omd.iterate();
    const auto ed = jacobi_eigen(barrier.hessian(x));
    const std::size_t j = static_cast<std::size_t>(rng.uniform_int(d));
    const double sgn = rng.uniform() < 0.5 ? -1.0 : 1.0;
    const double lam = ed.values[j];
    if (lam <= 0.0) throw std::runtime_error("run_task_blo: Hessian not positive definite");
    Vec y(d);
    const double scale = sgn / std::sqrt(lam);
    for (std::size_t r = 0; r < d; ++r) y[r] = x[r] + scale * ed.vectors(r, j);
    if (!domain.contains(y))
      throw std::runtime_error("run_task_blo: Dikin point escaped the domain");

    const double offset = offsets.empty() ? 0.0 : offsets[i];
    const double observed = dot(losses[i], y) + offset;
    if (std::abs(observed) > 1.0 + 1e-9)
      throw std::runtime_error("run_task_blo: loss outside [-1,1]");
    played_loss.add(observed);
    if (!true_opt.empty()) opt_loss.add(dot(losses[i], true_opt) + offset);
    if (record_trajectory) out.loss_trajectory.push_back(observed);

    Vec lhat(d);
    const double coef = dd * observed * sgn * std::sqrt(lam);
    for (std::size_t r = 0; r < d; ++r) lhat[r] = coef * ed.vectors(r, j);
    omd.update(lhat);
  }
  out.estimator_sum = omd.cumulative_estimator();
  out.realized_loss = played_loss.value();
  if (!true_opt.empty()) {
    out.true_optimum = true_opt;
    out.realized_regret = played_loss.value() - opt_loss.value();
  }
  out.estimated_optimum = estimated_optimum(domain, out.estimator_sum, vertices);
  return out;
}

Vec estimated_optimum(const Domain& domain, const Vec& lhat_sum,
                      const std::vector<Vec>& vertices) {
  const std::size_t d = domain.dimension();
  if (lhat_sum.size() != d) throw std::invalid_argument("estimated_optimum: size mismatch");
  switch (domain.kind()) {
    case DomainKind::Simplex: {
      std::size_t best = 0;
      for (std::size_t a = 1; a < d; ++a)
        if (lhat_sum[a] < lhat_sum[best]) best = a;
      Vec v(d, 0.0);
      v[best] = 1.0;
      return v;
    }
    case DomainKind::Sphere: {
      const double n = norm2(lhat_sum);
      if (n == 0.0) return domain.center();
      Vec v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = -lhat_sum[i] / n;
      return v;
    }
    case DomainKind::Polytope: {
      if (vertices.empty())
        throw std::invalid_argument("estimated_optimum: polytope needs a vertex list");
      std::size_t best = 0;
      double best_val = dot(lhat_sum, vertices[0]);
      for (std::size_t p = 1; p < vertices.size(); ++p) {
        const double v = dot(lhat_sum, vertices[p]);
        if (v < best_val) {
          best = p;
          best_val = v;
        }
      }
      return vertices[best];
    }
  }
  throw std::logic_error("estimated_optimum: unknown domain kind");
}

}  // namespace metabandit
