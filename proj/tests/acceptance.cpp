// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single PASS/FAIL line with its runtime.  Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "metabandit/bandit_learners.hpp"
#include "metabandit/bounds.hpp"
#include "metabandit/domains.hpp"
#include "metabandit/environments.hpp"
#include "metabandit/harness.hpp"
#include "metabandit/meta_learner.hpp"
#include "metabandit/mirror_descent.hpp"
#include "metabandit/regularizers.hpp"
#include "metabandit/rng.hpp"
#include "oracles.hpp"

using namespace metabandit;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Vec random_simplex(SplitRng& rng, std::size_t d, double floor) {
  Vec p(d);
  double s = 0.0;
  for (double& v : p) {
    v = -std::log(rng.uniform() + 1e-300);
    s += v;
  }
  for (double& v : p) v = floor + (1.0 - floor * d) * v / s;
  return p;
}

Vec random_ball(SplitRng& rng, std::size_t d, double radius) {
  Vec x(d);
  for (double& v : x) v = rng.normal();
  const double r =
      radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(d)) / norm2(x);
  for (double& v : x) v *= r;
  return x;
}

// ---------------------------------------------------------------------------
// 1. Divergence and entropy core identities.
Check criterion1() {
  Check c;
  constexpr double kIdTol = 1e-9;
  SplitRng rng(101, 0);

  // Summed divergence to the mean equals the entropy-sum identity, and every
  // divergence is non-negative, on 200 random 8-point sets per family.
  struct Family {
    Regularizer reg;
    std::function<Vec(SplitRng&)> draw;
  };
  std::vector<Family> families;
  families.push_back({Regularizer::tsallis(4, 0.5),
                      [](SplitRng& r) { return random_simplex(r, 4, 0.02); }});
  families.push_back({Regularizer::tsallis(4, 1.0),
                      [](SplitRng& r) { return random_simplex(r, 4, 0.02); }});
  families.push_back({Regularizer::sphere_barrier(3),
                      [](SplitRng& r) { return random_ball(r, 3, 0.95); }});
  for (const auto& fam : families) {
    for (int set = 0; set < 200; ++set) {
      std::vector<Vec> pts;
      Vec mean;
      for (int i = 0; i < 8; ++i) {
        pts.push_back(fam.draw(rng));
        if (mean.empty()) mean.assign(pts.back().size(), 0.0);
        for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += pts.back()[j] / 8.0;
      }
      double lhs = 0.0, psum = 0.0;
      for (const Vec& x : pts) {
        const double b = fam.reg.bregman(x, mean);
        if (b < -1e-12) c.fail("negative divergence " + fmt(b));
        lhs += b;
        psum += fam.reg.value(x);
      }
      const double rhs = psum - 8.0 * fam.reg.value(mean);
      if (std::abs(lhs - rhs) > kIdTol * std::max(1.0, std::abs(rhs)))
        c.fail("mean identity off by " + fmt(lhs - rhs));
    }
  }

  // Entropy is Lipschitz in beta on the floored simplex: |dH/dbeta| bounded
  // by d log(d/eps) at eps = 0.1, checked by finite differences.
  const double eps = 0.1;
  for (std::size_t d : {2u, 8u, 32u}) {
    const double bound = d * std::log(d / eps);
    for (int trial = 0; trial < 100; ++trial) {
      Vec p = random_simplex(rng, d, 0.0);
      for (double& v : p) v = (1.0 - eps) * v + eps / d;
      const double b1 = 0.05 + 0.9 * rng.uniform();
      const double b2 = std::min(1.0, b1 + 1e-4);
      const double slope =
          std::abs(tsallis_entropy(p, b2) - tsallis_entropy(p, b1)) / (b2 - b1);
      if (slope > bound * (1.0 + 1e-6))
        c.fail("entropy slope " + fmt(slope) + " > " + fmt(bound));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// 2. Solver equivalence against brute-force grid minimization.
Check criterion2() {
  Check c;
  constexpr double kCoordTol = 1e-3;
  SplitRng rng(202, 0);
  const double betas[3] = {0.3, 0.5, 1.0};
  for (int inst = 0; inst < 100; ++inst) {
    const double beta = betas[inst % 3];
    const double floor = (inst % 2 == 0) ? 0.0 : 0.3;
    const Regularizer reg = Regularizer::tsallis(3, beta);
    const Vec x1 = random_simplex(rng, 3, std::max(0.05, floor / 3.0));
    Vec l(3);
    for (double& v : l) v = 2.0 * rng.uniform() - 1.0;
    const Vec solved = solve_tsallis_dual(x1, l, beta, floor);

    auto objective = [&](const Vec& p) { return reg.bregman(p, x1) + dot(l, p); };
    // Two-stage grid: coarse scan, then refine around the coarse winner.  The
    // grid stays strictly interior; the entropy gradient diverges at zero
    // coordinates, so the minimizer is interior and the offset is harmless
    // relative to the coordinate tolerance.
    const double gmin = std::max(floor / 3.0, 1e-6);
    Vec coarse = oracles::simplex3_grid_argmin(objective, gmin, 300);
    double lo0 = std::max(gmin, coarse[0] - 0.01);
    double lo1 = std::max(gmin, coarse[1] - 0.01);
    Vec best = coarse;
    double best_val = objective(coarse);
    const int n = 200;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        Vec p{lo0 + 0.02 * i / n, lo1 + 0.02 * j / n, 0.0};
        p[2] = 1.0 - p[0] - p[1];
        if (p[2] < gmin - 1e-12 || p[0] > 1.0 || p[1] > 1.0) continue;
        const double v = objective(p);
        if (v < best_val) {
          best_val = v;
          best = p;
        }
      }
    }
    for (int j = 0; j < 3; ++j)
      if (std::abs(solved[j] - best[j]) > kCoordTol)
        c.fail("instance " + std::to_string(inst) + " coordinate off by " +
               fmt(solved[j] - best[j]));
  }

  // Barrier Newton solve reaches stationarity: || grad B + eta l || <= 1e-8.
  const auto sb = Regularizer::sphere_barrier(3);
  for (int inst = 0; inst < 20; ++inst) {
    const Vec x1 = random_ball(rng, 3, 0.8);
    Vec l(3);
    for (double& v : l) v = 0.5 * (2.0 * rng.uniform() - 1.0);
    const Vec x = solve_barrier_newton(x1, l, sb);
    const Vec g1 = sb.gradient(x), g0 = sb.gradient(x1);
    double norm = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double r = g1[j] - g0[j] + l[j];
      norm += r * r;
    }
    if (std::sqrt(norm) > 1e-8)
      c.fail("barrier gradient norm " + fmt(std::sqrt(norm)));
  }
  return c;
}

// ---------------------------------------------------------------------------
// 3. Loss-estimator contracts.
Check criterion3() {
  Check c;
  const std::size_t n = 1000000;

  // Implicit exploration shrinks the mean to loss * x/(x+gamma).
  {
    SplitRng rng(303, 0);
    const Vec x = {0.6, 0.4};
    const double loss1 = 0.8, gamma = 0.1;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool hit = rng.uniform() < x[1];
      sum += hit ? loss1 / (x[1] + gamma) : 0.0;
    }
    const double mean = sum / static_cast<double>(n);
    const double target = loss1 * x[1] / (x[1] + gamma);
    const double one_draw_sd =
        (loss1 / (x[1] + gamma)) * std::sqrt(x[1] * (1.0 - x[1]));
    const double sd = one_draw_sd / std::sqrt(static_cast<double>(n));
    if (std::abs(mean - target) > 3.0 * sd)
      c.fail("implicit-exploration mean " + fmt(mean) + " vs " + fmt(target));

    // gamma = 0 recovers the loss exactly in expectation.
    SplitRng rng0(304, 0);
    sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      sum += (rng0.uniform() < x[1]) ? loss1 / x[1] : 0.0;
    const double mean0 = sum / static_cast<double>(n);
    const double sd0 =
        (loss1 / x[1]) * std::sqrt(x[1] * (1.0 - x[1])) / std::sqrt(static_cast<double>(n));
    if (std::abs(mean0 - loss1) > 3.0 * sd0)
      c.fail("unbiased mean " + fmt(mean0) + " vs " + fmt(loss1));
  }

  // The ellipsoid estimator is exactly unbiased: averaging over all 2d
  // (axis, sign) outcomes returns the loss vector.
  {
    SplitRng rng(305, 0);
    const std::size_t d = 4;
    const auto sb = Regularizer::sphere_barrier(d);
    for (int trial = 0; trial < 50; ++trial) {
      const Vec x = random_ball(rng, d, 0.9);
      Vec l(d);
      for (double& v : l) v = 2.0 * rng.uniform() - 1.0;
      const auto ed = jacobi_eigen(sb.hessian(x));
      Vec avg(d, 0.0);
      for (std::size_t j = 0; j < d; ++j) {
        for (double s : {-1.0, 1.0}) {
          Vec y = x;
          for (std::size_t r = 0; r < d; ++r)
            y[r] += s * ed.vectors(r, j) / std::sqrt(ed.values[j]);
          const double obs = dot(l, y);
          for (std::size_t r = 0; r < d; ++r)
            avg[r] += static_cast<double>(d) * obs * s * std::sqrt(ed.values[j]) *
                      ed.vectors(r, j) / (2.0 * static_cast<double>(d));
        }
      }
      for (std::size_t r = 0; r < d; ++r)
        if (std::abs(avg[r] - l[r]) > 1e-9)
          c.fail("ellipsoid estimator bias " + fmt(avg[r] - l[r]));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// 4. Logarithmic-regret inequalities for the two meta sub-learners.
Check criterion4() {
  Check c;
  const std::size_t T = 512;

  // Exponentially weighted tuning of the step size: regret against the best
  // fixed step is at most (1 + log(T+1)) / alpha on schedule-shaped losses.
  {
    MetaConfig cfg;
    cfg.mode = Mode::MabImplicit;
    cfg.d = 4;
    cfg.m = 100;
    cfg.rho = 0.25;
    const Schedule s = hyperparam_schedule(0.5, cfg);
    const double dsq = schedule_dsq(0.5, cfg);
    const double gm = schedule_g(0.5, cfg.d, cfg.mode) * static_cast<double>(cfg.m);
    SplitRng rng(404, 0);
    std::vector<double> bs(T);
    for (double& b : bs) b = (cfg.rho * cfg.rho + rng.uniform()) * dsq;
    double sum_b = 0.0, played = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      const double v = ewoo_update(sum_b, static_cast<double>(t) * gm, s);
      played += bs[t] / v + gm * v;
      sum_b += bs[t];
    }
    auto total = [&](double v) {
      double acc = 0.0;
      for (double b : bs) acc += b / v + gm * v;
      return acc;
    };
    const double best = oracles::grid_min_1d(total, s.eta_lo, s.eta_hi, 20000);
    const double budget = (1.0 + std::log(static_cast<double>(T) + 1.0)) / s.alpha;
    if (played - best > budget)
      c.fail("step-size tuning regret " + fmt(played - best) + " > " + fmt(budget));
    if (played - best < -1e-9) c.fail("negative tuning regret");
  }

  // Running-mean initialization: divergence regret vs the best fixed point
  // is at most 8 S K^2 (1 + log T) for the sphere barrier.
  {
    const auto dom = Domain::sphere(3);
    const auto sb = Regularizer::sphere_barrier(3);
    const double eps = 0.5;
    SplitRng rng(405, 0);
    std::vector<Vec> pts;
    for (std::size_t t = 0; t < T; ++t)
      pts.push_back(dom.project_center(random_ball(rng, 3, 1.0), eps));
    Vec running(3, 0.0);
    double ftl_cost = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      const Vec init = ftl_init(running, t, eps, Mode::Blo, dom);
      ftl_cost += sb.bregman(pts[t], init);
      for (int i = 0; i < 3; ++i) running[i] += pts[t][i];
    }
    Vec mean(3, 0.0);
    for (const Vec& x : pts)
      for (int i = 0; i < 3; ++i) mean[i] += x[i] / static_cast<double>(T);
    double best = 0.0;
    for (const Vec& x : pts) best += sb.bregman(x, dom.project_center(mean, eps));
    const double bound = 8.0 * kSphereProofS1 * kSphereProofK * kSphereProofK *
                         (1.0 + std::log(static_cast<double>(T)));
    if (ftl_cost - best > bound)
      c.fail("initialization regret " + fmt(ftl_cost - best) + " > " + fmt(bound));
    if (ftl_cost - best < -1e-8) c.fail("negative initialization regret");
  }
  return c;
}

// ---------------------------------------------------------------------------
// 5. Best-arm identification rate under guaranteed exploration.
Check criterion5() {
  Check c;
  const std::size_t d = 4, m = 12000, tasks = 2000;
  const double delta = 0.5, eps = 0.1, beta = 0.5;
  const double eta = std::sqrt(beta / (std::pow(static_cast<double>(d), beta) *
                                       static_cast<double>(m)));
  const Vec init(d, 1.0 / static_cast<double>(d));
  SplitRng learner_root(505, 0);
  std::size_t missed = 0;
  for (std::size_t t = 0; t < tasks; ++t) {
    const MabStream st = gen_sparse_mab(d, m, 1, d, delta, 0.2, 900000 + t);
    SplitRng trng = learner_root.fork(t);
    const TaskOutcome out =
        run_task_mab_guaranteed(init, eta, beta, eps, st.losses[0], st.true_arms[0], trng,
                                false);
    std::size_t arg = 0;
    for (std::size_t a = 1; a < d; ++a)
      if (out.estimated_optimum[a] > out.estimated_optimum[arg]) arg = a;
    if (static_cast<int>(arg) != st.true_arms[0]) ++missed;
  }
  const double rate = static_cast<double>(missed) / static_cast<double>(tasks);
  const double dk = static_cast<double>(d) *
                    identification_kappa(static_cast<double>(d), static_cast<double>(m),
                                         eps, delta);
  const double slack = 3.0 * std::sqrt(dk * (1.0 - dk) / static_cast<double>(tasks));
  c.detail = "misidentification rate " + fmt(rate) + " vs bound " + fmt(dk + slack);
  c.expect(rate <= dk + slack, "rate above bound");
  return c;
}

// ---------------------------------------------------------------------------
// 6. Meta-learning beats the independent baseline on similar tasks, and the
//    tuning distribution lands on near-optimal grid points.
Check criterion6() {
  Check c;
  ExperimentConfig cfg = preset_config("cor-mab-halfbeta");
  cfg.parallel_replicas = true;
  const ExperimentResult meta = run_experiment(cfg);
  const ExperimentResult base = run_baseline("independent_tsallis_half", cfg);
  const auto jm = nlohmann::json::parse(meta.summary_json);
  const auto jb = nlohmann::json::parse(base.summary_json);
  const double mq = jm["final_quartile_regret_mean"].get<double>();
  const double bq = jb["final_quartile_regret_mean"].get<double>();
  c.detail = "final-quartile regret " + fmt(mq) + " vs baseline " + fmt(bq);
  c.expect(mq <= 0.85 * bq, "improvement below 15%");

  // Tuning mass on grid points whose sqrt(H_beta d^beta m / beta) is within
  // 10% of the grid minimum, using the stream's optimum histogram.
  const MabStream st =
      gen_sparse_mab(cfg.d, cfg.m, cfg.T, cfg.s, cfg.delta, cfg.noise, cfg.seed);
  Vec hist(cfg.d, 0.0);
  for (int a : st.true_arms) hist[static_cast<std::size_t>(a)] += 1.0;
  std::vector<double> grid(cfg.k);
  for (std::size_t i = 0; i < cfg.k; ++i)
    grid[i] = cfg.theta_lo + (cfg.theta_hi - cfg.theta_lo) * static_cast<double>(i) /
                                 static_cast<double>(cfg.k - 1);
  std::vector<double> fval(cfg.k);
  double fmin = 1e300;
  for (std::size_t i = 0; i < cfg.k; ++i) {
    const double h = histogram_entropy(hist, grid[i]);
    fval[i] = std::sqrt(h * std::pow(static_cast<double>(cfg.d), grid[i]) *
                        static_cast<double>(cfg.m) / grid[i]);
    fmin = std::min(fmin, fval[i]);
  }
  double mass = 0.0;
  const auto& dists = jm["mw_distribution"];
  for (const auto& dist : dists) {
    for (std::size_t i = 0; i < cfg.k; ++i)
      if (fval[i] <= 1.1 * fmin) mass += dist[i].get<double>();
  }
  mass /= static_cast<double>(dists.size());
  c.detail += ", near-optimal tuning mass " + fmt(mass);
  c.expect(mass >= 0.5, "tuning mass below 50%");
  return c;
}

// ---------------------------------------------------------------------------
// 7. Graceful fallback when tasks share nothing.
Check criterion7() {
  Check c;
  ExperimentConfig cfg = preset_config("cor-mab-halfbeta");
  cfg.s = cfg.d;  // optima uniform over all arms: no shared structure
  cfg.parallel_replicas = true;
  const ExperimentResult meta = run_experiment(cfg);
  const ExperimentResult base = run_baseline("independent_tsallis_half", cfg);
  const double mq =
      nlohmann::json::parse(meta.summary_json)["final_quartile_regret_mean"].get<double>();
  const double bq =
      nlohmann::json::parse(base.summary_json)["final_quartile_regret_mean"].get<double>();
  c.detail = "final-quartile regret " + fmt(mq) + " vs baseline " + fmt(bq);
  c.expect(mq <= 1.25 * bq, "meta regret above 1.25x baseline");
  return c;
}

// ---------------------------------------------------------------------------
// 8. Outlier robustness: measured optimum entropy obeys the scaling bound.
Check criterion8() {
  Check c;
  const std::size_t d = 16, s = 2;
  const double beta = 1.0 / std::log(static_cast<double>(d));
  for (double p : {0.0, 0.5}) {
    double prev = 1e300;
    for (std::size_t T : {256u, 1024u, 4096u}) {
      const MabStream st = gen_outlier_mab(d, 1, T, s, 0.3, 0.1, p, 808);
      Vec hist(d, 0.0);
      for (int a : st.true_arms) hist[static_cast<std::size_t>(a)] += 1.0;
      const double h = histogram_entropy(hist, beta);
      const double excess =
          std::pow(static_cast<double>(d), 1.0 - beta) /
          std::pow(static_cast<double>(T), beta * (1.0 - p));
      if (h > 10.0 * (static_cast<double>(s) + excess))
        c.fail("entropy " + fmt(h) + " above bound at p=" + fmt(p) +
               " T=" + std::to_string(T));
      if (h > prev + 0.05)
        c.fail("entropy not decreasing in T at p=" + fmt(p) + " (" + fmt(prev) + " -> " +
               fmt(h) + ")");
      prev = h;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// 9. Sphere similarity closed form and the clustered-vs-uniform comparison.
Check criterion9() {
  Check c;
  const std::size_t d = 8;
  const auto ball = Domain::sphere(d);
  const auto sb = Regularizer::sphere_barrier(d);
  const double eps = 0.5;
  for (double r : {0.0, 0.5, 0.99}) {
    // Two unit-norm estimates whose mean has norm r.
    const double phi = std::acos(r);
    std::vector<Vec> ests(2, Vec(d, 0.0));
    ests[0][0] = std::cos(phi);
    ests[0][1] = std::sin(phi);
    ests[1][0] = std::cos(phi);
    ests[1][1] = -std::sin(phi);
    const double direct = task_similarity_v(ests, sb, ball, eps, Mode::Blo);
    BoundSpec spec;
    spec.which = "sphere-similarity";
    spec.params = {{"eps", eps}, {"r", r}};
    const double closed = eval_bound(spec);
    if (std::abs(direct - closed) > 1e-6)
      c.fail("similarity mismatch " + fmt(direct - closed) + " at r=" + fmt(r));
  }

  // A fully concentrated zero-noise stream has identical optima: V = 0.
  const BloStream sharp = gen_sphere_blo(d, 10, 6, 1e12, 0.0, 909);
  const double vzero = task_similarity_v(sharp.true_opts, sb, ball, eps, Mode::Blo);
  if (std::abs(vzero) > 1e-9) c.fail("concentrated stream similarity " + fmt(vzero));

  // Clustered task optima produce less regret than uniform ones.
  ExperimentConfig cfg = preset_config("sphere-blo");
  cfg.parallel_replicas = true;
  const ExperimentResult clustered = run_experiment(cfg);
  ExperimentConfig ucfg = cfg;
  ucfg.kappa_dir = 0.0;
  const ExperimentResult uniform = run_experiment(ucfg);
  const double cr = nlohmann::json::parse(clustered.summary_json)["final_cum_avg_regret_mean"]
                        .get<double>();
  const double ur =
      nlohmann::json::parse(uniform.summary_json)["final_cum_avg_regret_mean"].get<double>();
  c.detail = "clustered regret " + fmt(cr) + " vs uniform " + fmt(ur);
  c.expect(cr < ur, "clustered regret not lower");
  return c;
}

// ---------------------------------------------------------------------------
// 10. Shortest-path pipeline: sampler marginals and an end-to-end run.
Check criterion10() {
  Check c;
  const FlowGraph diamond = make_flow_graph({{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 0, 3);
  Vec flow(diamond.edges.size());
  for (std::size_t e = 0; e < flow.size(); ++e)
    flow[e] = 0.7 * diamond.path_indicators[0][e] + 0.3 * diamond.path_indicators[1][e];
  SplitRng rng(1010, 0);
  const std::size_t n = 100000;
  Vec marg(flow.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = sample_path_from_flow(diamond, flow, rng);
    for (int e : diamond.paths[p]) marg[static_cast<std::size_t>(e)] += 1.0;
  }
  for (std::size_t e = 0; e < flow.size(); ++e) {
    const double f = flow[e];
    const double sd = std::sqrt(f * (1.0 - f) * static_cast<double>(n));
    if (std::abs(marg[e] - f * n) > 3.0 * std::max(sd, 1.0))
      c.fail("edge marginal " + fmt(marg[e] / n) + " vs flow " + fmt(f));
  }

  // End-to-end run on a 6-node graph with a shared optimal path: the
  // task-averaged regret over the last quarter drops below the first.
  write_file("acceptance_graph.txt",
             "SOURCE 0\nSINK 5\n0 1\n0 2\n1 3\n2 3\n1 4\n2 4\n3 5\n4 5\n");
  ExperimentConfig cfg;
  cfg.mode = Mode::Blo;
  cfg.generator = "shortest_path";
  cfg.graph_file = "acceptance_graph.txt";
  cfg.m = 150;
  cfg.T = 120;
  cfg.k = 8;
  cfg.theta_lo = 1.0 / 150.0;
  cfg.theta_hi = 1.0;
  cfg.rho = std::pow(120.0, -0.25);
  cfg.noise = 0.2;
  cfg.shared_optimum = true;
  cfg.seed = 5;
  cfg.replicas = 2;
  cfg.parallel_replicas = true;
  const ExperimentResult res = run_experiment(cfg);
  double head = 0.0, tail = 0.0;
  const std::size_t q = cfg.T / 4;
  for (std::size_t r = 0; r < cfg.replicas; ++r) {
    for (std::size_t t = 0; t < q; ++t) head += res.records[r * cfg.T + t].regret;
    for (std::size_t t = cfg.T - q; t < cfg.T; ++t) tail += res.records[r * cfg.T + t].regret;
  }
  head /= static_cast<double>(q * cfg.replicas);
  tail /= static_cast<double>(q * cfg.replicas);
  c.detail = "first-quarter regret " + fmt(head) + ", last-quarter " + fmt(tail);
  c.expect(tail < head, "task-averaged regret did not decrease");
  return c;
}

// ---------------------------------------------------------------------------
// 11. Bit-for-bit reproducibility of the smoke preset.
Check criterion11(const std::string& golden_path) {
  Check c;
  ExperimentConfig cfg = preset_config("smoke");
  const std::string a = records_to_csv(run_experiment(cfg).records);
  const std::string b = records_to_csv(run_experiment(cfg).records);
  c.expect(a == b, "two consecutive runs differ");
  ExperimentConfig par = cfg;
  par.parallel_replicas = true;
  const std::string p = records_to_csv(run_experiment(par).records);
  c.expect(a == p, "serial and concurrent replica runs differ");
  if (!golden_path.empty()) {
    std::ifstream in(golden_path, std::ios::binary);
    if (!in) {
      c.fail("cannot open golden record " + golden_path);
    } else {
      std::ostringstream ss;
      ss << in.rdbuf();
      c.expect(a == ss.str(), "run differs from the stored golden record");
    }
  } else {
    c.fail("no --golden path given");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::string golden;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--golden") golden = argv[i + 1];

  struct Entry {
    int id;
    std::string name;
    double limit_s;
    std::function<Check()> run;
  };
  const std::vector<Entry> entries = {
      {1, "divergence and entropy core identities", 30, criterion1},
      {2, "solver equivalence with brute-force minimization", 60, criterion2},
      {3, "loss-estimator contracts", 60, criterion3},
      {4, "logarithmic-regret inequalities for the meta sub-learners", 120, criterion4},
      {5, "best-arm identification rate", 300, criterion5},
      {6, "meta-learning benefit on similar tasks", 900, criterion6},
      {7, "fallback on dissimilar tasks", 900, criterion7},
      {8, "outlier-robust entropy scaling", 120, criterion8},
      {9, "sphere similarity closed form and clustering benefit", 600, criterion9},
      {10, "shortest-path sampler and end-to-end run", 600, criterion10},
      {11, "bit-for-bit reproducibility", 60, [&] { return criterion11(golden); }},
  };

  int failures = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.fail(std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > e.limit_s) c.fail("runtime " + fmt(secs) + "s over " + fmt(e.limit_s) + "s");
    std::cout << "criterion " << e.id << ": " << (c.ok ? "PASS" : "FAIL") << " — " << e.name
              << " (" << fmt(secs) << "s)";
    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
    std::cout << std::endl;
    if (!c.ok) ++failures;
  }
  return failures;
}
