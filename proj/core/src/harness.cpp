#include "metabandit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "metabandit/bounds.hpp"

namespace metabandit {

namespace {

const char* kBuiltinDiamond =
    "# diamond graph\n"
    "SOURCE 0\n"
    "SINK 3\n"
    "0 1\n"
    "1 3\n"
    "0 2\n"
    "2 3\n";

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::MabImplicit: return "mab_implicit";
    case Mode::MabGuaranteed: return "mab_guaranteed";
    case Mode::Blo: return "blo";
  }
  return "";
}

Mode mode_from(const std::string& s) {
  if (s == "mab_implicit") return Mode::MabImplicit;
  if (s == "mab_guaranteed") return Mode::MabGuaranteed;
  if (s == "blo") return Mode::Blo;
  throw std::runtime_error("config: unknown mode '" + s + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int vertex_arm(const Vec& v) {
  int best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = static_cast<int>(i);
  return best;
}

bool same_point(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  return true;
}

// Everything a replica needs, prepared once and shared read-only.
struct Prepared {
  ExperimentConfig cfg;
  MabStream mab;
  BloStream blo;
  FlowGraph graph;
  bool has_graph = false;
  Domain domain = Domain::simplex(2);
  Regularizer barrier = Regularizer::sphere_barrier(2);
  MetaConfig meta;
};

Prepared prepare(const ExperimentConfig& cfg) {
  Prepared p{cfg,       MabStream{}, BloStream{}, FlowGraph{}, false,
             Domain::simplex(2), Regularizer::sphere_barrier(2), MetaConfig{}};
  MetaConfig mc;
  mc.mode = cfg.mode;
  mc.m = cfg.m;
  mc.T = cfg.T;
  mc.k = cfg.k;
  mc.theta_lo = cfg.theta_lo;
  mc.theta_hi = cfg.theta_hi;
  mc.rho = cfg.rho;
  mc.eps = cfg.eps;
  mc.gamma = cfg.gamma;

  if (cfg.generator == "sparse_mab" || cfg.generator == "outlier_mab") {
    if (cfg.mode == Mode::Blo) throw std::runtime_error("config: MAB generator with blo mode");
    p.mab = cfg.generator == "sparse_mab"
                ? gen_sparse_mab(cfg.d, cfg.m, cfg.T, cfg.s, cfg.delta, cfg.noise, cfg.seed)
                : gen_outlier_mab(cfg.d, cfg.m, cfg.T, cfg.s, cfg.delta, cfg.noise, cfg.p,
                                  cfg.seed);
    p.domain = Domain::simplex(cfg.d);
    mc.d = cfg.d;
  } else if (cfg.generator == "sphere_blo") {
    if (cfg.mode != Mode::Blo) throw std::runtime_error("config: sphere_blo needs blo mode");
    p.blo = gen_sphere_blo(cfg.d, cfg.m, cfg.T, cfg.kappa_dir, cfg.noise, cfg.seed);
    p.domain = Domain::sphere(cfg.d);
    p.barrier = Regularizer::sphere_barrier(cfg.d);
    mc.d = cfg.d;
    mc.nu = 1.0;
    mc.k_const = kSphereProofK;
    mc.s1 = kSphereProofS1;
  } else if (cfg.generator == "shortest_path") {
    if (cfg.mode != Mode::Blo) throw std::runtime_error("config: shortest_path needs blo mode");
    p.graph = cfg.graph_file.empty() ? parse_flow_graph(kBuiltinDiamond)
                                     : load_flow_graph(cfg.graph_file);
    p.has_graph = true;
    p.blo = gen_shortest_path(p.graph, cfg.m, cfg.T, cfg.shared_optimum, cfg.noise, cfg.seed);
    const std::size_t dz = p.graph.reduced_dim();
    p.domain = Domain::polytope(dz, p.graph.reduced_constraints, Vec(dz, 0.0));
    p.barrier = Regularizer::polytope_barrier(p.graph.reduced_constraints, p.domain.center());
    mc.d = dz;
    mc.nu = p.barrier.nu();
    mc.k_const = std::sqrt(static_cast<double>(p.graph.edges.size()));
    mc.s1 = p.barrier.s1();
  } else {
    throw std::runtime_error("config: unknown generator '" + cfg.generator + "'");
  }
  p.meta = mc;
  return p;
}

struct ReplicaOutput {
  std::vector<ExperimentRecord> records;
  std::vector<double> mw_distribution;
  double final_cum_avg = 0.0;
  double final_quartile_mean = 0.0;
};

ReplicaOutput run_replica(const Prepared& p, std::size_t replica) {
  const ExperimentConfig& cfg = p.cfg;
  MetaState meta(p.meta, p.domain, cfg.mode == Mode::Blo ? &p.barrier : nullptr);
  SplitRng root = SplitRng(cfg.seed).fork(0xAE110000ULL + replica);

  ReplicaOutput out;
  KahanSum regret_sum;
  std::vector<Vec> estimates;
  Vec arm_hist(cfg.mode == Mode::Blo ? 0 : cfg.d, 0.0);
  KahanSum quartile_sum;
  const std::size_t quartile_start = cfg.T - cfg.T / 4;

  for (std::size_t t = 0; t < cfg.T; ++t) {
    SplitRng trng = root.fork(t);
    const std::size_t idx = meta.sample_theta(trng);
    const double theta = meta.theta(idx);
    const double eta = meta.eta(idx);
    const Vec init = meta.init_for(idx);

    TaskOutcome outcome;
    if (cfg.mode == Mode::MabImplicit) {
      outcome = run_task_mab_implicit(init, eta, theta, cfg.gamma, p.mab.losses[t],
                                      p.mab.true_arms[t], trng, false);
    } else if (cfg.mode == Mode::MabGuaranteed) {
      outcome = run_task_mab_guaranteed(init, eta, theta, cfg.eps, p.mab.losses[t],
                                        p.mab.true_arms[t], trng, false);
    } else {
      outcome = run_task_blo(init, eta, p.barrier, p.domain, p.blo.losses[t],
                             p.blo.offsets.empty() ? std::vector<double>{} : p.blo.offsets[t],
                             p.has_graph ? p.graph.reduced_vertices : std::vector<Vec>{},
                             p.blo.true_opts[t], trng, false);
    }

    ExperimentRecord rec;
    rec.replica = replica;
    rec.task = t;
    rec.theta = theta;
    rec.eta = eta;
    rec.regret = outcome.realized_regret;
    rec.est_regret =
        outcome.realized_loss - dot(outcome.estimator_sum, outcome.estimated_optimum);
    rec.identified = same_point(outcome.estimated_optimum, outcome.true_optimum) ? 1 : 0;

    double breg;
    if (cfg.mode == Mode::Blo) {
      breg = p.barrier.bregman(p.domain.project_center(outcome.estimated_optimum, theta), init);
    } else {
      const Regularizer reg = Regularizer::tsallis(p.meta.d, theta);
      breg = reg.bregman(p.domain.simplex_shrink(outcome.estimated_optimum, cfg.eps), init);
    }
    rec.upper_bound = upper_bound_value(
        breg, eta, schedule_g(theta, p.meta.d, cfg.mode) * static_cast<double>(cfg.m),
        schedule_f(theta, cfg.mode) * static_cast<double>(cfg.m), false, cfg.rho, 0.0);

    regret_sum.add(outcome.realized_regret);
    rec.cum_avg_regret = regret_sum.value() / static_cast<double>(t + 1);
    if (t >= quartile_start) quartile_sum.add(outcome.realized_regret);

    estimates.push_back(outcome.estimated_optimum);
    if (!arm_hist.empty()) {
      arm_hist[static_cast<std::size_t>(vertex_arm(outcome.estimated_optimum))] += 1.0;
      rec.h_half = histogram_entropy(arm_hist, 0.5);
      rec.h_one = histogram_entropy(arm_hist, 1.0);
    }
    if (cfg.mode == Mode::Blo) {
      rec.v_theta = task_similarity_v(estimates, p.barrier, p.domain, theta, cfg.mode);
    } else {
      const Regularizer reg = Regularizer::tsallis(p.meta.d, theta);
      rec.v_theta = task_similarity_v(estimates, reg, p.domain, cfg.eps, cfg.mode);
    }

    meta.step(outcome, init);
    out.records.push_back(rec);
  }
  out.mw_distribution = mw_distribution(meta.log_weights());
  out.final_cum_avg = out.records.back().cum_avg_regret;
  out.final_quartile_mean =
      quartile_sum.value() / static_cast<double>(cfg.T - quartile_start);
  return out;
}

ExperimentResult assemble(const ExperimentConfig& cfg, const Prepared& p,
                          std::vector<ReplicaOutput> outs, const std::string& kind) {
  ExperimentResult res;
  nlohmann::json j;
  j["kind"] = kind;
  j["mode"] = mode_name(cfg.mode);
  j["generator"] = cfg.generator;
  j["d"] = p.meta.d;
  j["m"] = cfg.m;
  j["T"] = cfg.T;
  j["replicas"] = cfg.replicas;
  j["seed"] = cfg.seed;
  std::vector<double> finals, quartiles;
  for (std::size_t r = 0; r < outs.size(); ++r) {
    for (const auto& rec : outs[r].records) res.records.push_back(rec);
    finals.push_back(outs[r].final_cum_avg);
    quartiles.push_back(outs[r].final_quartile_mean);
    if (!outs[r].mw_distribution.empty())
      j["mw_distribution"].push_back(outs[r].mw_distribution);
  }
  auto mean_stderr = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    const double se = v.size() > 1
                          ? std::sqrt(var / static_cast<double>(v.size() - 1) /
                                      static_cast<double>(v.size()))
                          : 0.0;
    return std::pair<double, double>(mean, se);
  };
  const auto [fm, fs] = mean_stderr(finals);
  const auto [qm, qs] = mean_stderr(quartiles);
  j["final_cum_avg_regret"] = finals;
  j["final_cum_avg_regret_mean"] = fm;
  j["final_cum_avg_regret_stderr"] = fs;
  j["final_quartile_regret"] = quartiles;
  j["final_quartile_regret_mean"] = qm;
  j["final_quartile_regret_stderr"] = qs;
  res.summary_json = j.dump(2);
  return res;
}

}  // namespace

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig cfg;
  if (name == "smoke") {
    cfg.mode = Mode::MabGuaranteed;
    cfg.d = 4;
    cfg.m = 200;
    cfg.T = 20;
    cfg.k = 4;
    cfg.rho = 0.2;
    cfg.theta_lo = 0.5;
    cfg.theta_hi = 1.0;
    cfg.eps = 0.1;
    cfg.generator = "sparse_mab";
    cfg.s = 1;
    cfg.delta = 0.4;
    cfg.noise = 0.1;
    cfg.seed = 7;
    cfg.replicas = 2;
    return cfg;
  }
  if (name == "cor-mab-halfbeta") {
    cfg.mode = Mode::MabImplicit;
    cfg.d = 16;
    cfg.m = 500;
    cfg.T = 400;
    cfg.s = 2;
    cfg.delta = 0.3;
    cfg.noise = 0.1;
    cfg.generator = "sparse_mab";
    cfg.theta_lo = 0.5;
    cfg.theta_hi = 1.0;
    const double dd = static_cast<double>(cfg.d);
    const double mm = static_cast<double>(cfg.m);
    const double tt = static_cast<double>(cfg.T);
    cfg.gamma = 1.0 / std::sqrt(dd * mm * tt);
    cfg.eps = std::pow(dd, 5.0 / 7.0) / std::pow(mm * tt, 2.0 / 7.0);
    cfg.rho = std::pow(tt, -0.25);
    cfg.k = static_cast<std::size_t>(std::ceil(std::pow(dd, 0.25) * std::sqrt(tt)));
    cfg.replicas = 8;
    cfg.seed = 11;
    return cfg;
  }
  if (name == "sphere-blo") {
    cfg.mode = Mode::Blo;
    cfg.generator = "sphere_blo";
    cfg.d = 8;
    cfg.m = 400;
    cfg.T = 200;
    cfg.k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(cfg.T))));
    cfg.theta_lo = 1.0 / static_cast<double>(cfg.m);
    cfg.theta_hi = 1.0;
    cfg.rho = std::pow(static_cast<double>(cfg.T), -0.25);
    cfg.kappa_dir = 8.0;
    cfg.noise = 0.1;
    cfg.replicas = 2;
    cfg.seed = 3;
    return cfg;
  }
  throw std::runtime_error("preset_config: unknown preset '" + name + "'");
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.front() == '[' && line.back() == ']') continue;  // section header
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("config: bad line '" + line + "'");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "preset") cfg = preset_config(val);
    else if (key == "mode") cfg.mode = mode_from(val);
    else if (key == "d") cfg.d = std::stoul(val);
    else if (key == "m") cfg.m = std::stoul(val);
    else if (key == "T") cfg.T = std::stoul(val);
    else if (key == "k") cfg.k = std::stoul(val);
    else if (key == "rho") cfg.rho = std::stod(val);
    else if (key == "theta_lo") cfg.theta_lo = std::stod(val);
    else if (key == "theta_hi") cfg.theta_hi = std::stod(val);
    else if (key == "eps") cfg.eps = std::stod(val);
    else if (key == "gamma") cfg.gamma = std::stod(val);
    else if (key == "generator") cfg.generator = val;
    else if (key == "s") cfg.s = std::stoul(val);
    else if (key == "delta") cfg.delta = std::stod(val);
    else if (key == "noise") cfg.noise = std::stod(val);
    else if (key == "p") cfg.p = std::stod(val);
    else if (key == "kappa_dir") cfg.kappa_dir = std::stod(val);
    else if (key == "graph_file") cfg.graph_file = val;
    else if (key == "shared_optimum") cfg.shared_optimum = (val == "true" || val == "1");
    else if (key == "seed") cfg.seed = std::stoull(val);
    else if (key == "replicas") cfg.replicas = std::stoul(val);
    else if (key == "parallel_replicas") cfg.parallel_replicas = (val == "true" || val == "1");
    else if (key == "out_dir") cfg.out_dir = val;
    else throw std::runtime_error("config: unknown key '" + key + "'");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string config_to_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "[run]\n";
  out << "mode = " << mode_name(cfg.mode) << "\n";
  out << "d = " << cfg.d << "\nm = " << cfg.m << "\nT = " << cfg.T << "\nk = " << cfg.k << "\n";
  out << "rho = " << fmt(cfg.rho) << "\n";
  out << "theta_lo = " << fmt(cfg.theta_lo) << "\ntheta_hi = " << fmt(cfg.theta_hi) << "\n";
  out << "eps = " << fmt(cfg.eps) << "\ngamma = " << fmt(cfg.gamma) << "\n";
  out << "[environment]\n";
  out << "generator = " << cfg.generator << "\n";
  out << "s = " << cfg.s << "\ndelta = " << fmt(cfg.delta) << "\nnoise = " << fmt(cfg.noise)
      << "\np = " << fmt(cfg.p) << "\nkappa_dir = " << fmt(cfg.kappa_dir) << "\n";
  if (!cfg.graph_file.empty()) out << "graph_file = " << cfg.graph_file << "\n";
  out << "shared_optimum = " << (cfg.shared_optimum ? "true" : "false") << "\n";
  out << "[execution]\n";
  out << "seed = " << cfg.seed << "\nreplicas = " << cfg.replicas << "\n";
  out << "parallel_replicas = " << (cfg.parallel_replicas ? "true" : "false") << "\n";
  out << "out_dir = " << cfg.out_dir << "\n";
  return out.str();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const Prepared p = prepare(cfg);
  std::vector<ReplicaOutput> outs(cfg.replicas);
  if (cfg.parallel_replicas && cfg.replicas > 1) {
    std::vector<std::thread> threads;
    for (std::size_t r = 0; r < cfg.replicas; ++r)
      threads.emplace_back([&, r] { outs[r] = run_replica(p, r); });
    for (auto& th : threads) th.join();
  } else {
    for (std::size_t r = 0; r < cfg.replicas; ++r) outs[r] = run_replica(p, r);
  }
  return assemble(cfg, p, std::move(outs), "meta");
}

ExperimentResult run_baseline(const std::string& name, const ExperimentConfig& cfg) {
  const Prepared p = prepare(cfg);
  const double dd = static_cast<double>(p.meta.d);
  const double mm = static_cast<double>(cfg.m);

  double beta = 0.5, eta = 0.0;
  if (name == "independent_tsallis_half") {
    beta = 0.5;
    eta = std::sqrt(beta / (std::pow(dd, beta) * mm));
  } else if (name == "independent_exp3") {
    beta = 1.0;
    eta = std::sqrt(std::log(dd) / (dd * mm));
  } else if (name == "independent_blo") {
    eta = 1.0 / (8.0 * dd * std::sqrt(mm));
  } else {
    throw std::runtime_error("run_baseline: unknown baseline '" + name + "'");
  }
  if ((name == "independent_blo") != (cfg.mode == Mode::Blo))
    throw std::runtime_error("run_baseline: baseline/mode mismatch");

  std::vector<ReplicaOutput> outs(cfg.replicas);
  const std::size_t quartile_start = cfg.T - cfg.T / 4;
  auto one = [&](std::size_t replica) {
    SplitRng root = SplitRng(cfg.seed).fork(0xBA5E0000ULL + replica);
    ReplicaOutput out;
    KahanSum regret_sum, quartile_sum;
    for (std::size_t t = 0; t < cfg.T; ++t) {
      SplitRng trng = root.fork(t);
      TaskOutcome outcome;
      double theta = beta;
      if (cfg.mode == Mode::MabImplicit) {
        const Vec init = p.domain.simplex_shrink(p.domain.center(), cfg.eps);
        outcome = run_task_mab_implicit(init, eta, beta, cfg.gamma, p.mab.losses[t],
                                        p.mab.true_arms[t], trng, false);
      } else if (cfg.mode == Mode::MabGuaranteed) {
        const Vec init = p.domain.simplex_shrink(p.domain.center(), cfg.eps);
        outcome = run_task_mab_guaranteed(init, eta, beta, cfg.eps, p.mab.losses[t],
                                          p.mab.true_arms[t], trng, false);
      } else {
        theta = cfg.eps;
        outcome = run_task_blo(p.domain.center(), eta, p.barrier, p.domain, p.blo.losses[t],
                               p.blo.offsets.empty() ? std::vector<double>{} : p.blo.offsets[t],
                               p.has_graph ? p.graph.reduced_vertices : std::vector<Vec>{},
                               p.blo.true_opts[t], trng, false);
      }
      ExperimentRecord rec;
      rec.replica = replica;
      rec.task = t;
      rec.theta = theta;
      rec.eta = eta;
      rec.regret = outcome.realized_regret;
      rec.est_regret =
          outcome.realized_loss - dot(outcome.estimator_sum, outcome.estimated_optimum);
      rec.identified = same_point(outcome.estimated_optimum, outcome.true_optimum) ? 1 : 0;
      regret_sum.add(outcome.realized_regret);
      rec.cum_avg_regret = regret_sum.value() / static_cast<double>(t + 1);
      if (t >= quartile_start) quartile_sum.add(outcome.realized_regret);
      out.records.push_back(rec);
    }
    out.final_cum_avg = out.records.back().cum_avg_regret;
    out.final_quartile_mean =
        quartile_sum.value() / static_cast<double>(cfg.T - quartile_start);
    return out;
  };
  if (cfg.parallel_replicas && cfg.replicas > 1) {
    std::vector<std::thread> threads;
    for (std::size_t r = 0; r < cfg.replicas; ++r)
      threads.emplace_back([&, r] { outs[r] = one(r); });
    for (auto& th : threads) th.join();
  } else {
    for (std::size_t r = 0; r < cfg.replicas; ++r) outs[r] = one(r);
  }
  return assemble(cfg, p, std::move(outs), "baseline:" + name);
}

EntropyTables compute_entropy_metrics(const std::vector<Vec>& estimated,
                                      const std::vector<Vec>& true_opts,
                                      const std::vector<double>& betas, double theta,
                                      double eps) {
  if (estimated.empty()) throw std::invalid_argument("compute_entropy_metrics: no records");
  const std::size_t d = estimated.front().size();
  Vec est_hist(d, 0.0), true_hist(d, 0.0);
  for (const Vec& v : estimated) est_hist[static_cast<std::size_t>(vertex_arm(v))] += 1.0;
  for (const Vec& v : true_opts) true_hist[static_cast<std::size_t>(vertex_arm(v))] += 1.0;
  EntropyTables tb;
  tb.betas = betas;
  for (double b : betas) {
    tb.h_estimated.push_back(histogram_entropy(est_hist, b));
    if (!true_opts.empty()) tb.h_true.push_back(histogram_entropy(true_hist, b));
  }
  const Domain dom = Domain::simplex(d);
  const Regularizer reg = Regularizer::tsallis(d, theta);
  tb.v_theta = task_similarity_v(estimated, reg, dom, eps, Mode::MabGuaranteed);
  return tb;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "replica,task,theta,eta,regret,est_regret,upper_bound,identified,"
         "cum_avg_regret,h_half,h_one,v_theta\n";
  for (const auto& r : records) {
    out << r.replica << ',' << r.task << ',' << fmt(r.theta) << ',' << fmt(r.eta) << ','
        << fmt(r.regret) << ',' << fmt(r.est_regret) << ',' << fmt(r.upper_bound) << ','
        << r.identified << ',' << fmt(r.cum_avg_regret) << ',' << fmt(r.h_half) << ','
        << fmt(r.h_one) << ',' << fmt(r.v_theta) << '\n';
  }
  return out.str();
}

std::vector<ExperimentRecord> records_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("records_from_csv: empty input");
  std::vector<ExperimentRecord> recs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (std::getline(ls, tok, ',')) toks.push_back(tok);
    if (toks.size() != 12) throw std::runtime_error("records_from_csv: bad row '" + line + "'");
    ExperimentRecord r;
    r.replica = std::stoul(toks[0]);
    r.task = std::stoul(toks[1]);
    r.theta = std::stod(toks[2]);
    r.eta = std::stod(toks[3]);
    r.regret = std::stod(toks[4]);
    r.est_regret = std::stod(toks[5]);
    r.upper_bound = std::stod(toks[6]);
    r.identified = std::stoi(toks[7]);
    r.cum_avg_regret = std::stod(toks[8]);
    r.h_half = std::stod(toks[9]);
    r.h_one = std::stod(toks[10]);
    r.v_theta = std::stod(toks[11]);
    recs.push_back(r);
  }
  return recs;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_file: cannot open " + path);
  out << content;
}

}  // namespace metabandit
