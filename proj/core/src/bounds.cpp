#include "metabandit/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "metabandit/regularizers.hpp"

namespace metabandit {

namespace {

double require(const BoundSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw std::invalid_argument("eval_bound: missing parameter '" + key + "' for " + spec.which);
  return it->second;
}

double entropy_at(const Vec& hist, double beta) {
  double total = 0.0;
  for (double v : hist) total += v;
  if (total <= 0.0) throw std::invalid_argument("eval_bound: empty histogram");
  Vec p;
  for (double v : hist) p.push_back(v / total);
  // Drop zeros: the Tsallis entropy extends continuously with 0^beta = 0.
  double s = 0.0;
  const bool shannon = std::abs(1.0 - beta) < 1e-6;
  for (double v : p) {
    if (v <= 0.0) continue;
    s += shannon ? -v * std::log(v) : std::pow(v, beta);
  }
  return shannon ? s : (s - 1.0) / (1.0 - beta);
}

// Dense scan of 2 sqrt(h(beta) d^beta m / beta) over beta in (0,1].
double scan_beta_min(double d, double m, const Vec& hist, bool conditional, double eps,
                     double delta) {
  double best = 1e300;
  for (int i = 1; i <= 1000; ++i) {
    const double beta = static_cast<double>(i) * 1e-3;
    double h = entropy_at(hist, beta);
    if (conditional) h = h_beta_conditional(h, beta, d, m, eps, delta);
    const double v = 2.0 * std::sqrt(h * std::pow(d, beta) * m / beta);
    best = std::min(best, v);
  }
  return best;
}

}  // namespace

double lambert_w(double z) {
  if (z < 0.0) throw std::invalid_argument("lambert_w: negative argument");
  if (z == 0.0) return 0.0;
  double w = z < 3.0 ? 0.5 : std::log(z) - std::log(std::log(z));
  for (int i = 0; i < 100; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double step = f / (ew * (w + 1.0) - f * (w + 2.0) / (2.0 * w + 2.0));
    w -= step;
    if (std::abs(step) < 1e-12 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

double histogram_entropy(const Vec& histogram, double beta) {
  return entropy_at(histogram, beta);
}

bool iota_condition(double d, double m, double eps, double delta) {
  const double arg = d / (eps * delta * delta);
  return m >= 75.0 * arg * std::log(arg);
}

double h_beta_conditional(double h_beta, double beta, double d, double m, double eps,
                          double delta) {
  if (iota_condition(d, m, eps, delta)) return h_beta + 56.0 / (m * d);
  return mab_divergence_radius_sq(beta, static_cast<std::size_t>(d));
}

double identification_kappa(double d, double m, double eps, double delta) {
  return std::exp(-3.0 * eps * delta * delta * m / (28.0 * d));
}

double eval_bound(const BoundSpec& spec) {
  const std::string& w = spec.which;
  if (w == "mab-asymptotic") {
    return scan_beta_min(require(spec, "d"), require(spec, "m"), spec.histogram, false, 0, 0);
  }
  if (w == "mab-conditional") {
    const double eps = require(spec, "eps"), m = require(spec, "m");
    return eps * m + scan_beta_min(require(spec, "d"), m, spec.histogram, true, eps,
                                   require(spec, "delta"));
  }
  if (w == "iota") {
    return iota_condition(require(spec, "d"), require(spec, "m"), require(spec, "eps"),
                          require(spec, "delta"))
               ? 1.0
               : 0.0;
  }
  if (w == "lambert-term") {
    const double delta = require(spec, "delta");
    return 75.0 * require(spec, "d") / (delta * delta) * lambert_w(require(spec, "m") / 75.0);
  }
  if (w == "identification-kappa") {
    return identification_kappa(require(spec, "d"), require(spec, "m"), require(spec, "eps"),
                                require(spec, "delta"));
  }
  if (w == "misid-bound") {
    const double d = require(spec, "d");
    return d * identification_kappa(d, require(spec, "m"), require(spec, "eps"),
                                    require(spec, "delta"));
  }
  if (w == "robust-entropy") {
    const double d = require(spec, "d"), beta = require(spec, "beta");
    return require(spec, "C") *
           (require(spec, "s") +
            std::pow(d, 1.0 - beta) /
                std::pow(require(spec, "T"), beta * (1.0 - require(spec, "p"))));
  }
  if (w == "single-task-mab") {
    const double d = require(spec, "d"), m = require(spec, "m");
    const double beta = 0.5;
    const double dsq = mab_divergence_radius_sq(beta, static_cast<std::size_t>(d));
    return 2.0 * std::sqrt(dsq * std::pow(d, beta) * m / beta);
  }
  if (w == "single-task-blo") {
    const double d = require(spec, "d"), m = require(spec, "m");
    return 2.0 * std::sqrt(32.0 * require(spec, "Dsq") * d * d * m);
  }
  if (w == "sphere-similarity") {
    const double eps = require(spec, "eps"), r = require(spec, "r");
    const double c = 1.0 / ((1.0 + eps) * (1.0 + eps));
    return std::log((1.0 - c * r * r) / (1.0 - c));
  }
  throw std::invalid_argument("eval_bound: unknown bound '" + w + "'");
}

}  // namespace metabandit
