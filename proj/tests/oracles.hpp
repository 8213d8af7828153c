#pragma once

// Test-only reference implementations, written independently of the library
// code paths they check: brute-force grid minimizers, finite differences,
// direct summations, and dense-grid comparators.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracles {

using Vec = std::vector<double>;

// Direct summation of the Tsallis value (no limit branch sharing with the
// library: the Shannon case is its own sum).
inline double tsallis_value_direct(const Vec& p, double beta) {
  double s = 0.0;
  if (beta == 1.0) {
    for (double v : p) s += v * std::log(v);
    return s;
  }
  for (double v : p) s += std::pow(v, beta);
  return (1.0 - s) / (1.0 - beta);
}

// KL divergence by direct summation.
inline double kl_direct(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::log(x[i] / y[i]);
  return s;
}

// Central finite-difference gradient.
inline Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x,
                       double h = 1e-5) {
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vec a = x, b = x;
    a[i] += h;
    b[i] -= h;
    g[i] = (f(a) - f(b)) / (2.0 * h);
  }
  return g;
}

// Central finite-difference Hessian (of a gradient oracle).
inline std::vector<Vec> fd_hessian(const std::function<Vec(const Vec&)>& grad, const Vec& x,
                                   double h = 1e-5) {
  std::vector<Vec> m(x.size(), Vec(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    Vec a = x, b = x;
    a[j] += h;
    b[j] -= h;
    const Vec ga = grad(a), gb = grad(b);
    for (std::size_t i = 0; i < x.size(); ++i) m[i][j] = (ga[i] - gb[i]) / (2.0 * h);
  }
  return m;
}

// Brute-force minimizer of f over the d=3 simplex with a floor, on a uniform
// grid of the two free coordinates.  Returns the best grid point.
inline Vec simplex3_grid_argmin(const std::function<double(const Vec&)>& f, double floor,
                                int n = 400) {
  Vec best(3, 1.0 / 3.0);
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      Vec p{floor + (1.0 - 3.0 * floor) * i / n, floor + (1.0 - 3.0 * floor) * j / n, 0.0};
      p[2] = 1.0 - p[0] - p[1];
      if (p[2] < floor - 1e-12) continue;
      const double v = f(p);
      if (v < best_val) {
        best_val = v;
        best = p;
      }
    }
  }
  return best;
}

// Dense 1-D grid argmin over [lo, hi].
inline double grid_argmin_1d(const std::function<double(double)>& f, double lo, double hi,
                             int n = 100000) {
  double best = lo, best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    const double v = lo + (hi - lo) * i / n;
    const double fv = f(v);
    if (fv < best_val) {
      best_val = fv;
      best = v;
    }
  }
  return best;
}

// Dense 1-D minimum value over [lo, hi].
inline double grid_min_1d(const std::function<double(double)>& f, double lo, double hi,
                          int n = 100000) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) best = std::min(best, f(lo + (hi - lo) * i / n));
  return best;
}

// Ray-boundary bisection for the simplex gauge (independent of the library's
// membership-based bisection): scale s with pole + s (x - pole) hitting the
// first zero coordinate.
inline double simplex_gauge_direct(const Vec& pole, const Vec& x) {
  double smax = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dir = x[i] - pole[i];
    if (dir < 0.0) smax = std::min(smax, pole[i] / -dir);
  }
  return smax == std::numeric_limits<double>::infinity() ? 0.0 : 1.0 / smax;
}

// Shannon entropy of a count histogram.
inline double shannon_entropy(const Vec& counts) {
  double total = 0.0;
  for (double c : counts) total += c;
  double h = 0.0;
  for (double c : counts) {
    if (c <= 0.0) continue;
    const double p = c / total;
    h -= p * std::log(p);
  }
  return h;
}

// Newton iteration on w e^w = z, independently coded.
inline double lambert_direct(double z) {
  // Bisection on the increasing map w -> w e^w over [0, log z + 1].
  double lo = 0.0, hi = std::max(1.0, std::log(std::max(z, 1.0)) + 1.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::exp(mid) < z)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Simple mean and standard deviation.
struct Moments {
  double mean = 0.0, sd = 0.0;
};
inline Moments moments(const Vec& xs) {
  Moments mo;
  for (double x : xs) mo.mean += x;
  mo.mean /= xs.size();
  double v = 0.0;
  for (double x : xs) v += (x - mo.mean) * (x - mo.mean);
  mo.sd = xs.size() > 1 ? std::sqrt(v / (xs.size() - 1)) : 0.0;
  return mo;
}

// Least-squares slope of y against x.
inline double ls_slope(const Vec& x, const Vec& y) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

}  // namespace oracles
