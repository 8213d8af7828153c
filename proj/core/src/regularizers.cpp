#include "metabandit/regularizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metabandit {

namespace {
constexpr double kShannonSwitch = 1e-6;  // |1 - beta| below this uses the limit form
constexpr double kInteriorMargin = 1e-12;
}  // namespace

double tsallis_value(const Vec& p, double beta) {
  if (beta <= 0.0 || beta > 1.0)
    throw std::invalid_argument("tsallis_value: beta must be in (0,1]");
  double s = 0.0;
  if (std::abs(1.0 - beta) < kShannonSwitch) {
    for (double v : p) {
      if (v <= 0.0) throw std::domain_error("tsallis_value: boundary point");
      s += v * std::log(v);
    }
    return s;
  }
  for (double v : p) {
    if (v <= 0.0) throw std::domain_error("tsallis_value: boundary point");
    s += std::pow(v, beta);
  }
  return (1.0 - s) / (1.0 - beta);
}

double tsallis_entropy(const Vec& p, double beta) { return -tsallis_value(p, beta); }

Regularizer Regularizer::tsallis(std::size_t d, double beta) {
  if (beta <= 0.0 || beta > 1.0)
    throw std::invalid_argument("Regularizer::tsallis: beta must be in (0,1]");
  Regularizer r(RegularizerFamily::Tsallis, d);
  r.beta_ = beta;
  r.minimizer_.assign(d, 1.0 / static_cast<double>(d));
  return r;
}

Regularizer Regularizer::sphere_barrier(std::size_t d) {
  Regularizer r(RegularizerFamily::SphereBarrier, d);
  r.minimizer_.assign(d, 0.0);
  return r;
}

Regularizer Regularizer::polytope_barrier(std::vector<Constraint> constraints, Vec minimizer) {
  if (constraints.empty())
    throw std::invalid_argument("Regularizer::polytope_barrier: no constraints");
  const std::size_t d = constraints.front().a.size();
  for (const auto& c : constraints)
    if (c.a.size() != d)
      throw std::invalid_argument("Regularizer::polytope_barrier: constraint size mismatch");
  Regularizer r(RegularizerFamily::PolytopeBarrier, d);
  r.constraints_ = std::move(constraints);
  r.minimizer_ = std::move(minimizer);
  return r;
}

double Regularizer::nu() const {
  switch (family_) {
    case RegularizerFamily::SphereBarrier:
      return 1.0;
    case RegularizerFamily::PolytopeBarrier:
      return static_cast<double>(constraints_.size());
    case RegularizerFamily::Tsallis:
      throw std::logic_error("Regularizer::nu: not a barrier family");
  }
  return 0.0;
}

void Regularizer::check_interior(const Vec& x) const {
  if (x.size() != d_) throw std::invalid_argument("Regularizer: dimension mismatch");
  switch (family_) {
    case RegularizerFamily::Tsallis:
      for (double v : x)
        if (v <= 0.0) throw std::domain_error("Regularizer: boundary point (tsallis)");
      break;
    case RegularizerFamily::SphereBarrier:
      if (1.0 - dot(x, x) < kInteriorMargin)
        throw std::domain_error("Regularizer: boundary point (sphere barrier)");
      break;
    case RegularizerFamily::PolytopeBarrier:
      for (const auto& c : constraints_)
        if (c.b - dot(c.a, x) < kInteriorMargin)
          throw std::domain_error("Regularizer: boundary point (polytope barrier)");
      break;
  }
}

double Regularizer::value(const Vec& x) const {
  check_interior(x);
  switch (family_) {
    case RegularizerFamily::Tsallis:
      return tsallis_value(x, beta_);
    case RegularizerFamily::SphereBarrier:
      return -std::log(1.0 - dot(x, x));
    case RegularizerFamily::PolytopeBarrier: {
      double s = 0.0;
      for (const auto& c : constraints_) s -= std::log(c.b - dot(c.a, x));
      return s;
    }
  }
  return 0.0;
}

Vec Regularizer::gradient(const Vec& x) const {
  check_interior(x);
  Vec g(d_, 0.0);
  switch (family_) {
    case RegularizerFamily::Tsallis:
      if (std::abs(1.0 - beta_) < kShannonSwitch) {
        for (std::size_t i = 0; i < d_; ++i) g[i] = 1.0 + std::log(x[i]);
      } else {
        for (std::size_t i = 0; i < d_; ++i)
          g[i] = -beta_ * std::pow(x[i], beta_ - 1.0) / (1.0 - beta_);
      }
      break;
    case RegularizerFamily::SphereBarrier: {
      const double inv = 2.0 / (1.0 - dot(x, x));
      for (std::size_t i = 0; i < d_; ++i) g[i] = inv * x[i];
      break;
    }
    case RegularizerFamily::PolytopeBarrier:
      for (const auto& c : constraints_) {
        const double inv = 1.0 / (c.b - dot(c.a, x));
        for (std::size_t i = 0; i < d_; ++i) g[i] += inv * c.a[i];
      }
      break;
  }
  return g;
}

Matrix Regularizer::hessian(const Vec& x) const {
  check_interior(x);
  Matrix h(d_, d_);
  switch (family_) {
    case RegularizerFamily::Tsallis:
      if (std::abs(1.0 - beta_) < kShannonSwitch) {
        for (std::size_t i = 0; i < d_; ++i) h(i, i) = 1.0 / x[i];
      } else {
        for (std::size_t i = 0; i < d_; ++i) h(i, i) = beta_ * std::pow(x[i], beta_ - 2.0);
      }
      break;
    case RegularizerFamily::SphereBarrier: {
      const double inv = 1.0 / (1.0 - dot(x, x));
      for (std::size_t i = 0; i < d_; ++i) {
        h(i, i) = 2.0 * inv;
        for (std::size_t j = 0; j < d_; ++j) h(i, j) += 4.0 * inv * inv * x[i] * x[j];
      }
      break;
    }
    case RegularizerFamily::PolytopeBarrier:
      for (const auto& c : constraints_) {
        const double inv = 1.0 / (c.b - dot(c.a, x));
        for (std::size_t i = 0; i < d_; ++i)
          for (std::size_t j = 0; j < d_; ++j) h(i, j) += inv * inv * c.a[i] * c.a[j];
      }
      break;
  }
  return h;
}

double Regularizer::s1() const {
  if (minimizer_.empty()) throw std::logic_error("Regularizer::s1: no minimizer recorded");
  const auto ed = jacobi_eigen(hessian(minimizer_));
  return ed.values.back();
}

double Regularizer::bregman(const Vec& x, const Vec& y) const {
  const Vec gy = gradient(y);
  double b = value(x) - value(y);
  for (std::size_t i = 0; i < d_; ++i) b -= gy[i] * (x[i] - y[i]);
  return b;
}

double Regularizer::max_step(const Vec& x, const Vec& dx) const {
  check_interior(x);
  double tmax = 1e18;
  switch (family_) {
    case RegularizerFamily::Tsallis:
      for (std::size_t i = 0; i < d_; ++i)
        if (dx[i] < 0.0) tmax = std::min(tmax, -x[i] / dx[i]);
      break;
    case RegularizerFamily::SphereBarrier: {
      // Solve ||x + t dx||^2 = 1 for the positive root.
      const double a = dot(dx, dx);
      if (a < 1e-30) break;
      const double b = dot(x, dx);
      const double c = dot(x, x) - 1.0;
      const double disc = b * b - a * c;
      tmax = (-b + std::sqrt(std::max(disc, 0.0))) / a;
      break;
    }
    case RegularizerFamily::PolytopeBarrier:
      for (const auto& c : constraints_) {
        const double adx = dot(c.a, dx);
        if (adx > 0.0) tmax = std::min(tmax, (c.b - dot(c.a, x)) / adx);
      }
      break;
  }
  return tmax;
}

double mab_divergence_radius_sq(double beta, std::size_t d) {
  if (beta <= 0.0 || beta > 1.0)
    throw std::invalid_argument("mab_divergence_radius_sq: beta must be in (0,1]");
  const double dd = static_cast<double>(d);
  if (std::abs(1.0 - beta) < kShannonSwitch) return std::log(dd);
  return (std::pow(dd, 1.0 - beta) - 1.0) / (1.0 - beta);
}

double blo_divergence_radius_sq(double eps, double nu, double k_const, double s1) {
  if (eps <= 0.0) throw std::invalid_argument("blo_divergence_radius_sq: eps must be positive");
  return 9.0 * std::pow(nu, 1.5) * k_const * std::sqrt(s1) / eps;
}

}  // namespace metabandit
