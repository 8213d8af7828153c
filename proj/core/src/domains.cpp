#include "metabandit/domains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metabandit {

namespace {

// Analytic center of -sum log(b - <a,x>) by damped Newton with Armijo
// backtracking.  Throws if the gradient norm cannot be driven below 1e-10
// (e.g. an unbounded polytope has no analytic center).
Vec analytic_center(const std::vector<Constraint>& cs, Vec x) {
  const std::size_t d = x.size();
  auto slacks = [&](const Vec& p, Vec& s) {
    for (std::size_t c = 0; c < cs.size(); ++c) {
      s[c] = cs[c].b - dot(cs[c].a, p);
      if (s[c] <= 0.0) return false;
    }
    return true;
  };
  Vec s(cs.size());
  if (!slacks(x, s)) throw std::invalid_argument("analytic_center: hint not strictly feasible");

  for (int iter = 0; iter < 500; ++iter) {
    Vec g(d, 0.0);
    Matrix h(d, d);
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const double inv = 1.0 / s[c];
      for (std::size_t i = 0; i < d; ++i) {
        g[i] += cs[c].a[i] * inv;
        for (std::size_t j = 0; j < d; ++j) h(i, j) += cs[c].a[i] * cs[c].a[j] * inv * inv;
      }
    }
    if (norm2(g) <= 1e-10) return x;
    Vec dx = cholesky_solve(h, g);
    for (double& v : dx) v = -v;

    // Cap the step to stay strictly feasible, then backtrack.
    double tmax = 1.0;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const double adx = dot(cs[c].a, dx);
      if (adx > 0.0) tmax = std::min(tmax, 0.95 * s[c] / adx);
    }
    double val = 0.0;
    for (double sc : s) val -= std::log(sc);
    const double slope = dot(g, dx);
    double t = tmax;
    Vec trial(d), strial(cs.size());
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < d; ++i) trial[i] = x[i] + t * dx[i];
      if (slacks(trial, strial)) {
        double vtrial = 0.0;
        for (double sc : strial) vtrial -= std::log(sc);
        if (vtrial <= val + 1e-4 * t * slope) break;
      }
      t *= 0.5;
    }
    x = trial;
    s = strial;
  }
  throw std::runtime_error("analytic_center: Newton did not converge");
}

}  // namespace

Domain Domain::simplex(std::size_t d) {
  if (d == 0) throw std::invalid_argument("Domain::simplex: dimension must be positive");
  Domain dom(DomainKind::Simplex, d);
  dom.center_.assign(d, 1.0 / static_cast<double>(d));
  return dom;
}

Domain Domain::sphere(std::size_t d) {
  if (d == 0) throw std::invalid_argument("Domain::sphere: dimension must be positive");
  Domain dom(DomainKind::Sphere, d);
  dom.center_.assign(d, 0.0);
  return dom;
}

Domain Domain::polytope(std::size_t d, std::vector<Constraint> constraints,
                        const Vec& interior_hint) {
  if (d == 0) throw std::invalid_argument("Domain::polytope: dimension must be positive");
  if (constraints.empty()) throw std::invalid_argument("Domain::polytope: no constraints");
  for (const auto& c : constraints)
    if (c.a.size() != d) throw std::invalid_argument("Domain::polytope: constraint size mismatch");
  if (interior_hint.size() != d)
    throw std::invalid_argument("Domain::polytope: hint size mismatch");
  Domain dom(DomainKind::Polytope, d);
  dom.constraints_ = std::move(constraints);
  dom.center_ = analytic_center(dom.constraints_, interior_hint);
  for (const auto& c : dom.constraints_)
    if (dot(c.a, dom.center_) >= c.b)
      throw std::runtime_error("Domain::polytope: center not strictly interior");
  return dom;
}

bool Domain::contains(const Vec& x, double tol) const {
  if (x.size() != d_) return false;
  switch (kind_) {
    case DomainKind::Simplex: {
      double sum = 0.0;
      for (double v : x) {
        if (v < -tol) return false;
        sum += v;
      }
      return std::abs(sum - 1.0) <= tol;
    }
    case DomainKind::Sphere:
      return norm2(x) <= 1.0 + tol;
    case DomainKind::Polytope:
      for (const auto& c : constraints_)
        if (dot(c.a, x) > c.b + tol) return false;
      return true;
  }
  return false;
}

Vec Domain::snap_inside(const Vec& x, double tol) const {
  if (!contains(x, tol))
    throw std::domain_error("Domain::snap_inside: point outside membership tolerance");
  if (contains(x, 0.0)) {
    if (kind_ != DomainKind::Simplex) return x;
    // Renormalize away sum drift even when nonnegative.
    double sum = 0.0;
    for (double v : x) sum += v;
    if (std::abs(sum - 1.0) < 1e-15) return x;
  }
  // Nudge toward the center just enough to clear the drift.
  Vec y(d_);
  const double shrink = 4.0 * tol;
  for (std::size_t i = 0; i < d_; ++i)
    y[i] = center_[i] + (x[i] - center_[i]) / (1.0 + shrink);
  if (kind_ == DomainKind::Simplex) {
    double sum = 0.0;
    for (double v : y) {
      if (v < 0.0) throw std::domain_error("Domain::snap_inside: snap failed");
      sum += v;
    }
    for (double& v : y) v /= sum;
  }
  return y;
}

Vec Domain::project_center(const Vec& x, double eps) const {
  if (eps <= 0.0) throw std::invalid_argument("Domain::project_center: eps must be positive");
  if (!contains(x)) throw std::domain_error("Domain::project_center: point outside domain");
  Vec y(d_);
  for (std::size_t i = 0; i < d_; ++i)
    y[i] = center_[i] + (x[i] - center_[i]) / (1.0 + eps);
  return y;
}

Vec Domain::simplex_shrink(const Vec& x, double eps) const {
  if (kind_ != DomainKind::Simplex)
    throw std::logic_error("Domain::simplex_shrink: simplex only");
  if (eps <= 0.0 || eps > 1.0)
    throw std::invalid_argument("Domain::simplex_shrink: eps must be in (0,1]");
  if (!contains(x)) throw std::domain_error("Domain::simplex_shrink: point outside simplex");
  Vec y(d_);
  const double u = eps / static_cast<double>(d_);
  for (std::size_t i = 0; i < d_; ++i) y[i] = (1.0 - eps) * x[i] + u;
  return y;
}

double Domain::minkowski_gauge(const Vec& pole, const Vec& x) const {
  if (!contains(x)) throw std::domain_error("Domain::minkowski_gauge: point outside domain");
  // Pole must be strictly interior.
  const double margin = 1e-12;
  switch (kind_) {
    case DomainKind::Simplex: {
      double sum = 0.0;
      for (double v : pole) {
        if (v <= margin) throw std::domain_error("Domain::minkowski_gauge: degenerate pole");
        sum += v;
      }
      if (std::abs(sum - 1.0) > 1e-9)
        throw std::domain_error("Domain::minkowski_gauge: degenerate pole");
      break;
    }
    case DomainKind::Sphere:
      if (norm2(pole) >= 1.0 - margin)
        throw std::domain_error("Domain::minkowski_gauge: degenerate pole");
      break;
    case DomainKind::Polytope:
      for (const auto& c : constraints_)
        if (dot(c.a, pole) >= c.b - margin)
          throw std::domain_error("Domain::minkowski_gauge: degenerate pole");
      break;
  }

  Vec u(d_);
  double ulen = 0.0;
  for (std::size_t i = 0; i < d_; ++i) {
    u[i] = x[i] - pole[i];
    ulen += u[i] * u[i];
  }
  if (std::sqrt(ulen) < 1e-14) return 0.0;

  auto on_ray = [&](double r) {  // pole + r * u
    Vec p(d_);
    for (std::size_t i = 0; i < d_; ++i) p[i] = pole[i] + r * u[i];
    return p;
  };
  // Bracket the boundary crossing r* >= 1 by doubling, then bisect.
  double lo = 1.0, hi = 1.0;
  if (!contains(on_ray(1.0), 1e-9)) return 1.0;  // x effectively on the boundary
  // A tiny membership tolerance absorbs rounding in the ray arithmetic (the
  // simplex sum test would otherwise fail for every off-grid point).
  const double ray_tol = 1e-12;
  while (contains(on_ray(hi), ray_tol) && hi < 1e12) hi *= 2.0;
  if (hi >= 1e12) return 0.0;  // unbounded ray cannot happen for these bodies
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (contains(on_ray(mid), ray_tol))
      lo = mid;
    else
      hi = mid;
  }
  return 1.0 / lo;
}

}  // namespace metabandit
