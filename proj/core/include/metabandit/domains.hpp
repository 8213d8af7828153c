#pragma once

// Convex action bodies: the probability simplex, the Euclidean unit ball,
// and constraint polytopes.  Each carries a strictly interior center used
// as the anchor of interior projections.

#include <optional>
#include <string>
#include <vector>

#include "metabandit/linalg.hpp"

namespace metabandit {

// Half-space constraint <a, x> <= b.
struct Constraint {
  Vec a;
  double b;
};

enum class DomainKind { Simplex, Sphere, Polytope };

class Domain {
 public:
  static Domain simplex(std::size_t d);
  static Domain sphere(std::size_t d);
  // Polytope center is the analytic center of -sum log(b - <a,x>), found by
  // damped Newton from `interior_hint` (gradient norm <= 1e-10).  The hint
  // must be strictly feasible.
  static Domain polytope(std::size_t d, std::vector<Constraint> constraints,
                         const Vec& interior_hint);

  DomainKind kind() const { return kind_; }
  std::size_t dimension() const { return d_; }
  const Vec& center() const { return center_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // Membership with tolerance 1e-9.
  bool contains(const Vec& x, double tol = 1e-9) const;

  // Pull a point that violates membership by at most `tol` back inside by
  // nudging it toward the center; reject larger violations.
  Vec snap_inside(const Vec& x, double tol = 1e-9) const;

  // c_eps(x) = x1 + (x - x1)/(1 + eps).  Requires x in the domain, eps > 0.
  Vec project_center(const Vec& x, double eps) const;

  // (1 - eps) x + (eps/d) 1_d on the simplex; eps in (0, 1].
  Vec simplex_shrink(const Vec& x, double eps) const;

  // inf{t >= 0 : pole + (x - pole)/t in K}; 0 at the pole, 1 on the
  // boundary.  Bisection along the ray, 60 iterations.
  double minkowski_gauge(const Vec& pole, const Vec& x) const;

 private:
  Domain(DomainKind kind, std::size_t d) : kind_(kind), d_(d) {}

  DomainKind kind_;
  std::size_t d_;
  Vec center_;
  std::vector<Constraint> constraints_;
};

}  // namespace metabandit
