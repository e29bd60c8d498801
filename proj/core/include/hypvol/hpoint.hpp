#pragma once

#include <Eigen/Dense>

namespace hypvol::hypgeom {

// Minkowski pairing <u,v> = -u0 v0 + sum_{i>=1} u_i v_i.
double minkowski_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// A point of hyperbolic n-space or its ideal boundary, in the hyperboloid
/// model. Finite points satisfy <x,x> = -1 with x0 > 0; ideal points are
/// null rays, stored normalized to x0 = 1.
struct HPoint {
  enum class Kind { finite, ideal };

  Eigen::VectorXd x;  // Minkowski coordinates, size n+1
  Kind kind = Kind::finite;

  int dim() const { return static_cast<int>(x.size()) - 1; }

  // Projective (Klein) image x_i / x0, a vector in the closed unit ball.
  Eigen::VectorXd klein() const;

  static HPoint finite_point(Eigen::VectorXd v);
  static HPoint ideal_point(Eigen::VectorXd v);

  // Classify by the Minkowski norm: ~0 -> ideal, ~-1 -> finite.
  static HPoint from_minkowski_auto(Eigen::VectorXd v, double class_tol = 1e-6);

  // |k| < 1 -> finite lift, |k| ~ 1 -> ideal.
  static HPoint from_klein(const Eigen::VectorXd& k);
};

}  // namespace hypvol::hypgeom
