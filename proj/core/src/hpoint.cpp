#include "hypvol/hpoint.hpp"

#include <cmath>
#include <stdexcept>

namespace hypvol::hypgeom {

namespace {
constexpr double kModelTol = 1e-9;
}

double minkowski_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size()) throw std::invalid_argument("minkowski_inner: dimension mismatch");
  if (u.size() < 2) throw std::invalid_argument("minkowski_inner: need at least 2 coordinates");
  double s = -u[0] * v[0];
  for (Eigen::Index i = 1; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Eigen::VectorXd HPoint::klein() const {
  return x.tail(x.size() - 1) / x[0];
}

HPoint HPoint::finite_point(Eigen::VectorXd v) {
  if (v.size() < 2 || !v.allFinite())
    throw std::invalid_argument("HPoint: malformed coordinates");
  if (!(v[0] > 0.0)) throw std::invalid_argument("HPoint: finite point needs x0 > 0");
  const double q = minkowski_inner(v, v);
  if (std::abs(q + 1.0) > kModelTol)
    throw std::invalid_argument("HPoint: finite point must satisfy <x,x> = -1");
  HPoint p;
  p.x = std::move(v);
  p.kind = Kind::finite;
  return p;
}

HPoint HPoint::ideal_point(Eigen::VectorXd v) {
  if (v.size() < 2 || !v.allFinite())
    throw std::invalid_argument("HPoint: malformed coordinates");
  if (!(v[0] > 0.0)) throw std::invalid_argument("HPoint: ideal point needs x0 > 0");
  v /= v[0];
  const double q = minkowski_inner(v, v);
  if (std::abs(q) > kModelTol)
    throw std::invalid_argument("HPoint: ideal point must be null");
  HPoint p;
  p.x = std::move(v);
  p.kind = Kind::ideal;
  return p;
}

HPoint HPoint::from_minkowski_auto(Eigen::VectorXd v, double class_tol) {
  if (v.size() < 2 || !v.allFinite())
    throw std::invalid_argument("HPoint: malformed coordinates");
  const double scale = v[0] > 0 ? v[0] : 1.0;
  const double q = minkowski_inner(v, v) / (scale * scale);
  if (std::abs(q) <= class_tol) {
    // Snap to an exact null ray so downstream quadrature sees a true ideal vertex.
    v /= v[0];
    const double r = v.tail(v.size() - 1).norm();
    if (r <= 0) throw std::invalid_argument("HPoint: degenerate null vector");
    v.tail(v.size() - 1) /= r;
    return ideal_point(std::move(v));
  }
  if (std::abs(q + 1.0) <= class_tol) {
    // Renormalize onto the hyperboloid sheet.
    v /= std::sqrt(-minkowski_inner(v, v));
    return finite_point(std::move(v));
  }
  throw std::invalid_argument("HPoint: Minkowski norm is neither ~0 nor ~-1");
}

HPoint HPoint::from_klein(const Eigen::VectorXd& k) {
  if (k.size() < 1 || !k.allFinite())
    throw std::invalid_argument("HPoint: malformed Klein coordinates");
  const double r2 = k.squaredNorm();
  Eigen::VectorXd v(k.size() + 1);
  v[0] = 1.0;
  v.tail(k.size()) = k;
  if (r2 < 1.0 - 1e-12) {
    v /= std::sqrt(1.0 - r2);
    return finite_point(std::move(v));
  }
  if (std::abs(std::sqrt(r2) - 1.0) <= kModelTol) {
    v.tail(k.size()) /= std::sqrt(r2);
    return ideal_point(std::move(v));
  }
  throw std::invalid_argument("HPoint: Klein point outside the closed unit ball");
}

}  // namespace hypvol::hypgeom
