#include "hypvol/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "hypvol/angles.hpp"

namespace hypvol::hypgeom {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * kPi * u2);
}

namespace {

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double klein_evol(const std::vector<HPoint>& verts) {
  const int n = verts[0].dim();
  const int k = static_cast<int>(verts.size()) - 1;
  if (k != n) return 0.0;
  Eigen::MatrixXd d(n, n);
  const Eigen::VectorXd k0 = verts[0].klein();
  for (int i = 1; i <= n; ++i) d.col(i - 1) = verts[i].klein() - k0;
  return std::abs(d.determinant()) / factorial(n);
}

Eigen::VectorXd uniform_in_ball(Rng& rng, int n, double r) {
  for (;;) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(-r, r);
    if (x.squaredNorm() < r * r) return x;
  }
}

}  // namespace

HPoint sample_hyperbolic_ball(Rng& rng, int n, double radius) {
  if (n < 2) throw std::domain_error("sample_hyperbolic_ball: n must be >= 2");
  if (!(radius > 0)) throw std::domain_error("sample_hyperbolic_ball: radius must be positive");
  const double rk = std::tanh(radius);
  // Density on the Klein ball is (1-|x|^2)^{-(n+1)/2}; reject against its
  // maximum on the closed ball of radius rk.
  const double fmax = std::pow(1.0 - rk * rk, -0.5 * (n + 1));
  for (;;) {
    const Eigen::VectorXd x = uniform_in_ball(rng, n, rk);
    const double f = std::pow(1.0 - x.squaredNorm(), -0.5 * (n + 1));
    if (rng.uniform() * fmax <= f) return HPoint::from_klein(x);
  }
}

GeodesicSimplex sample_compact_simplex(Rng& rng, int n, double radius, double min_klein_volume) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<HPoint> verts;
    verts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) verts.push_back(sample_hyperbolic_ball(rng, n, radius));
    if (klein_evol(verts) < min_klein_volume) continue;
    auto s = straighten(verts, n);
    if (!s.degenerate) return s;
  }
  throw std::runtime_error("sample_compact_simplex: rejection did not terminate");
}

GeodesicSimplex sample_ideal_simplex(Rng& rng, int n, double min_separation,
                                     double min_klein_volume) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<HPoint> verts;
    verts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
      Eigen::VectorXd dir(n);
      for (int d = 0; d < n; ++d) dir[d] = rng.gaussian();
      if (dir.norm() < 1e-8) {
        --i;
        continue;
      }
      dir.normalize();
      Eigen::VectorXd m(n + 1);
      m[0] = 1.0;
      m.tail(n) = dir;
      verts.push_back(HPoint::ideal_point(std::move(m)));
    }
    bool separated = true;
    for (size_t i = 0; i < verts.size() && separated; ++i)
      for (size_t j = i + 1; j < verts.size(); ++j)
        if ((verts[i].klein() - verts[j].klein()).norm() < min_separation) {
          separated = false;
          break;
        }
    if (!separated || klein_evol(verts) < min_klein_volume) continue;
    auto s = straighten(verts, n);
    if (!s.degenerate) return s;
  }
  throw std::runtime_error("sample_ideal_simplex: rejection did not terminate");
}

namespace {

// Lift a point of the Klein disk of the plane {x3 = 0} in H^3.
HPoint lift_plane_point(const Eigen::Vector2d& k) {
  Eigen::VectorXd v(3);
  v << k[0], k[1], 0.0;
  return HPoint::from_klein(v);
}

struct ObtuseBase {
  Eigen::Vector2d a, b, c;  // Klein triangle in the plane
};

ObtuseBase sample_base_triangle(Rng& rng) {
  for (;;) {
    ObtuseBase t;
    auto draw = [&] {
      return Eigen::Vector2d(rng.uniform(-0.55, 0.55), rng.uniform(-0.55, 0.55));
    };
    t.a = draw();
    t.b = draw();
    t.c = draw();
    const double area =
        0.5 * std::abs((t.b - t.a).x() * (t.c - t.a).y() - (t.b - t.a).y() * (t.c - t.a).x());
    if (area < 0.01) continue;
    if ((t.b - t.a).norm() < 0.2 || (t.c - t.a).norm() < 0.2 || (t.c - t.b).norm() < 0.2) continue;
    return t;
  }
}

// Apex at hyperbolic distance d over the projection target q in the plane.
HPoint apex_over(const Eigen::Vector2d& q, double d) {
  const HPoint qh = lift_plane_point(q);
  Eigen::VectorXd h(4);
  h << 0.0, 0.0, 0.0, 1.0;
  Eigen::VectorXd v = std::cosh(d) * qh.x + std::sinh(d) * h;
  return HPoint::finite_point(std::move(v));
}

}  // namespace

GeodesicSimplex sample_two_obtuse_simplex(Rng& rng, double radius) {
  const double rk = std::tanh(radius);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const ObtuseBase t = sample_base_triangle(rng);
    // Beyond both edge lines at vertex a: subtract positive multiples of the
    // two edge directions.
    const double u = rng.uniform(0.08, 0.5), w = rng.uniform(0.08, 0.5);
    const Eigen::Vector2d q = t.a - u * (t.b - t.a) - w * (t.c - t.a);
    if (q.norm() > 0.9 * rk) continue;
    const double d = rng.uniform(0.15, 1.2);
    std::vector<HPoint> verts = {lift_plane_point(t.a), lift_plane_point(t.b),
                                 lift_plane_point(t.c), apex_over(q, d)};
    auto s = straighten(verts, 3);
    if (s.degenerate) continue;
    if (classify_obtuseness(s) == ObtusenessClass::two_obtuse) return s;
  }
  throw std::runtime_error("sample_two_obtuse_simplex: rejection did not terminate");
}

GeodesicSimplex sample_one_obtuse_simplex(Rng& rng, double radius) {
  const double rk = std::tanh(radius);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const ObtuseBase t = sample_base_triangle(rng);
    // Beyond the line through a,b only.
    const double along = rng.uniform(0.2, 0.8), w = rng.uniform(0.08, 0.5);
    const Eigen::Vector2d q = t.a + along * (t.b - t.a) - w * (t.c - t.a);
    if (q.norm() > 0.9 * rk) continue;
    const double d = rng.uniform(0.15, 1.2);
    std::vector<HPoint> verts = {lift_plane_point(t.a), lift_plane_point(t.b),
                                 lift_plane_point(t.c), apex_over(q, d)};
    auto s = straighten(verts, 3);
    if (s.degenerate) continue;
    if (classify_obtuseness(s) == ObtusenessClass::one_obtuse) return s;
  }
  throw std::runtime_error("sample_one_obtuse_simplex: rejection did not terminate");
}

Eigen::MatrixXd random_lorentz(Rng& rng, int n, double max_rapidity) {
  auto random_rotation = [&](int dim) {
    Eigen::MatrixXd g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i)
      if (r(i, i) < 0) q.col(i) = -q.col(i);
    if (q.determinant() < 0) q.col(0) = -q.col(0);
    return q;
  };
  auto embed = [&](const Eigen::MatrixXd& r) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
    m.block(1, 1, n, n) = r;
    return m;
  };
  const double chi = rng.uniform(-max_rapidity, max_rapidity);
  Eigen::MatrixXd boost = Eigen::MatrixXd::Identity(n + 1, n + 1);
  boost(0, 0) = std::cosh(chi);
  boost(0, 1) = std::sinh(chi);
  boost(1, 0) = std::sinh(chi);
  boost(1, 1) = std::cosh(chi);
  return embed(random_rotation(n)) * boost * embed(random_rotation(n));
}

GeodesicSimplex apply_lorentz(const Eigen::MatrixXd& L, const GeodesicSimplex& s) {
  if (L.rows() != s.n + 1 || L.cols() != s.n + 1)
    throw std::invalid_argument("apply_lorentz: matrix size mismatch");
  std::vector<HPoint> verts;
  verts.reserve(s.vertices.size());
  for (const auto& p : s.vertices) {
    Eigen::VectorXd y = L * p.x;
    verts.push_back(p.kind == HPoint::Kind::ideal ? HPoint::ideal_point(std::move(y))
                                                  : HPoint::finite_point(std::move(y)));
  }
  return straighten(verts, s.n);
}

}  // namespace hypvol::hypgeom
