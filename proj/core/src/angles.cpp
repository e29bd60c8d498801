#include "hypvol/angles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypvol/quadrature.hpp"
#include "hypvol/specfun.hpp"

namespace hypvol::hypgeom {

namespace {

Eigen::VectorXd minkowski_flip(const Eigen::VectorXd& v) {
  Eigen::VectorXd j = v;
  j[0] = -j[0];
  return j;
}

void require_full_simplex(const GeodesicSimplex& s) {
  if (s.order() != s.n)
    throw std::domain_error("dihedral angles need an n-simplex in dimension n");
  if (s.degenerate) throw std::domain_error("degenerate simplex has no dihedral angles");
}

}  // namespace

Eigen::VectorXd facet_normal(const GeodesicSimplex& s, int omit) {
  require_full_simplex(s);
  const int n = s.n;
  if (omit < 0 || omit > n) throw std::invalid_argument("facet_normal: bad vertex index");
  // <m, w> = 0 for all facet vertices w  <=>  m is Euclidean-orthogonal to J w.
  Eigen::MatrixXd rows(n, n + 1);
  int r = 0;
  for (int i = 0; i <= n; ++i) {
    if (i == omit) continue;
    rows.row(r++) = minkowski_flip(s.vertices[i].x).transpose();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
  lu.setThreshold(1e-12);
  Eigen::MatrixXd ker = lu.kernel();
  if (ker.cols() != 1)
    throw std::domain_error("facet_normal: facet does not span a hyperplane");
  Eigen::VectorXd m = ker.col(0);
  const double norm2 = minkowski_inner(m, m);
  if (!(norm2 > 1e-14))
    throw std::domain_error("facet_normal: facet normal is not spacelike");
  m /= std::sqrt(norm2);
  if (minkowski_inner(m, s.vertices[omit].x) > 0) m = -m;
  return m;
}

Angle dihedral_angle(const GeodesicSimplex& s, int i, int j) {
  require_full_simplex(s);
  if (i == j || i < 0 || j < 0 || i > s.n || j > s.n)
    throw std::invalid_argument("dihedral_angle: bad vertex pair");
  const Eigen::VectorXd ni = facet_normal(s, i);
  const Eigen::VectorXd nj = facet_normal(s, j);
  double c = -minkowski_inner(ni, nj);
  c = std::clamp(c, -1.0, 1.0);
  return Angle(std::acos(c));
}

std::map<std::pair<int, int>, Angle> dihedral_angles(const GeodesicSimplex& s) {
  require_full_simplex(s);
  std::vector<Eigen::VectorXd> normals;
  normals.reserve(s.n + 1);
  for (int i = 0; i <= s.n; ++i) normals.push_back(facet_normal(s, i));
  std::map<std::pair<int, int>, Angle> out;
  for (int i = 0; i <= s.n; ++i)
    for (int j = i + 1; j <= s.n; ++j) {
      double c = -minkowski_inner(normals[i], normals[j]);
      c = std::clamp(c, -1.0, 1.0);
      out[{i, j}] = Angle(std::acos(c));
    }
  return out;
}

std::array<Angle, 3> ideal_tetra_angles(const GeodesicSimplex& s) {
  if (s.n != 3 || s.order() != 3)
    throw std::domain_error("ideal_tetra_angles: need a 3-simplex in dimension 3");
  if (s.degenerate) throw std::domain_error("ideal_tetra_angles: degenerate simplex");
  if (!s.all_ideal()) throw std::domain_error("ideal_tetra_angles: all vertices must be ideal");
  // Edge (0,k) is opposite the omitted pair from the complement.
  return {dihedral_angle(s, 2, 3), dihedral_angle(s, 1, 3), dihedral_angle(s, 1, 2)};
}

double ideal_tetra_volume(Angle alpha, Angle beta, Angle gamma, double tol) {
  const double a = alpha.radians, b = beta.radians, g = gamma.radians;
  if (a < -1e-12 || b < -1e-12 || g < -1e-12)
    throw std::domain_error("ideal_tetra_volume: negative angle");
  if (std::abs(a + b + g - kPi) > 1e-9)
    throw std::domain_error("ideal_tetra_volume: angle sum must be pi");
  const double t = tol / 3.0;
  return specfun::lobachevsky(a, t) + specfun::lobachevsky(b, t) + specfun::lobachevsky(g, t);
}

ObtusenessClass obtuseness_from_angles(const std::map<std::pair<int, int>, Angle>& angles,
                                       double atol) {
  // Work over the edges of a tetrahedron: edge {u,v} subtends the dihedral
  // angle keyed by its complementary pair.
  auto edge_angle = [&](int u, int v) {
    int rest[2], r = 0;
    for (int w = 0; w < 4; ++w)
      if (w != u && w != v) rest[r++] = w;
    return angles.at({std::min(rest[0], rest[1]), std::max(rest[0], rest[1])}).radians;
  };
  const double threshold = kPi / 2.0 - atol;
  bool nonacute[4][4] = {};
  int count = 0;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      const bool na = edge_angle(u, v) >= threshold;
      nonacute[u][v] = nonacute[v][u] = na;
      if (na) ++count;
    }
  // 3-obtuse: all three edges of some face.
  for (int k = 0; k < 4; ++k) {
    int f[3], r = 0;
    for (int w = 0; w < 4; ++w)
      if (w != k) f[r++] = w;
    if (nonacute[f[0]][f[1]] && nonacute[f[0]][f[2]] && nonacute[f[1]][f[2]])
      return ObtusenessClass::three_obtuse;
  }
  // 2-obtuse: two nonacute edges sharing a vertex.
  for (int v = 0; v < 4; ++v) {
    int deg = 0;
    for (int u = 0; u < 4; ++u)
      if (u != v && nonacute[u][v]) ++deg;
    if (deg >= 2) return ObtusenessClass::two_obtuse;
  }
  if (count >= 1) return ObtusenessClass::one_obtuse;
  return ObtusenessClass::no_nonacute;
}

ObtusenessClass classify_obtuseness(const GeodesicSimplex& s, double atol) {
  if (s.n != 3 || s.order() != 3)
    throw std::domain_error("classify_obtuseness: need a 3-simplex in dimension 3");
  if (s.degenerate) throw std::domain_error("classify_obtuseness: degenerate simplex");
  if (!s.all_finite())
    throw std::domain_error("classify_obtuseness: vertices must be nonideal");
  return obtuseness_from_angles(dihedral_angles(s), atol);
}

NearMaximalReport near_maximal_angle_check(const GeodesicSimplex& s, double eps, double tol) {
  if (s.n < 4) throw std::domain_error("near_maximal_angle_check: needs dimension >= 4");
  if (!(eps > 0.0)) throw std::domain_error("near_maximal_angle_check: eps must be positive");
  NearMaximalReport rep;
  rep.volume = std::abs(signed_volume(s, tol));
  const double vn = specfun::v_n(s.n, std::min(tol, 1e-6));
  if (rep.volume < (1.0 - eps) * vn) {
    rep.ok = true;
    rep.vacuous = true;
    return rep;
  }
  double lo = 1e300, hi = -1e300;
  for (const auto& [key, ang] : dihedral_angles(s)) {
    const double ratio = kPi / ang.radians;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  rep.min_pi_over_alpha = lo;
  rep.max_pi_over_alpha = hi;
  rep.ok = (lo > 2.0) && (hi < 3.0);
  return rep;
}

namespace {

double lob(double t) { return specfun::lobachevsky(t, 1e-12); }

// Golden-section maximization on [a, b]; handles boundary maxima.
template <typename F>
double golden_max(F f, double a, double b, int iters) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

IdealMaximizer one_obtuse_slice_maximizer(double alpha, int grid) {
  if (grid < 100) throw std::domain_error("one_obtuse maximizer: grid must be >= 100");
  if (alpha < kPi / 2.0 - 1e-12 || alpha > kPi + 1e-12)
    throw std::domain_error("one_obtuse maximizer: alpha must lie in [pi/2, pi]");
  const double span = kPi - alpha;
  auto f = [&](double beta) { return lob(alpha) + lob(beta) + lob(span - beta); };
  double best_b = 0, best_v = -1e300;
  for (int j = 0; j <= grid; ++j) {
    const double b = span * j / grid;
    const double v = f(b);
    if (v > best_v) {
      best_v = v;
      best_b = b;
    }
  }
  const double w = span / grid;
  const double beta = span > 0
                          ? golden_max(f, std::max(0.0, best_b - w), std::min(span, best_b + w), 100)
                          : 0.0;
  IdealMaximizer m;
  m.alpha = alpha;
  m.beta = beta;
  m.gamma = span - beta;
  m.value = f(beta);
  return m;
}

IdealMaximizer one_obtuse_ideal_maximizer(int grid) {
  if (grid < 100) throw std::domain_error("one_obtuse maximizer: grid must be >= 100");
  double best_a = kPi / 2.0, best_v = -1e300;
  for (int i = 0; i <= grid; ++i) {
    const double a = kPi / 2.0 + (kPi / 2.0) * i / grid;
    const double v = one_obtuse_slice_maximizer(a, grid).value;
    if (v > best_v) {
      best_v = v;
      best_a = a;
    }
  }
  auto outer = [&](double a) { return one_obtuse_slice_maximizer(a, grid).value; };
  const double w = (kPi / 2.0) / grid;
  const double alpha = golden_max(outer, std::max(kPi / 2.0, best_a - w),
                                  std::min(kPi, best_a + w), 80);
  return one_obtuse_slice_maximizer(alpha, grid);
}

}  // namespace hypvol::hypgeom
