#include "hypvol/geodesic_simplex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hypvol::hypgeom {

bool GeodesicSimplex::all_ideal() const {
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const HPoint& p) { return p.kind == HPoint::Kind::ideal; });
}

bool GeodesicSimplex::all_finite() const {
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const HPoint& p) { return p.kind == HPoint::Kind::finite; });
}

GeodesicSimplex straighten(const std::vector<HPoint>& vertex_images, int n) {
  if (n < 1) throw std::invalid_argument("straighten: dimension must be >= 1");
  if (vertex_images.empty() || static_cast<int>(vertex_images.size()) > n + 1)
    throw std::invalid_argument("straighten: need 1..n+1 vertices");
  for (const auto& p : vertex_images)
    if (p.dim() != n) throw std::invalid_argument("straighten: vertex dimension mismatch");

  GeodesicSimplex s;
  s.n = n;
  s.vertices = vertex_images;

  const int k = s.order();
  if (k == 0) {
    s.degenerate = false;
    return s;
  }
  Eigen::MatrixXd d(n, k);
  const Eigen::VectorXd k0 = s.vertices[0].klein();
  for (int i = 1; i <= k; ++i) d.col(i - 1) = s.vertices[i].klein() - k0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d);
  qr.setThreshold(1e-12);
  s.degenerate = qr.rank() < k;
  return s;
}

GeodesicSimplex regular_ideal_simplex(int n) {
  if (n < 2) throw std::invalid_argument("regular_ideal_simplex: n must be >= 2");
  // n+1 unit vectors in R^n with pairwise dot -1/n: project the standard
  // basis of R^{n+1} off the all-ones direction and rotate into R^n.
  Eigen::MatrixXd e = Eigen::MatrixXd::Identity(n + 1, n + 1);
  const Eigen::VectorXd c = Eigen::VectorXd::Constant(n + 1, 1.0 / (n + 1));
  Eigen::MatrixXd w(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) w.col(i) = e.col(i) - c;

  // Orthonormal basis of the complement of (1,...,1).
  Eigen::MatrixXd ones = Eigen::VectorXd::Ones(n + 1);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(ones.transpose());
  Eigen::MatrixXd ker = lu.kernel();  // (n+1) x n
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(ker);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n + 1, n);

  std::vector<HPoint> verts;
  verts.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    Eigen::VectorXd xi = q.transpose() * w.col(i);
    xi.normalize();
    Eigen::VectorXd m(n + 1);
    m[0] = 1.0;
    m.tail(n) = xi;
    verts.push_back(HPoint::ideal_point(std::move(m)));
  }
  return straighten(verts, n);
}

std::vector<GeodesicSimplex> barycentric_subdivision(const GeodesicSimplex& s) {
  const int k = s.order();
  const int n = s.n;
  std::vector<Eigen::VectorXd> kv;
  kv.reserve(k + 1);
  for (const auto& p : s.vertices) kv.push_back(p.klein());

  std::vector<int> perm(k + 1);
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<GeodesicSimplex> cells;
  do {
    std::vector<HPoint> verts;
    verts.reserve(k + 1);
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
    for (int j = 0; j <= k; ++j) {
      acc += kv[perm[j]];
      verts.push_back(HPoint::from_klein(acc / (j + 1.0)));
    }
    cells.push_back(straighten(verts, n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cells;
}

}  // namespace hypvol::hypgeom
