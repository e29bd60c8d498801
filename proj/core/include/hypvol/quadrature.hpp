#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hypvol/geodesic_simplex.hpp"

namespace hypvol::hypgeom {

// Base rule of the adaptive scheme. `gauss` (degree-5 Grundmann-Moller
// cubature with an embedded degree-3 error estimate) is the production
// scheme; `midpoint` is the independent two-level centroid rule kept for
// cross-checks.
enum class QuadRule { gauss, midpoint };

// Hyperbolic volume as the integral of (1-|x|^2)^{-(n+1)/2} over the
// Euclidean simplex spanned by `verts` inside the Klein ball. Vertices on
// the unit sphere (ideal vertices) are handled by geometric subdivision
// toward the sphere; the result has absolute error of order tol.
double klein_simplex_volume(const std::vector<Eigen::VectorXd>& verts, double tol,
                            QuadRule rule = QuadRule::gauss);

// Signed volume of an n-simplex in H^n: sign of the Minkowski determinant of
// the vertex vectors times the Klein-model quadrature magnitude. Degenerate
// simplices have volume 0.
double signed_volume(const GeodesicSimplex& s, double tol, QuadRule rule);
double signed_volume(const GeodesicSimplex& s, double tol = 1e-6);

}  // namespace hypvol::hypgeom
