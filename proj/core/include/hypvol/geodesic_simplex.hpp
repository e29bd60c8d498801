#pragma once

#include <vector>

#include "hypvol/hpoint.hpp"

namespace hypvol::hypgeom {

/// Geodesic k-simplex in H^n, the convex hull of its ordered vertices.
/// `degenerate` is set when the Klein images span less than k dimensions
/// (this includes repeated vertices).
struct GeodesicSimplex {
  int n = 0;
  std::vector<HPoint> vertices;
  bool degenerate = false;

  int order() const { return static_cast<int>(vertices.size()) - 1; }
  bool all_ideal() const;
  bool all_finite() const;
};

// The geodesic simplex spanned by the vertex images; idempotent at the
// level of vertex tuples.
GeodesicSimplex straighten(const std::vector<HPoint>& vertex_images, int n);

// Ideal simplex whose Klein vertices form a regular Euclidean n-simplex
// inscribed in the unit sphere.
GeodesicSimplex regular_ideal_simplex(int n);

// The (k+1)! cells of the barycentric subdivision, built in the Klein model.
std::vector<GeodesicSimplex> barycentric_subdivision(const GeodesicSimplex& s);

}  // namespace hypvol::hypgeom
