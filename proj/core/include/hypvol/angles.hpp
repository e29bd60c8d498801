#pragma once

#include <array>
#include <map>
#include <utility>

#include "hypvol/angle.hpp"
#include "hypvol/geodesic_simplex.hpp"

namespace hypvol::hypgeom {

// Outward unit spacelike Minkowski normal of the facet omitting vertex `omit`.
Eigen::VectorXd facet_normal(const GeodesicSimplex& s, int omit);

// Dihedral angle along the (n-2)-face opposite the vertex pair {i,j}, i.e.
// the face spanned by the remaining vertices:
// arccos(-<n_i, n_j>) for the outward facet normals. In (0, pi).
Angle dihedral_angle(const GeodesicSimplex& s, int i, int j);

// All C(n+1,2) dihedral angles, keyed by the omitted vertex pair (i < j).
std::map<std::pair<int, int>, Angle> dihedral_angles(const GeodesicSimplex& s);

// Dihedral angles of an ideal 3-simplex at the three edges meeting vertex 0,
// i.e. at edges (0,1), (0,2), (0,3). They sum to pi and opposite edges carry
// equal angles.
std::array<Angle, 3> ideal_tetra_angles(const GeodesicSimplex& s);

// L(alpha) + L(beta) + L(gamma); requires alpha+beta+gamma = pi (1e-9) and
// nonnegative angles.
double ideal_tetra_volume(Angle alpha, Angle beta, Angle gamma, double tol = 1e-9);

enum class ObtusenessClass { no_nonacute, one_obtuse, two_obtuse, three_obtuse };

// Classification of a compact nondegenerate 3-simplex by its nonacute
// dihedral angles (nonacute means >= pi/2 - atol). Rejects ideal vertices.
ObtusenessClass classify_obtuseness(const GeodesicSimplex& s, double atol = 0.0);

// Same classification from precomputed angles; no compactness requirement.
// Angles are keyed by the omitted vertex pair, as in dihedral_angles.
ObtusenessClass obtuseness_from_angles(const std::map<std::pair<int, int>, Angle>& angles,
                                       double atol = 0.0);

struct NearMaximalReport {
  bool ok = false;        // every dihedral angle has 2 < pi/alpha < 3
  bool vacuous = false;   // volume below the (1-eps) v_n threshold
  double volume = 0.0;
  double min_pi_over_alpha = 0.0;
  double max_pi_over_alpha = 0.0;
};

// For n >= 4: if |vol(S)| >= (1-eps) v_n, check 2 < pi/alpha < 3 for every
// dihedral angle; otherwise report vacuous-true.
NearMaximalReport near_maximal_angle_check(const GeodesicSimplex& s, double eps,
                                           double tol = 1e-6);

struct IdealMaximizer {
  double alpha = 0, beta = 0, gamma = 0;
  double value = 0;
};

// Maximize L(a)+L(b)+L(c) over a >= pi/2, b+c = pi-a, b,c >= 0 by grid
// search plus golden-section refinement. grid >= 100.
IdealMaximizer one_obtuse_ideal_maximizer(int grid);

// Same with the obtuse angle held fixed.
IdealMaximizer one_obtuse_slice_maximizer(double alpha, int grid);

}  // namespace hypvol::hypgeom
