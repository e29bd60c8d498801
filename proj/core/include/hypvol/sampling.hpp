#pragma once

#include <cstdint>
#include <random>

#include "hypvol/geodesic_simplex.hpp"

namespace hypvol::hypgeom {

/// Deterministic random source. Raw mt19937_64 output is mapped to doubles
/// explicitly, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  double gaussian();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Uniform point of the hyperbolic ball of radius `radius` around the
// basepoint, via rejection against the Klein-model density.
HPoint sample_hyperbolic_ball(Rng& rng, int n, double radius);

// n+1 independent ball points, redrawn until the simplex is reasonably far
// from degenerate (Klein volume above `min_klein_volume`).
GeodesicSimplex sample_compact_simplex(Rng& rng, int n, double radius,
                                       double min_klein_volume = 1e-4);

// Ideal simplex with vertices sampled on the sphere, rejecting clustered or
// nearly degenerate configurations.
GeodesicSimplex sample_ideal_simplex(Rng& rng, int n, double min_separation = 0.4,
                                     double min_klein_volume = 1e-2);

// Compact 3-simplex built so that the apex projects beyond the two base-face
// edges at one base vertex; both edges then subtend nonacute angles.
GeodesicSimplex sample_two_obtuse_simplex(Rng& rng, double radius = 3.0);

// Compact 3-simplex with one forced nonacute edge, filtered to the
// one-obtuse class.
GeodesicSimplex sample_one_obtuse_simplex(Rng& rng, double radius = 3.0);

// Proper orthochronous Lorentz transform: rotation * boost * rotation.
Eigen::MatrixXd random_lorentz(Rng& rng, int n, double max_rapidity = 1.5);

GeodesicSimplex apply_lorentz(const Eigen::MatrixXd& L, const GeodesicSimplex& s);

}  // namespace hypvol::hypgeom
