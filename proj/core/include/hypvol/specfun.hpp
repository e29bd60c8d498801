#pragma once

#include "hypvol/angle.hpp"

namespace hypvol::specfun {

// L(theta) = -integral_0^theta log|2 sin u| du.
//
// Evaluated by pi-periodic reduction to [0, pi/2] followed by the power
// series  theta - theta*log(2*theta) + sum_m zeta(2m)/(m(2m+1)) * theta^(2m+1)/pi^(2m),
// whose term ratio is (theta/pi)^2 <= 1/4 after reduction. Absolute error is
// far below any tol > 0 representable in double precision.
double lobachevsky(double theta, double tol = 1e-9);

// Direct partial sum (1/2) sum_{k<=K} sin(2k theta)/k^2 with K from the
// 1/(2K) tail bound. Only practical for tol >= ~1e-7; kept as an
// algebraically independent route for self-checks.
double lobachevsky_sine_series(double theta, double tol);

// Catalan's constant from the alternating series 1 - 1/9 + 1/25 - ...,
// cross-checked internally against L(pi/2) + 2 L(pi/4).
double catalan(double tol = 1e-9);

// Partial sum of the same series, terms k = 0 .. terms-1. The alternating
// signs make consecutive partial sums bracket the limit.
double catalan_partial_sum(int terms);

// Volume of the regular ideal geodesic n-simplex. n=2 -> pi exactly,
// n=3 -> 3 L(pi/3), n>=4 -> Klein-model quadrature over an explicitly
// constructed regular ideal simplex (cached per dimension).
double v_n(int n, double tol = 1e-9);

struct SpecialConstants {
  double v2 = 0;
  double v3 = 0;
  double catalan_g = 0;
  double tolerance = 0;

  static SpecialConstants compute(double tol = 1e-9);
};

}  // namespace hypvol::specfun
