#include "hypvol/specfun.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hypvol/geodesic_simplex.hpp"
#include "hypvol/quadrature.hpp"

namespace hypvol::specfun {

namespace {

void require_tol(double tol) {
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
}

// zeta(s) by Euler-Maclaurin with N leading terms and five correction terms.
double zeta_direct(double s) {
  constexpr int N = 24;
  double sum = 0.0;
  for (int k = 1; k < N; ++k) sum += std::pow(k, -s);
  const double ns = std::pow(N, -s);
  sum += ns * N / (s - 1.0) + 0.5 * ns;
  // Bernoulli numbers B2, B4, B6, B8, B10
  static const double b[5] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66};
  double rising = s;          // s(s+1)...(s+2j-2)
  double npow = ns / N;       // N^{-s-1}, then N^{-s-3}, ...
  double fact = 2.0;          // (2j)!
  for (int j = 1; j <= 5; ++j) {
    sum += b[j - 1] / fact * rising * npow;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    npow /= double(N) * double(N);
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum;
}

// zeta(2m) for m = 1.. ; beyond 2m = 54 the value is 1 in double precision.
double zeta_even(int m) {
  static const std::vector<double> table = [] {
    std::vector<double> t;
    t.reserve(28);
    for (int mm = 1; mm <= 28; ++mm) t.push_back(zeta_direct(2.0 * mm));
    return t;
  }();
  if (m <= 28) return table[m - 1];
  return 1.0;
}

// Power series on [0, pi/2].
double lob_series(double t) {
  if (t <= 0.0) return 0.0;
  double acc = t - t * std::log(2.0 * t);
  const double q = (t / kPi) * (t / kPi);
  double p = t * q;  // theta * (theta/pi)^{2m}
  for (int m = 1; m <= 200; ++m) {
    const double term = zeta_even(m) / (m * (2.0 * m + 1.0)) * p;
    acc += term;
    if (term < 1e-18 * (std::abs(acc) + 1.0)) break;
    p *= q;
  }
  return acc;
}

// Reduce mod pi into [0, pi).
double reduce_mod_pi(double theta) {
  double r = std::fmod(theta, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

}  // namespace

double lobachevsky(double theta, double tol) {
  if (!std::isfinite(theta)) throw std::domain_error("lobachevsky: non-finite angle");
  require_tol(tol);
  const double r = reduce_mod_pi(theta);
  if (r <= kPi / 2.0) return lob_series(r);
  return -lob_series(kPi - r);
}

double lobachevsky_sine_series(double theta, double tol) {
  if (!std::isfinite(theta)) throw std::domain_error("lobachevsky_sine_series: non-finite angle");
  require_tol(tol);
  const double r = reduce_mod_pi(theta);
  const double k_needed = 0.5 / tol;
  if (k_needed > 5e7)
    throw std::domain_error("lobachevsky_sine_series: tol below the practical range of the direct sum");
  const long K = static_cast<long>(std::ceil(k_needed));
  // sin(2k r) by rotation recurrence; Kahan-compensated accumulation.
  const double c2 = std::cos(2.0 * r), s2 = std::sin(2.0 * r);
  double ck = 1.0, sk = 0.0;
  double sum = 0.0, comp = 0.0;
  for (long k = 1; k <= K; ++k) {
    const double cn = ck * c2 - sk * s2;
    const double sn = sk * c2 + ck * s2;
    ck = cn;
    sk = sn;
    const double term = sk / (double(k) * double(k));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return 0.5 * sum;
}

double catalan(double tol) {
  require_tol(tol);
  const double tol_eff = std::max(tol, 1e-13);
  double sum = 0.0, comp = 0.0;
  double sign = 1.0;
  for (long k = 0;; ++k) {
    const double den = 2.0 * k + 1.0;
    const double term = sign / (den * den);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    sign = -sign;
    const double next = 1.0 / ((den + 2.0) * (den + 2.0));
    if (next <= tol_eff) break;
  }
  const double identity = lobachevsky(kPi / 2.0, tol) + 2.0 * lobachevsky(kPi / 4.0, tol);
  if (std::abs(sum - identity) > 2.0 * tol + 1e-12)
    throw std::logic_error("catalan: series value disagrees with L(pi/2)+2L(pi/4)");
  return sum;
}

double catalan_partial_sum(int terms) {
  if (terms < 0) throw std::domain_error("catalan_partial_sum: negative term count");
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 0; k < terms; ++k) {
    const double den = 2.0 * k + 1.0;
    sum += sign / (den * den);
    sign = -sign;
  }
  return sum;
}

double v_n(int n, double tol) {
  if (n < 2) throw std::domain_error("v_n: n must be >= 2");
  require_tol(tol);
  if (n == 2) return kPi;
  if (n == 3) return 3.0 * lobachevsky(kPi / 3.0, tol / 3.0);

  // n >= 4: quadrature over the regular ideal simplex. Cached per dimension,
  // keyed by the tightest tolerance computed so far.
  static std::mutex mu;
  static std::map<int, std::pair<double, double>> cache;  // n -> (tol, value)
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end() && it->second.first <= tol) return it->second.second;
  }
  const auto simplex = hypgeom::regular_ideal_simplex(n);
  const double value = std::abs(hypgeom::signed_volume(simplex, tol));
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end() || it->second.first > tol) cache[n] = {tol, value};
    return cache[n].second;
  }
}

SpecialConstants SpecialConstants::compute(double tol) {
  require_tol(tol);
  SpecialConstants c;
  c.v2 = kPi;
  c.v3 = v_n(3, tol);
  c.catalan_g = catalan(tol);
  c.tolerance = tol;
  return c;
}

}  // namespace hypvol::specfun
