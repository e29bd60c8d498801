#include "hypvol/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "hypvol/angle.hpp"
#include "hypvol/specfun.hpp"

namespace hypvol::bounds {

namespace {

double require_sv(const ManifoldData& m, const char* who) {
  if (!m.sv_boundary) throw std::domain_error(std::string(who) + ": missing sv_boundary");
  return *m.sv_boundary;
}

double trunc_integrand(double t) {
  if (t <= 0.0) return 0.0;  // arccosh(1) at the endpoint
  const double c = std::cos(t);
  const double ratio = c / (2.0 * c - 1.0);
  return std::acosh(std::max(1.0, ratio));
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = trunc_integrand(lm), frm = trunc_integrand(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth > 60 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double integrate_trunc(double upper, double tol) {
  const double fa = trunc_integrand(0.0);
  const double fb = trunc_integrand(upper);
  const double fm = trunc_integrand(0.5 * upper);
  const double whole = upper / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(0.0, upper, fa, fm, fb, whole, tol, 0);
}

}  // namespace

ManifoldData ManifoldData::from_genus(int g, double vol) {
  if (g < 2) throw std::domain_error("ManifoldData::from_genus: genus must be >= 2");
  ManifoldData m;
  m.n = 3;
  m.vol = vol;
  m.sv_boundary = 4.0 * (g - 1);
  m.genus = g;
  return m;
}

double surface_simplicial_volume(long long chi) {
  return std::max(0.0, -2.0 * static_cast<double>(chi));
}

double jungreis_bound(const ManifoldData& m, double tol) {
  if (m.n < 3) throw std::domain_error("jungreis_bound: needs n >= 3");
  if (!(m.vol > 0)) throw std::domain_error("jungreis_bound: vol must be positive");
  return m.vol / specfun::v_n(m.n, tol);
}

double thm_a_bound(const ManifoldData& m, double eps_n, double tol) {
  if (m.n < 4)
    throw std::domain_error("thm_a_bound: defined only for n >= 4");
  if (!(m.vol > 0)) throw std::domain_error("thm_a_bound: vol must be positive");
  if (!m.vol_boundary || !(*m.vol_boundary > 0))
    throw std::domain_error("thm_a_bound: missing boundary volume");
  if (!(eps_n > 0) || !(eps_n < 1))
    throw std::domain_error("thm_a_bound: eps_n must lie in (0,1)");
  const double vn = specfun::v_n(m.n, tol);
  const double vn1 = specfun::v_n(m.n - 1, tol);
  return m.vol * (1.0 / vn + eps_n * *m.vol_boundary / ((m.n + 1) * vn1 * m.vol));
}

double thm_b_bound(const ManifoldData& m, double tol) {
  if (m.n != 3) throw std::domain_error("thm_b_bound: defined for n = 3");
  if (!(m.vol > 0)) throw std::domain_error("thm_b_bound: vol must be positive");
  const double sv = require_sv(m, "thm_b_bound");
  const double v3 = specfun::v_n(3, tol);
  const double g = specfun::catalan(tol);
  const double jung = m.vol / v3;
  if (1.75 * sv <= jung) return jung;
  return jung + (v3 - g) / (2.0 * (3.0 * v3 - 2.0 * g)) * (7.0 * sv - 4.0 * jung);
}

double bfp_bound(const ManifoldData& m) { return 1.25 * require_sv(m, "bfp_bound"); }

double truncated_volume(int g, double tol) {
  if (g < 2) throw std::domain_error("truncated_volume: g must be >= 2");
  if (!(tol > 0)) throw std::domain_error("truncated_volume: tol must be positive");
  const double cat = specfun::catalan(std::min(tol, 1e-10));
  const double eight_l = 8.0 * specfun::lobachevsky(kPi / 4.0, 1e-12);
  if (std::abs(eight_l - 4.0 * cat) > 1e-9)
    throw std::logic_error("truncated_volume: 8 L(pi/4) != 4G self-check failed");
  const double upper = kPi / (3.0 * g);
  return 4.0 * cat - 3.0 * integrate_trunc(upper, tol / 6.0);
}

BoundReport bound_report(const ManifoldData& m, std::optional<double> eps_n, double tol) {
  BoundReport r;
  r.n = m.n;
  r.jungreis = jungreis_bound(m, tol);
  r.best_name = "jungreis";
  r.best_value = r.jungreis;
  auto offer = [&](const char* name, double value) {
    if (value > r.best_value) {
      r.best_value = value;
      r.best_name = name;
    }
  };
  if (m.n >= 4 && m.vol_boundary && eps_n) {
    r.thm_a = thm_a_bound(m, *eps_n, tol);
    offer("thmA", *r.thm_a);
  }
  if (m.n == 3 && m.sv_boundary) {
    r.thm_b = thm_b_bound(m, tol);
    offer("thmB", *r.thm_b);
  }
  if (m.sv_boundary) {
    r.bfp = bfp_bound(m);
    offer("bfp", *r.bfp);
  }
  return r;
}

CensusRow census(int g, double tol) {
  if (g < 2) throw std::domain_error("census: g must be >= 2");
  CensusRow row;
  row.g = g;
  row.vol_delta_g = truncated_volume(g, tol / (2.0 * g));
  row.vol = g * row.vol_delta_g;
  row.sv_boundary = 4.0 * (g - 1);
  row.report = bound_report(ManifoldData::from_genus(g, row.vol), std::nullopt, tol);

  const double v3 = specfun::v_n(3, tol);
  const double cat = specfun::catalan(tol);
  const double f = 1.0 - 1.0 / g;
  row.below_4g = row.vol_delta_g < 4.0 * cat;
  if (g >= 5) {
    row.ineq_v3_4g = f * (v3 + 4.0 * cat) > row.vol_delta_g;
    row.ineq_7v3 = 7.0 * f * v3 > row.vol_delta_g;
  }
  return row;
}

}  // namespace hypvol::bounds
