#pragma once

#include <optional>
#include <string>

namespace hypvol::bounds {

struct ManifoldData {
  int n = 3;
  double vol = 0.0;                        // Riemannian volume
  std::optional<double> vol_boundary;      // (n-1)-volume of the boundary
  std::optional<double> sv_boundary;       // ||dM||
  std::optional<int> genus;                // n = 3, connected boundary

  // n = 3 with genus g >= 2: ||dM|| = 4(g-1), chi(dM) = 2-2g.
  static ManifoldData from_genus(int g, double vol);
};

struct BoundReport {
  int n = 3;
  double jungreis = 0.0;
  bool jungreis_strict = true;      // the bound is strict
  std::optional<double> thm_a;      // conditional: only with caller-supplied eps_n
  std::optional<double> thm_b;
  std::optional<double> bfp;
  std::string best_name;
  double best_value = 0.0;
};

// ||S|| = max(0, -2 chi).
double surface_simplicial_volume(long long chi);

// vol / v_n (strict lower bound).
double jungreis_bound(const ManifoldData& m, double tol = 1e-9);

// vol * (1/v_n + eps_n vol(dM) / ((n+1) v_{n-1} vol)); n >= 4, eps_n in (0,1).
double thm_a_bound(const ManifoldData& m, double eps_n, double tol = 1e-9);

// vol/v3 + (v3-G)/(2(3v3-2G)) (7||dM|| - 4 vol/v3), collapsing to vol/v3
// when (7/4)||dM|| <= vol/v3. Always >= the Jungreis value.
double thm_b_bound(const ManifoldData& m, double tol = 1e-9);

// (5/4) ||dM||.
double bfp_bound(const ManifoldData& m);

// Volume of the regular truncated tetrahedron of dihedral angle pi/(3g):
// 4G - 3 * integral_0^{pi/3g} arccosh(cos t / (2 cos t - 1)) dt.
double truncated_volume(int g, double tol = 1e-9);

BoundReport bound_report(const ManifoldData& m, std::optional<double> eps_n = std::nullopt,
                         double tol = 1e-9);

struct CensusRow {
  int g = 0;
  double vol_delta_g = 0.0;
  double vol = 0.0;
  double sv_boundary = 0.0;
  BoundReport report;
  bool ineq_v3_4g = false;   // (1-1/g)(v3+4G) > vol(Delta_g)   (checked for g >= 5)
  bool ineq_7v3 = false;     // 7(1-1/g) v3   > vol(Delta_g)   (checked for g >= 5)
  bool below_4g = false;     // vol(Delta_g) < 4G
};

// The minimal-volume family with chi(dM) = 2-2g: vol = g * vol(Delta_g),
// ||dM|| = 4(g-1), plus all applicable bounds and the sharpest one.
CensusRow census(int g, double tol = 1e-9);

}  // namespace hypvol::bounds
