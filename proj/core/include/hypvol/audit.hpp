#pragma once

#include <array>
#include <vector>

#include "hypvol/chain.hpp"
#include "hypvol/pseudomanifold.hpp"

namespace hypvol::pseudo {

/// Angle bookkeeping for one boundary (n-2)-face orbit. `members` are the
/// (term, face-vertex-subset) instances around the face, with multiplicity.
struct AngleSumEntry {
  std::vector<FaceInstance> members;
  bool all_positive = false;
  double angle_sum = 0.0;          // only meaningful when all_positive
  double deviation_from_pi = 0.0;  // |angle_sum - pi| when all_positive
};

struct CycleAuditReport {
  int d = 0;
  double total_algebraic_volume = 0.0;
  double expected_volume = 0.0;  // d * vol(M)
  std::vector<double> per_simplex_volumes;

  std::vector<AngleSumEntry> boundary_angle_sums;

  int n_small = 0;
  double n_small_required = 0.0;  // d * ||dM|| / (n+1)

  std::array<int, 5> t{};  // Omega partition counts (n = 3)
  int t_1n = 0;            // nonpositive simplices in Omega_1
  int t_11 = 0;            // 1-obtuse positive simplices in Omega_1
  int t_12 = 0;            // 2-obtuse positive simplices in Omega_1
  long long e_nice = 0;
  long long e_bad = 0;

  bool omega_ok = false;             // t_2 = t_3 = t_4 = 0
  bool angle_sums_ok = false;        // all-positive orbits sum to pi
  bool n_small_ok = false;           // N_small >= d ||dM|| / (n+1)
  bool e_bad_ok = false;             // 3 t_{1,n} + 2 t_{1,2} + t_{1,1} >= E_bad
  bool nice_bad_identity_ok = false; // E_nice + E_bad = (3/2) c(dP)
};

// Develops the chain's vertex positions into per-simplex algebraic volumes
// and checks the audited inequalities. Every term must carry positions;
// paired faces must agree on them within 1e-9.
CycleAuditReport audit_geometric_cycle(const IntegralChain& z, int d, double vol_m,
                                       double sv_boundary, double eps_small,
                                       double quad_tol = 1e-6, double angle_tol = 1e-6);

}  // namespace hypvol::pseudo
