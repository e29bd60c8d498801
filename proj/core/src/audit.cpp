#include "hypvol/audit.hpp"

#include <cmath>
#include <stdexcept>

#include "hypvol/angles.hpp"
#include "hypvol/quadrature.hpp"
#include "hypvol/specfun.hpp"

namespace hypvol::pseudo {

namespace {

constexpr double kPositionTol = 1e-9;

using hypgeom::GeodesicSimplex;
using hypgeom::HPoint;

void check_paired_positions(const IntegralChain& z, const Pseudomanifold& pm) {
  for (const auto& pr : pm.pairings) {
    const auto& pa = *z.terms[pr.a.simplex].vertex_positions;
    const auto& pb = *z.terms[pr.b.simplex].vertex_positions;
    const auto va = facet_vertices(z.n, pr.a.face);
    const auto vb = facet_vertices(z.n, pr.b.face);
    for (int p = 0; p < z.n; ++p) {
      const auto& xa = pa[va[p]].x;
      const auto& xb = pb[vb[p]].x;
      if ((xa - xb).lpNorm<Eigen::Infinity>() > kPositionTol)
        throw std::invalid_argument("audit: paired faces carry incompatible vertex positions");
    }
  }
}

}  // namespace

CycleAuditReport audit_geometric_cycle(const IntegralChain& z, int d, double vol_m,
                                       double sv_boundary, double eps_small, double quad_tol,
                                       double angle_tol) {
  validate_chain(z);
  if (d <= 0) throw std::domain_error("audit: d must be a positive integer");
  if (!(quad_tol > 0)) throw std::domain_error("audit: quadrature tolerance must be positive");
  for (size_t i = 0; i < z.terms.size(); ++i)
    if (!z.terms[i].vertex_positions)
      throw std::invalid_argument("audit: term " + std::to_string(i) +
                                  " is missing vertex positions");

  const auto built = chain_to_pseudomanifold(z);
  check_paired_positions(z, built.pm);

  CycleAuditReport rep;
  rep.d = d;
  rep.expected_volume = d * vol_m;

  const int n = z.n;
  std::vector<GeodesicSimplex> simplices;
  simplices.reserve(z.terms.size());
  for (const auto& t : z.terms) simplices.push_back(hypgeom::straighten(*t.vertex_positions, n));

  for (size_t i = 0; i < z.terms.size(); ++i) {
    const double va = z.terms[i].sign * hypgeom::signed_volume(simplices[i], quad_tol);
    rep.per_simplex_volumes.push_back(va);
    rep.total_algebraic_volume += va;
  }

  // Small simplices: vol_a <= (1 - eps) v_n (signed, so negative ones count).
  const double vn = specfun::v_n(n, std::min(quad_tol, 1e-6));
  for (double va : rep.per_simplex_volumes)
    if (va <= (1.0 - eps_small) * vn) ++rep.n_small;
  rep.n_small_required = d * sv_boundary / double(n + 1);
  rep.n_small_ok = rep.n_small >= rep.n_small_required - 1e-12;

  // Boundary (n-2)-face orbits and their angle sums.
  rep.angle_sums_ok = true;
  for (const auto& fan : boundary_codim2_fans(built.pm)) {
    AngleSumEntry entry;
    entry.members = fan.instances;
    entry.all_positive = true;
    double sum = 0.0;
    for (const auto& inst : fan.instances) {
      if (rep.per_simplex_volumes[inst.simplex] <= 0.0) {
        entry.all_positive = false;
        break;
      }
      // Omitted vertex pair = complement of the (n-1)-subset.
      int omit[2], r = 0;
      std::vector<bool> in_e(n + 1, false);
      for (int v : inst.verts) in_e[v] = true;
      for (int v = 0; v <= n && r < 2; ++v)
        if (!in_e[v]) omit[r++] = v;
      sum += hypgeom::dihedral_angle(simplices[inst.simplex], omit[0], omit[1]).radians;
    }
    if (entry.all_positive) {
      entry.angle_sum = sum;
      entry.deviation_from_pi = std::abs(sum - kPi);
      if (entry.deviation_from_pi > angle_tol) rep.angle_sums_ok = false;
    }
    rep.boundary_angle_sums.push_back(std::move(entry));
  }

  if (n == 3) {
    const auto omega = omega_partition(built.pm);
    rep.t = omega.t;
    rep.omega_ok = omega.t[2] == 0 && omega.t[3] == 0 && omega.t[4] == 0;
    for (int s : omega.members[1]) {
      const double va = rep.per_simplex_volumes[s];
      if (va <= 0.0) {
        ++rep.t_1n;
        continue;
      }
      if (simplices[s].degenerate) continue;
      const auto cls = hypgeom::obtuseness_from_angles(hypgeom::dihedral_angles(simplices[s]));
      if (cls == hypgeom::ObtusenessClass::one_obtuse) ++rep.t_11;
      if (cls == hypgeom::ObtusenessClass::two_obtuse ||
          cls == hypgeom::ObtusenessClass::three_obtuse)
        ++rep.t_12;
    }
    const auto nb = nice_bad_edges(built.pm);
    rep.e_nice = nb.nice;
    rep.e_bad = nb.bad;
    rep.e_bad_ok = 3 * rep.t_1n + 2 * rep.t_12 + rep.t_11 >= rep.e_bad;
    const long long c = static_cast<long long>(boundary_faces(built.pm).size());
    rep.nice_bad_identity_ok = 2 * (rep.e_nice + rep.e_bad) == 3 * c;
  } else {
    rep.omega_ok = true;
    rep.e_bad_ok = true;
    rep.nice_bad_identity_ok = true;
  }

  return rep;
}

}  // namespace hypvol::pseudo
