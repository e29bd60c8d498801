#include "hypvol/verify.hpp"

#include <algorithm>
#include <cmath>

#include "hypvol/angles.hpp"
#include "hypvol/audit.hpp"
#include "hypvol/bounds.hpp"
#include "hypvol/generators.hpp"
#include "hypvol/quadrature.hpp"
#include "hypvol/rationalize.hpp"
#include "hypvol/sampling.hpp"
#include "hypvol/specfun.hpp"

namespace hypvol::verify {

namespace {

using hypgeom::GeodesicSimplex;
using hypgeom::Rng;

struct Suite {
  std::vector<CheckResult> results;

  void add(const std::string& name, double deviation, double threshold,
           const std::string& detail = "") {
    results.push_back({name, deviation <= threshold, deviation, detail});
  }
  void add_flag(const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, pass ? 0.0 : 1.0, detail});
  }
};

void specfun_checks(Suite& s, Rng& rng, int samples) {
  using namespace specfun;
  const double tol = 1e-9;
  double odd = 0, period = 0, distrib = 0, maximal = -1e300;
  const double l_max = lobachevsky(kPi / 3.0, tol);
  for (int i = 0; i < samples; ++i) {
    const double theta = rng.uniform(-kPi, kPi);
    odd = std::max(odd, std::abs(lobachevsky(-theta, tol) + lobachevsky(theta, tol)));
    period = std::max(period, std::abs(lobachevsky(theta + kPi, tol) - lobachevsky(theta, tol)));
    distrib = std::max(distrib,
                       std::abs(0.5 * lobachevsky(2.0 * theta, tol) - lobachevsky(theta, tol) -
                                lobachevsky(theta + kPi / 2.0, tol)));
    maximal = std::max(maximal, lobachevsky(theta, tol) - l_max);
  }
  s.add("specfun.oddness", odd, 2.0 * tol);
  s.add("specfun.pi_periodicity", period, 2.0 * tol);
  s.add("specfun.distribution_identity", distrib, 3.0 * tol);
  s.add("specfun.maximality_at_pi_over_3", std::max(0.0, maximal), tol);

  const double g = catalan(tol);
  const double v3 = v_n(3, tol);
  s.add("specfun.catalan_lobachevsky_identity",
        std::abs(g - lobachevsky(kPi / 2.0, tol) - 2.0 * lobachevsky(kPi / 4.0, tol)), 2.0 * tol);
  s.add("specfun.constants_2(v3-G)<=v3/2", std::max(0.0, 2.0 * (v3 - g) - v3 / 2.0), tol);
  s.add("specfun.constants_3(v3-G)<=v3", std::max(0.0, 3.0 * (v3 - g) - v3), tol);
}

void hypgeom_checks(Suite& s, Rng& rng, bool full) {
  using namespace hypgeom;
  const double qtol = full ? 1e-5 : 1e-4;
  const double v3 = specfun::v_n(3, 1e-9);
  const double g = specfun::catalan(1e-9);

  // Isometry invariance.
  {
    const int count = full ? 100 : 12;
    double worst = 0;
    for (int i = 0; i < count; ++i) {
      const auto simplex = sample_compact_simplex(rng, 3, 2.0);
      const auto moved = apply_lorentz(random_lorentz(rng, 3), simplex);
      worst = std::max(worst, std::abs(signed_volume(simplex, qtol) - signed_volume(moved, qtol)));
    }
    s.add("hypgeom.lorentz_invariance", worst, 2.0 * qtol);
  }

  // Subdivision additivity.
  {
    const auto simplex = sample_compact_simplex(rng, 3, 2.0);
    const auto cells = barycentric_subdivision(simplex);
    double sum = 0;
    for (const auto& c : cells) sum += std::abs(signed_volume(c, qtol / cells.size()));
    s.add("hypgeom.subdivision_additivity",
          std::abs(sum - std::abs(signed_volume(simplex, qtol))), 3.0 * qtol);
  }

  // Volume ceiling and Milnor consistency on ideal simplices.
  {
    const int count = full ? 100 : 10;
    double ceiling = 0, milnor = 0;
    for (int i = 0; i < count; ++i) {
      const auto simplex = sample_ideal_simplex(rng, 3);
      const double vol = std::abs(signed_volume(simplex, qtol));
      ceiling = std::max(ceiling, vol - v3);
      const auto ang = ideal_tetra_angles(simplex);
      milnor = std::max(milnor, std::abs(vol - ideal_tetra_volume(ang[0], ang[1], ang[2])));
    }
    s.add("hypgeom.volume_ceiling", std::max(0.0, ceiling), qtol);
    s.add("hypgeom.milnor_consistency", milnor, 1e-3);
  }

  // Obtuse volume bounds.
  {
    const int count = full ? 1000 : 50;
    double two_excess = 0, one_excess = 0;
    for (int i = 0; i < count; ++i) {
      const auto two = sample_two_obtuse_simplex(rng);
      two_excess = std::max(two_excess, std::abs(signed_volume(two, qtol)) - v3 / 2.0);
      const auto one = sample_one_obtuse_simplex(rng);
      one_excess = std::max(one_excess, std::abs(signed_volume(one, qtol)) - g);
    }
    s.add("hypgeom.two_obtuse_volume<=v3/2", std::max(0.0, two_excess), 1e-3);
    s.add("hypgeom.one_obtuse_volume<=G", std::max(0.0, one_excess), 1e-3);
  }

  // No 3-obtuse simplices.
  {
    const int count = full ? 10000 : 500;
    int three = 0;
    for (int i = 0; i < count; ++i)
      if (classify_obtuseness(sample_compact_simplex(rng, 3, 3.0)) ==
          ObtusenessClass::three_obtuse)
        ++three;
    s.add_flag("hypgeom.no_three_obtuse", three == 0,
               three == 0 ? "" : std::to_string(three) + " hits");
  }
}

void pseudo_checks(Suite& s, Rng& rng, bool full) {
  using namespace pseudo;
  const int count = full ? 100 : 20;

  bool ddp = true, identity = true, orientable_boundary = true, surface_ok = true;
  for (int i = 0; i < count; ++i) {
    const auto p = random_pseudomanifold(rng, 3, 6);
    const auto b = boundary(p);
    if (boundary(b.pm).pm.simplex_count != 0) ddp = false;
    if (!boundary_face_count_identity(p).equal) identity = false;
    const auto nb = nice_bad_edges(p);
    const long long c = static_cast<long long>(boundary_faces(p).size());
    if (2 * (nb.nice + nb.bad) != 3 * c) identity = false;
    if (orientability(p)) {
      if (b.pm.simplex_count > 0 && !orientability(b.pm)) orientable_boundary = false;
      if (b.pm.simplex_count > 0) {
        for (long long chi : surface_component_chis(b.pm))
          if (chi > 2 || chi % 2 != 0) surface_ok = false;
      }
    }
  }
  s.add_flag("pseudo.boundary_of_boundary_empty", ddp);
  s.add_flag("pseudo.codim2_face_count_identity", identity);
  s.add_flag("pseudo.orientable_boundary_of_orientable", orientable_boundary);
  s.add_flag("pseudo.closed_surface_check", surface_ok);

  bool chain_orientable = true;
  bool norm_match = true;
  for (int i = 0; i < count; ++i) {
    const auto z = random_chain(rng, 3, 10, 12);
    const auto built = chain_to_pseudomanifold(z);
    const auto orient = orientability(built.pm);
    if (!orient) {
      chain_orientable = false;
    } else {
      // The chain's own signs must satisfy every pairing constraint.
      for (const auto& pr : built.pm.pairings) {
        const int rel = -((pr.a.face + pr.b.face) % 2 == 0 ? 1 : -1);
        if (built.signs[pr.a.simplex] * built.signs[pr.b.simplex] != rel)
          chain_orientable = false;
      }
    }
    // Independent boundary-norm count.
    std::map<std::string, std::map<std::string, int>> dummy;
    std::map<std::string, int> coef;
    int boundary_marked = 0;
    for (const auto& t : z.terms)
      for (int j = 0; j <= z.n; ++j) {
        if (is_boundary_key(t.face_keys[j])) {
          ++boundary_marked;
          continue;
        }
        coef[t.face_keys[j]] += (j % 2 == 0 ? 1 : -1) * t.sign;
      }
    int norm = boundary_marked;
    for (const auto& [key, c] : coef) norm += std::abs(c);
    if (norm != built.unmatched_faces) norm_match = false;
  }
  s.add_flag("pseudo.chain_pseudomanifold_orientable_under_eps", chain_orientable);
  s.add_flag("pseudo.unmatched_equals_boundary_norm", norm_match);

  bool rational_ok = true;
  double rational_dev = 0;
  for (int i = 0; i < (full ? 20 : 5); ++i) {
    const auto z = random_real_cycle(rng, 3, 2 + rng.uniform_int(0, 2));
    const auto out = rationalize_cycle(z, {.eps = 1e-6});
    if (!in_cycle_space(cancellation_system(z), out.coeffs)) rational_ok = false;
    for (size_t j = 0; j < z.terms.size(); ++j)
      rational_dev = std::max(rational_dev,
                              std::abs(out.chain.terms[j].coeff - z.terms[j].coeff));
  }
  s.add_flag("pseudo.rationalize_exact_cycle_membership", rational_ok);
  s.add("pseudo.rationalize_componentwise_eps", rational_dev, 1e-6);
}

void bounds_checks(Suite& s, bool full) {
  using namespace bounds;
  const int gmax = full ? 100 : 30;
  const double tol = 1e-9;
  const double g4 = 4.0 * specfun::catalan(tol);

  bool monotone = true, under_4g = true, switchover = true, ineqs = true, thmb_ge = true;
  double prev = 0;
  for (int g = 2; g <= gmax; ++g) {
    const auto row = census(g, tol);
    if (g > 2 && row.vol_delta_g <= prev) monotone = false;
    prev = row.vol_delta_g;
    if (!(row.vol_delta_g < g4)) under_4g = false;
    const bool expect_bfp = g >= 5;
    if (expect_bfp != (row.report.best_name == "bfp")) switchover = false;
    if (!expect_bfp && row.report.best_name != "thmB") switchover = false;
    if (g >= 5 && !(row.ineq_v3_4g && row.ineq_7v3)) ineqs = false;
    if (row.report.thm_b && *row.report.thm_b < row.report.jungreis - 1e-12) thmb_ge = false;
  }
  s.add_flag("bounds.truncated_volume_monotone", monotone);
  s.add_flag("bounds.truncated_volume_below_4G", under_4g);
  s.add_flag("bounds.best_bound_switchover_at_g5", switchover);
  s.add_flag("bounds.census_inequalities_g>=5", ineqs);
  s.add_flag("bounds.thmB_dominates_jungreis", thmb_ge);

  // Slope of the formula branch in sv.
  {
    const double v3 = specfun::v_n(3, tol);
    const double cat = specfun::catalan(tol);
    const double want = 7.0 * (v3 - cat) / (2.0 * (3.0 * v3 - 2.0 * cat));
    ManifoldData m;
    m.n = 3;
    m.vol = 3.0;
    m.sv_boundary = 4.0;
    const double b1 = thm_b_bound(m, tol);
    m.sv_boundary = 5.0;
    const double b2 = thm_b_bound(m, tol);
    s.add("bounds.thmB_slope_in_sv", std::abs((b2 - b1) - want), 1e-12);
  }
}

}  // namespace

std::vector<CheckResult> run_verify(bool full, std::uint64_t seed) {
  Suite s;
  hypgeom::Rng rng(seed);
  specfun_checks(s, rng, 1000);
  hypgeom_checks(s, rng, full);
  pseudo_checks(s, rng, full);
  bounds_checks(s, full);
  return s.results;
}

}  // namespace hypvol::verify
