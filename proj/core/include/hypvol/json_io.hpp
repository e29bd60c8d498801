#pragma once

#include <stdexcept>
#include <string>

#include "hypvol/audit.hpp"
#include "hypvol/bounds.hpp"
#include "hypvol/chain.hpp"
#include "hypvol/geodesic_simplex.hpp"
#include "hypvol/pseudomanifold.hpp"
#include "hypvol/verify.hpp"

namespace hypvol::io {

/// Raised on unparseable or schema-violating input (CLI exit code 2);
/// domain errors from the operations keep their own types (exit code 1).
struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Round to 12 significant digits; all emitted numbers pass through this.
double round12(double v);

// { "n": 3, "vertices": [[x0,...,xn], ...], "kinds": ["finite"|"ideal", ...] }
hypgeom::GeodesicSimplex parse_simplex(const std::string& text);

// { "n": 3, "simplices": 2, "pairings": [{"a":[0,0],"b":[1,0],"perm":[0,1,2]}] }
pseudo::Pseudomanifold parse_pseudomanifold(const std::string& text);

// { "n": 3, "terms": [{"sign": 1, "faces": [...], "vertices": [[...], ...]}] }
// Vertex kind is inferred from the Minkowski norm.
pseudo::IntegralChain parse_chain(const std::string& text);

std::string bound_report_json(const bounds::BoundReport& r);
std::string audit_report_json(const pseudo::CycleAuditReport& r);
std::string pseudo_stats_json(const pseudo::Pseudomanifold& p);
std::string verify_report_json(const std::vector<verify::CheckResult>& results);

// CSV with columns g, vol_delta_g, vol, sv_boundary, jungreis, thmB, bfp, best.
std::string census_csv(int g_min, int g_max, double tol);
std::string census_json(int g_min, int g_max, double tol);

}  // namespace hypvol::io
