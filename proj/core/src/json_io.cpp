#include "hypvol/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace hypvol::io {

using nlohmann::json;

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw MalformedInput("invalid JSON");
  return j;
}

double num12(double v) { return round12(v); }

json fan_members_json(const pseudo::AngleSumEntry& e) {
  json members = json::array();
  for (const auto& inst : e.members) {
    json m;
    m["term"] = inst.simplex;
    m["verts"] = inst.verts;
    members.push_back(m);
  }
  return members;
}

}  // namespace

hypgeom::GeodesicSimplex parse_simplex(const std::string& text) {
  const json j = parse_text(text);
  try {
    const int n = j.at("n").get<int>();
    const auto& verts = j.at("vertices");
    const auto& kinds = j.at("kinds");
    if (!verts.is_array() || !kinds.is_array() || verts.size() != kinds.size())
      throw MalformedInput("simplex: vertices/kinds must be arrays of equal length");
    std::vector<hypgeom::HPoint> points;
    for (size_t i = 0; i < verts.size(); ++i) {
      Eigen::VectorXd x(n + 1);
      const auto& row = verts[i];
      if (!row.is_array() || static_cast<int>(row.size()) != n + 1)
        throw MalformedInput("simplex: each vertex needs n+1 Minkowski coordinates");
      for (int c = 0; c <= n; ++c) x[c] = row[c].get<double>();
      const std::string kind = kinds[i].get<std::string>();
      if (kind == "finite")
        points.push_back(hypgeom::HPoint::finite_point(std::move(x)));
      else if (kind == "ideal")
        points.push_back(hypgeom::HPoint::ideal_point(std::move(x)));
      else
        throw MalformedInput("simplex: kind must be 'finite' or 'ideal'");
    }
    return hypgeom::straighten(points, n);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("simplex: ") + e.what());
  }
}

pseudo::Pseudomanifold parse_pseudomanifold(const std::string& text) {
  const json j = parse_text(text);
  try {
    pseudo::Pseudomanifold p;
    p.n = j.at("n").get<int>();
    p.simplex_count = j.at("simplices").get<int>();
    if (j.contains("pairings")) {
      for (const auto& pr : j.at("pairings")) {
        pseudo::Pairing pairing;
        pairing.a = {pr.at("a").at(0).get<int>(), pr.at("a").at(1).get<int>()};
        pairing.b = {pr.at("b").at(0).get<int>(), pr.at("b").at(1).get<int>()};
        if (pr.contains("perm")) pairing.perm = pr.at("perm").get<std::vector<int>>();
        p.pairings.push_back(std::move(pairing));
      }
    }
    const auto violations = pseudo::validate(p);
    if (!violations.empty()) throw MalformedInput("pseudomanifold: " + violations.front());
    return p;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("pseudomanifold: ") + e.what());
  }
}

pseudo::IntegralChain parse_chain(const std::string& text) {
  const json j = parse_text(text);
  try {
    pseudo::IntegralChain z;
    z.n = j.at("n").get<int>();
    for (const auto& tj : j.at("terms")) {
      pseudo::ChainTerm t;
      t.sign = tj.at("sign").get<int>();
      t.face_keys = tj.at("faces").get<std::vector<std::string>>();
      if (tj.contains("vertices")) {
        std::vector<hypgeom::HPoint> pts;
        for (const auto& row : tj.at("vertices")) {
          Eigen::VectorXd x(z.n + 1);
          if (!row.is_array() || static_cast<int>(row.size()) != z.n + 1)
            throw MalformedInput("chain: each vertex needs n+1 Minkowski coordinates");
          for (int c = 0; c <= z.n; ++c) x[c] = row[c].get<double>();
          pts.push_back(hypgeom::HPoint::from_minkowski_auto(std::move(x)));
        }
        t.vertex_positions = std::move(pts);
      }
      z.terms.push_back(std::move(t));
    }
    pseudo::validate_chain(z);
    return z;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("chain: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string("chain: ") + e.what());
  }
}

std::string bound_report_json(const bounds::BoundReport& r) {
  json j;
  j["n"] = r.n;
  j["jungreis"] = num12(r.jungreis);
  j["jungreis_strict"] = r.jungreis_strict;
  j["thmA"] = r.thm_a ? json(num12(*r.thm_a)) : json(nullptr);
  j["thmA_conditional"] = true;
  j["thmB"] = r.thm_b ? json(num12(*r.thm_b)) : json(nullptr);
  j["bfp"] = r.bfp ? json(num12(*r.bfp)) : json(nullptr);
  j["best"] = {{"name", r.best_name}, {"value", num12(r.best_value)}};
  return j.dump();
}

std::string audit_report_json(const pseudo::CycleAuditReport& r) {
  json j;
  j["d"] = r.d;
  j["total_algebraic_volume"] = num12(r.total_algebraic_volume);
  j["expected_volume"] = num12(r.expected_volume);
  json vols = json::array();
  for (double v : r.per_simplex_volumes) vols.push_back(num12(v));
  j["per_simplex_volumes"] = vols;
  json sums = json::array();
  for (const auto& e : r.boundary_angle_sums) {
    json s;
    s["members"] = fan_members_json(e);
    s["all_positive"] = e.all_positive;
    if (e.all_positive) {
      s["angle_sum"] = num12(e.angle_sum);
      s["deviation_from_pi"] = num12(e.deviation_from_pi);
    }
    sums.push_back(s);
  }
  j["boundary_angle_sums"] = sums;
  j["n_small"] = r.n_small;
  j["n_small_required"] = num12(r.n_small_required);
  j["t"] = r.t;
  j["t_1n"] = r.t_1n;
  j["t_11"] = r.t_11;
  j["t_12"] = r.t_12;
  j["e_nice"] = r.e_nice;
  j["e_bad"] = r.e_bad;
  j["flags"] = {{"omega_ok", r.omega_ok},
                {"angle_sums_ok", r.angle_sums_ok},
                {"n_small_ok", r.n_small_ok},
                {"e_bad_ok", r.e_bad_ok},
                {"nice_bad_identity_ok", r.nice_bad_identity_ok}};
  return j.dump();
}

std::string pseudo_stats_json(const pseudo::Pseudomanifold& p) {
  json j;
  j["n"] = p.n;
  j["simplices"] = p.simplex_count;
  j["pairings"] = p.pairings.size();
  const auto violations = pseudo::validate(p);
  j["violations"] = violations;
  if (!violations.empty()) return j.dump();

  const auto orient = pseudo::orientability(p);
  j["orientable"] = bool(orient);
  if (orient) j["orientation"] = *orient;
  j["euler_characteristic"] = pseudo::euler_characteristic(p);

  const auto b = pseudo::boundary(p);
  j["boundary"] = {{"simplices", b.pm.simplex_count},
                   {"pairings", b.pm.pairings.size()}};
  if (b.pm.simplex_count > 0 && p.n == 3) {
    j["boundary"]["euler_characteristic"] = pseudo::euler_characteristic(b.pm);
    j["boundary"]["component_chis"] = pseudo::surface_component_chis(b.pm);
  }

  if (p.n == 3) {
    const auto omega = pseudo::omega_partition(p);
    j["omega_t"] = omega.t;
    const auto nb = pseudo::nice_bad_edges(p);
    j["e_nice"] = nb.nice;
    j["e_bad"] = nb.bad;
    j["nice_bad_identity_ok"] =
        2 * (nb.nice + nb.bad) == 3 * static_cast<long long>(b.pm.simplex_count);
  }
  const auto identity = pseudo::boundary_face_count_identity(p);
  j["codim2_identity"] = {{"orbits", identity.codim2_boundary_orbits},
                          {"n_half_c", num12(identity.n_half_c)},
                          {"equal", identity.equal}};
  return j.dump();
}

std::string verify_report_json(const std::vector<verify::CheckResult>& results) {
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["deviation"] = num12(r.deviation);
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(j);
    all = all && r.pass;
  }
  json out;
  out["checks"] = arr;
  out["all_pass"] = all;
  return out.dump();
}

namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string census_csv(int g_min, int g_max, double tol) {
  if (g_min < 2 || g_max < g_min) throw MalformedInput("census: need 2 <= g-min <= g-max");
  std::ostringstream out;
  out << "g,vol_delta_g,vol,sv_boundary,jungreis,thmB,bfp,best\n";
  for (int g = g_min; g <= g_max; ++g) {
    const auto row = bounds::census(g, tol);
    out << row.g << ',' << fmt12(row.vol_delta_g) << ',' << fmt12(row.vol) << ','
        << fmt12(row.sv_boundary) << ',' << fmt12(row.report.jungreis) << ','
        << fmt12(row.report.thm_b.value_or(0.0)) << ',' << fmt12(row.report.bfp.value_or(0.0))
        << ',' << row.report.best_name << '\n';
  }
  return out.str();
}

std::string census_json(int g_min, int g_max, double tol) {
  if (g_min < 2 || g_max < g_min) throw MalformedInput("census: need 2 <= g-min <= g-max");
  json arr = json::array();
  for (int g = g_min; g <= g_max; ++g) {
    const auto row = bounds::census(g, tol);
    json j;
    j["g"] = row.g;
    j["vol_delta_g"] = num12(row.vol_delta_g);
    j["vol"] = num12(row.vol);
    j["sv_boundary"] = num12(row.sv_boundary);
    j["jungreis"] = num12(row.report.jungreis);
    j["thmB"] = num12(row.report.thm_b.value_or(0.0));
    j["bfp"] = num12(row.report.bfp.value_or(0.0));
    j["best"] = row.report.best_name;
    if (row.g >= 5) {
      j["ineq_v3_4g"] = row.ineq_v3_4g;
      j["ineq_7v3"] = row.ineq_7v3;
    }
    j["below_4g"] = row.below_4g;
    arr.push_back(j);
  }
  return arr.dump();
}

}  // namespace hypvol::io
