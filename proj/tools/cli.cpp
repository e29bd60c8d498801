#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypvol/angles.hpp"
#include "hypvol/audit.hpp"
#include "hypvol/bounds.hpp"
#include "hypvol/json_io.hpp"
#include "hypvol/quadrature.hpp"
#include "hypvol/specfun.hpp"
#include "hypvol/verify.hpp"

namespace hypvol::cli {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double default_tol(double fallback) {
  if (const char* env = std::getenv("HYPVOL_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return fallback;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty()) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw io::MalformedInput("cannot open input file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

const char* kUsage =
    "usage: hypvol <subcommand> [options]\n"
    "subcommands:\n"
    "  specfun   --lobachevsky <theta> | --catalan | --vn <n>  [--tol t]\n"
    "  tet       [--input file] --volume --angles --classify [--tol t]\n"
    "  pseudo    [--input file]\n"
    "  chain     [--input file] [--d D --vol V --sv-boundary B --eps-small E] [--tol t]\n"
    "  bounds    --vol V --sv-boundary B [--n N] [--vol-boundary VB] [--eps-n E]\n"
    "  census    --g-min A --g-max B [--format csv|json] [--tol t]\n"
    "  verify    [--profile quick|full] [--seed S] [--format plain|json]\n";

int run_specfun(CLI::App& cmd, std::ostream& out) {
  auto theta = cmd.get_option("--lobachevsky");
  auto want_catalan = cmd.get_option("--catalan");
  auto vn = cmd.get_option("--vn");
  const double tol = cmd.get_option("--tol")->as<double>();
  if (theta->count()) out << fmt12(specfun::lobachevsky(theta->as<double>(), tol)) << '\n';
  if (want_catalan->count()) out << fmt12(specfun::catalan(tol)) << '\n';
  if (vn->count()) out << fmt12(specfun::v_n(vn->as<int>(), tol)) << '\n';
  if (!theta->count() && !want_catalan->count() && !vn->count())
    throw io::MalformedInput("specfun: nothing requested");
  return 0;
}

int run_tet(CLI::App& cmd, std::ostream& out, std::istream& in) {
  const auto text = read_input(cmd.get_option("--input")->as<std::string>(), in);
  const auto simplex = io::parse_simplex(text);
  const double tol = cmd.get_option("--tol")->as<double>();
  json j;
  j["n"] = simplex.n;
  j["degenerate"] = simplex.degenerate;
  if (cmd.get_option("--volume")->count())
    j["volume"] = io::round12(hypgeom::signed_volume(simplex, tol));
  if (cmd.get_option("--angles")->count()) {
    json angles = json::array();
    for (const auto& [key, ang] : hypgeom::dihedral_angles(simplex)) {
      json a;
      a["opposite"] = {key.first, key.second};
      a["angle"] = io::round12(ang.radians);
      angles.push_back(a);
    }
    j["angles"] = angles;
  }
  if (cmd.get_option("--classify")->count()) {
    const auto cls = hypgeom::classify_obtuseness(simplex);
    const char* names[] = {"no_nonacute", "one_obtuse", "two_obtuse", "three_obtuse"};
    j["classification"] = names[static_cast<int>(cls)];
  }
  out << j.dump() << '\n';
  return 0;
}

int run_pseudo(CLI::App& cmd, std::ostream& out, std::istream& in) {
  const auto text = read_input(cmd.get_option("--input")->as<std::string>(), in);
  out << io::pseudo_stats_json(io::parse_pseudomanifold(text)) << '\n';
  return 0;
}

int run_chain(CLI::App& cmd, std::ostream& out, std::istream& in) {
  const auto text = read_input(cmd.get_option("--input")->as<std::string>(), in);
  const auto chain = io::parse_chain(text);
  const auto built = pseudo::chain_to_pseudomanifold(chain);
  json j;
  j["n"] = chain.n;
  j["terms"] = chain.terms.size();
  j["pairings"] = built.pm.pairings.size();
  j["unmatched_faces"] = built.unmatched_faces;
  const auto orient = pseudo::orientability(built.pm);
  j["orientable"] = bool(orient);

  auto d_opt = cmd.get_option("--d");
  if (d_opt->count()) {
    const int d = d_opt->as<int>();
    const double vol = cmd.get_option("--vol")->as<double>();
    const double sv = cmd.get_option("--sv-boundary")->as<double>();
    const double eps = cmd.get_option("--eps-small")->as<double>();
    const double tol = cmd.get_option("--tol")->as<double>();
    const auto report = pseudo::audit_geometric_cycle(chain, d, vol, sv, eps, tol);
    j["audit"] = json::parse(io::audit_report_json(report));
  }
  out << j.dump() << '\n';
  return 0;
}

int run_bounds(CLI::App& cmd, std::ostream& out) {
  bounds::ManifoldData m;
  m.n = cmd.get_option("--n")->as<int>();
  m.vol = cmd.get_option("--vol")->as<double>();
  if (cmd.get_option("--sv-boundary")->count())
    m.sv_boundary = cmd.get_option("--sv-boundary")->as<double>();
  if (cmd.get_option("--vol-boundary")->count())
    m.vol_boundary = cmd.get_option("--vol-boundary")->as<double>();
  std::optional<double> eps_n;
  if (cmd.get_option("--eps-n")->count()) eps_n = cmd.get_option("--eps-n")->as<double>();
  const double tol = cmd.get_option("--tol")->as<double>();
  out << io::bound_report_json(bounds::bound_report(m, eps_n, tol)) << '\n';
  return 0;
}

int run_census(CLI::App& cmd, std::ostream& out) {
  const int gmin = cmd.get_option("--g-min")->as<int>();
  const int gmax = cmd.get_option("--g-max")->as<int>();
  const std::string format = cmd.get_option("--format")->as<std::string>();
  const double tol = cmd.get_option("--tol")->as<double>();
  if (format == "csv")
    out << io::census_csv(gmin, gmax, tol);
  else if (format == "json")
    out << io::census_json(gmin, gmax, tol) << '\n';
  else
    throw io::MalformedInput("census: format must be csv or json");
  return 0;
}

int run_verify(CLI::App& cmd, std::ostream& out) {
  const std::string profile = cmd.get_option("--profile")->as<std::string>();
  if (profile != "quick" && profile != "full")
    throw io::MalformedInput("verify: profile must be quick or full");
  const auto seed = cmd.get_option("--seed")->as<std::uint64_t>();
  const auto results = verify::run_verify(profile == "full", seed);
  if (cmd.get_option("--format")->as<std::string>() == "json") {
    out << io::verify_report_json(results) << '\n';
  } else {
    bool all = true;
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << " deviation=" << fmt12(r.deviation);
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << '\n';
      all = all && r.pass;
    }
    out << (all ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << '\n';
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::istream& in) {
  if (args.empty()) {
    err << kUsage;
    return 2;
  }

  CLI::App app{"hyperbolic simplex volumes, pseudomanifold combinatorics, and simplicial-volume bounds"};
  app.require_subcommand(1);

  auto* sf = app.add_subcommand("specfun", "Lobachevsky function, Catalan's constant, v_n");
  sf->add_option("--lobachevsky", "angle theta in radians");
  sf->add_flag("--catalan");
  sf->add_option("--vn", "dimension n >= 2");
  sf->add_option("--tol", "absolute error bound")->default_val(default_tol(1e-9));

  auto* tet = app.add_subcommand("tet", "geodesic simplex volume / angles / classification");
  tet->add_option("--input", "JSON simplex file (default: stdin)")->default_val(std::string());
  tet->add_flag("--volume");
  tet->add_flag("--angles");
  tet->add_flag("--classify");
  tet->add_option("--tol")->default_val(default_tol(1e-6));

  auto* ps = app.add_subcommand("pseudo", "pseudomanifold statistics");
  ps->add_option("--input")->default_val(std::string());

  auto* ch = app.add_subcommand("chain", "chain -> pseudomanifold, geometric audit");
  ch->add_option("--input")->default_val(std::string());
  ch->add_option("--d", "multiplicity of the fundamental class");
  ch->add_option("--vol", "Riemannian volume of M")->default_val(0.0);
  ch->add_option("--sv-boundary", "||dM||")->default_val(0.0);
  ch->add_option("--eps-small", "smallness threshold")->default_val(0.1);
  ch->add_option("--tol")->default_val(default_tol(1e-6));

  auto* bd = app.add_subcommand("bounds", "simplicial-volume lower bounds");
  bd->add_option("--n")->default_val(3);
  bd->add_option("--vol")->required();
  bd->add_option("--sv-boundary");
  bd->add_option("--vol-boundary");
  bd->add_option("--eps-n");
  bd->add_option("--tol")->default_val(default_tol(1e-9));

  auto* cs = app.add_subcommand("census", "minimal-volume family with the bound comparison");
  cs->add_option("--g-min")->default_val(2);
  cs->add_option("--g-max")->default_val(10);
  cs->add_option("--format")->default_val(std::string("csv"));
  cs->add_option("--tol")->default_val(default_tol(1e-9));

  auto* vf = app.add_subcommand("verify", "run the module invariant suites");
  vf->add_option("--profile")->default_val(std::string("quick"));
  vf->add_option("--seed")->default_val(std::uint64_t{0});
  vf->add_option("--format")->default_val(std::string("plain"));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << kUsage;
    return 2;
  }

  try {
    if (sf->parsed()) return run_specfun(*sf, out);
    if (tet->parsed()) return run_tet(*tet, out, in);
    if (ps->parsed()) return run_pseudo(*ps, out, in);
    if (ch->parsed()) return run_chain(*ch, out, in);
    if (bd->parsed()) return run_bounds(*bd, out);
    if (cs->parsed()) return run_census(*cs, out);
    if (vf->parsed()) return run_verify(*vf, out);
  } catch (const io::MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << kUsage;
  return 2;
}

}  // namespace hypvol::cli
