#include "hypvol/quadrature.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace hypvol::hypgeom {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double euclidean_volume(const std::vector<Eigen::VectorXd>& v) {
  const int n = static_cast<int>(v.size()) - 1;
  Eigen::MatrixXd d(n, n);
  for (int i = 1; i <= n; ++i) d.col(i - 1) = v[i] - v[0];
  return std::abs(d.determinant()) / factorial(n);
}

// Adaptive integration of the Klein density over a simplex.
//
// Cells with one vertex on the sphere are rewritten through the cone map
// x = v0 + s(y - v0), where 1-|x|^2 = s a(y) - s^2 b(y) with
// a(y) = 2(1 - <v0,y>) > 0, followed by s = u^2. The transformed integrand
//   n! evol(cone) * 2 u^{n-2} (a - u^2 b)^{-(n+1)/2}
// is smooth on the prism [0,1] x base, so the singularity disappears and the
// ordinary two-level midpoint scheme applies everywhere. Cells with several
// sphere vertices are first split toward them until each piece has at most
// one. Refinement is worst-error-first through a deterministic queue.
class Engine {
 public:
  Engine(int n, QuadRule rule) : n_(n), exp_(0.5 * (n + 1)), rule_(rule) {
    if (rule_ == QuadRule::gauss) {
      gm5_ = gm_rule(n_, 2);
      gm3_ = gm_rule(n_, 1);
    }
  }

  double run(std::vector<Eigen::VectorXd> verts, double tol) {
    Cell root;
    root.v = std::move(verts);
    root.ideal.assign(root.v.size(), 0);
    for (size_t i = 0; i < root.v.size(); ++i) {
      if (root.v[i].squaredNorm() >= 1.0 - 1e-12) {
        root.v[i] /= root.v[i].norm();  // exactly onto the sphere
        root.ideal[i] = 1;
      }
    }
    root.evol = euclidean_volume(root.v);
    if (root.evol == 0.0) return 0.0;

    total_ = 0.0;
    err_sum_ = 0.0;
    add_cell(std::move(root), 0);

    const long max_pops = 8000000;
    for (long pops = 0; pops < max_pops && !heap_.empty(); ++pops) {
      if (err_sum_ <= 0.5 * tol) break;
      const HeapItem top = heap_.top();
      heap_.pop();
      Node node = std::move(nodes_[top.index]);
      free_slots_.push_back(top.index);
      total_ -= node.value;
      err_sum_ -= node.err;
      Cell a, b;
      bisect(node.cell, a, b);
      add_leaf(make_node(std::move(a)));
      add_leaf(make_node(std::move(b)));
    }
    return total_;
  }

 private:
  struct Cell {
    std::vector<Eigen::VectorXd> v;
    std::vector<char> ideal;  // sphere vertices (plain cells only)
    double evol = 0.0;        // volume of the integration domain of this cell
    int ctx = -1;             // >= 0: parameter-space cell of a cone context
  };

  struct CuspCtx {
    Eigen::VectorXd apex;
    std::vector<Eigen::VectorXd> base;
    double factor = 0.0;  // n! * evol of the cone cell
  };

  struct Node {
    double value = 0.0;
    double err = 0.0;
    Cell cell;
  };

  struct GmRule {
    std::vector<Eigen::VectorXd> bary;  // d+1 barycentric coordinates each
    std::vector<double> weight;         // normalized against volume 1/d!
  };

  // Grundmann-Moller simplex cubature of degree 2s+1: shells i = 0..s of
  // points (2k+1)/(d+2s+1-2i), |k| = s-i, with weights
  // (-1)^i 2^{-2s} (d+2s+1-2i)^{2s+1} / (i! (d+2s+1-i)!).
  static GmRule gm_rule(int d, int s) {
    GmRule rule;
    for (int i = 0; i <= s; ++i) {
      const int denom = d + 2 * s + 1 - 2 * i;
      double w = std::pow(2.0, -2 * s) * std::pow(double(denom), 2 * s + 1);
      w /= factorial(i) * factorial(d + 2 * s + 1 - i);
      if (i % 2 == 1) w = -w;
      std::vector<int> k(d + 1, 0);
      k[0] = s - i;
      for (;;) {
        Eigen::VectorXd b(d + 1);
        for (int j = 0; j <= d; ++j) b[j] = double(2 * k[j] + 1) / denom;
        rule.bary.push_back(std::move(b));
        rule.weight.push_back(w);
        // next composition of s-i into d+1 parts
        int j = 0;
        while (j < d && k[j] == 0) ++j;
        if (j == d) break;
        const int val = k[j];
        k[j] = 0;
        k[0] = val - 1;
        k[j + 1] += 1;
      }
    }
    return rule;
  }

  struct HeapItem {
    double err;
    long seq;
    size_t index;
    bool operator<(const HeapItem& o) const {
      if (err != o.err) return err < o.err;
      return seq > o.seq;
    }
  };

  double klein_density(const Eigen::VectorXd& x) const {
    double t = 1.0 - x.squaredNorm();
    if (t < 1e-18) t = 1e-18;
    return std::pow(t, -exp_);
  }

  // Parameter-space point q = (mu_1..mu_{n-1}, u).
  double cusp_density(const CuspCtx& c, const Eigen::VectorXd& q) const {
    const double u = q[n_ - 1];
    double mu0 = 1.0;
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n_);
    for (int i = 1; i < n_; ++i) {
      mu0 -= q[i - 1];
      y += q[i - 1] * c.base[i];
    }
    y += mu0 * c.base[0];
    const double a = 2.0 * (1.0 - c.apex.dot(y));
    const double b = (y - c.apex).squaredNorm();
    double t = a - u * u * b;
    if (t < 1e-18) t = 1e-18;
    const double upow = n_ == 2 ? 1.0 : std::pow(u, n_ - 2);
    return c.factor * 2.0 * upow * std::pow(t, -exp_);
  }

  double point_value(const Cell& cell, const Eigen::VectorXd& q) const {
    return cell.ctx < 0 ? klein_density(q) : cusp_density(ctxs_[cell.ctx], q);
  }

  double estimate(const Cell& c) const {
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n_);
    for (const auto& p : c.v) centroid += p;
    centroid /= double(c.v.size());
    if (rule_ != QuadRule::midpoint) return c.evol * point_value(c, centroid);
    double acc = 0.0;
    for (const auto& p : c.v) acc += point_value(c, 0.5 * (centroid + p));
    return c.evol * acc / double(c.v.size());
  }

  void bisect(const Cell& c, Cell& a, Cell& b) const {
    int bi = 0, bj = 1;
    double best = -1.0;
    for (int i = 0; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) {
        const double d = (c.v[i] - c.v[j]).squaredNorm();
        if (d > best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    const Eigen::VectorXd mid = 0.5 * (c.v[bi] + c.v[bj]);
    a = c;
    a.v[bj] = mid;
    if (!a.ideal.empty()) a.ideal[bj] = 0;
    b = c;
    b.v[bi] = mid;
    if (!b.ideal.empty()) b.ideal[bi] = 0;
    a.evol = b.evol = 0.5 * c.evol;
  }

  // Exact partition: half-scale tip at the apex plus the staircase cells of
  // the remaining frustum.
  void split_toward(const Cell& c, int apex, Cell& tip, std::vector<Cell>& frusta) const {
    std::vector<Eigen::VectorXd> others;
    std::vector<char> others_ideal;
    for (int i = 0; i <= n_; ++i)
      if (i != apex) {
        others.push_back(c.v[i]);
        others_ideal.push_back(c.ideal[i]);
      }
    std::vector<Eigen::VectorXd> mids;
    for (const auto& u : others) mids.push_back(0.5 * (c.v[apex] + u));

    tip.v.assign(1, c.v[apex]);
    tip.ideal.assign(1, 1);
    for (const auto& m : mids) {
      tip.v.push_back(m);
      tip.ideal.push_back(0);
    }
    tip.evol = c.evol * std::pow(0.5, n_);

    frusta.assign(n_, Cell{});
    for (int j = 1; j <= n_; ++j) {
      auto& f = frusta[j - 1];
      f.v.insert(f.v.end(), mids.begin(), mids.begin() + j);
      f.ideal.assign(j, 0);
      f.v.insert(f.v.end(), others.begin() + (j - 1), others.end());
      f.ideal.insert(f.ideal.end(), others_ideal.begin() + (j - 1), others_ideal.end());
      f.evol = euclidean_volume(f.v);
    }
  }

  // One sphere vertex: replace the cell by n parameter-space cells carrying
  // the desingularized cone integrand.
  void convert_cone(Cell cell, int apex, int depth) {
    CuspCtx ctx;
    ctx.apex = cell.v[apex];
    for (int i = 0; i <= n_; ++i)
      if (i != apex) ctx.base.push_back(cell.v[i]);
    ctx.factor = factorial(n_) * cell.evol;
    ctxs_.push_back(std::move(ctx));
    const int id = static_cast<int>(ctxs_.size()) - 1;

    // Prism corners (c_j, 0) and (c_j, 1) over the standard (n-1)-simplex,
    // staircase-triangulated.
    auto corner = [&](int j, double u) {
      Eigen::VectorXd q = Eigen::VectorXd::Zero(n_);
      if (j > 0) q[j - 1] = 1.0;
      q[n_ - 1] = u;
      return q;
    };
    for (int j = 0; j < n_; ++j) {
      Cell pc;
      pc.ctx = id;
      for (int i = 0; i <= j; ++i) pc.v.push_back(corner(i, 0.0));
      for (int i = j; i < n_; ++i) pc.v.push_back(corner(i, 1.0));
      pc.evol = euclidean_volume(pc.v);
      add_cell(std::move(pc), depth + 1);
    }
  }

  void add_cell(Cell cell, int depth) {
    if (cell.evol == 0.0) return;
    if (cell.ctx < 0) {
      int ideal_count = 0;
      int first = -1;
      for (int i = 0; i <= n_; ++i)
        if (cell.ideal[i]) {
          ++ideal_count;
          if (first < 0) first = i;
        }
      if (ideal_count == 1) {
        convert_cone(std::move(cell), first, depth);
        return;
      }
      if (ideal_count >= 2) {
        if (depth > 4 * (n_ + 2)) throw std::logic_error("cone isolation did not terminate");
        Cell tip;
        std::vector<Cell> frusta;
        split_toward(cell, first, tip, frusta);
        add_cell(std::move(tip), depth + 1);
        for (auto& f : frusta) add_cell(std::move(f), depth + 1);
        return;
      }
    }
    add_leaf(make_node(std::move(cell)));
  }

  double apply_gm(const GmRule& rule, const Cell& c) const {
    double acc = 0.0;
    for (size_t p = 0; p < rule.bary.size(); ++p) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
      for (int j = 0; j <= n_; ++j) x += rule.bary[p][j] * c.v[j];
      acc += rule.weight[p] * point_value(c, x);
    }
    return acc * c.evol * factorial(n_);
  }

  Node make_node(Cell cell) {
    Node node;
    if (rule_ == QuadRule::gauss) {
      const double v5 = apply_gm(gm5_, cell);
      const double v3 = apply_gm(gm3_, cell);
      node.value = v5;
      node.err = std::abs(v5 - v3);
    } else {
      const double coarse = estimate(cell);
      Cell a, b;
      bisect(cell, a, b);
      const double fine = estimate(a) + estimate(b);
      node.value = fine + (fine - coarse) / 3.0;  // Richardson step
      node.err = std::abs(fine - coarse);
    }
    node.cell = std::move(cell);
    return node;
  }

  void add_leaf(Node node) {
    total_ += node.value;
    err_sum_ += node.err;
    if (node.err > 1e-17 * (1.0 + std::abs(node.value))) {
      size_t slot;
      if (!free_slots_.empty()) {
        slot = free_slots_.back();
        free_slots_.pop_back();
        nodes_[slot] = std::move(node);
      } else {
        slot = nodes_.size();
        nodes_.push_back(std::move(node));
      }
      heap_.push({nodes_[slot].err, seq_++, slot});
    }
  }

  int n_;
  double exp_;
  QuadRule rule_;
  GmRule gm5_, gm3_;
  double total_ = 0.0;
  double err_sum_ = 0.0;
  long seq_ = 0;
  std::vector<CuspCtx> ctxs_;
  std::vector<Node> nodes_;
  std::priority_queue<HeapItem> heap_;
  std::vector<size_t> free_slots_;
};

}  // namespace

double klein_simplex_volume(const std::vector<Eigen::VectorXd>& verts, double tol, QuadRule rule) {
  if (verts.empty()) throw std::invalid_argument("klein_simplex_volume: empty vertex list");
  const int n = static_cast<int>(verts[0].size());
  if (n < 2) throw std::invalid_argument("klein_simplex_volume: dimension must be >= 2");
  if (static_cast<int>(verts.size()) != n + 1)
    throw std::invalid_argument("klein_simplex_volume: need n+1 vertices in R^n");
  for (const auto& v : verts) {
    if (v.size() != n) throw std::invalid_argument("klein_simplex_volume: mixed dimensions");
    if (v.squaredNorm() > 1.0 + 1e-9)
      throw std::invalid_argument("klein_simplex_volume: vertex outside the closed ball");
  }
  if (!(tol > 0.0)) throw std::domain_error("klein_simplex_volume: tol must be positive");
  Engine e(n, rule);
  return e.run(verts, tol);
}

double signed_volume(const GeodesicSimplex& s, double tol, QuadRule rule) {
  if (s.order() != s.n)
    throw std::domain_error("signed_volume: need an n-simplex in dimension n");
  if (!(tol > 0.0)) throw std::domain_error("signed_volume: tol must be positive");
  if (s.degenerate) return 0.0;

  Eigen::MatrixXd m(s.n + 1, s.n + 1);
  for (int i = 0; i <= s.n; ++i) m.row(i) = s.vertices[i].x.transpose();
  const double det = m.determinant();
  if (det == 0.0) return 0.0;

  std::vector<Eigen::VectorXd> kv;
  kv.reserve(s.n + 1);
  for (const auto& p : s.vertices) {
    Eigen::VectorXd k = p.klein();
    if (p.kind == HPoint::Kind::ideal) k /= k.norm();
    kv.push_back(std::move(k));
  }
  const double mag = klein_simplex_volume(kv, tol, rule);
  return det > 0 ? mag : -mag;
}

double signed_volume(const GeodesicSimplex& s, double tol) {
  return signed_volume(s, tol, QuadRule::gauss);
}

}  // namespace hypvol::hypgeom
