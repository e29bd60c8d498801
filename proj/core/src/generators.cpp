#include "hypvol/generators.hpp"

#include <numeric>

#include <Eigen/Dense>

namespace hypvol::pseudo {

namespace {

std::vector<int> random_perm(hypgeom::Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform_int(0, i)]);
  return p;
}

}  // namespace

Pseudomanifold random_pseudomanifold(hypgeom::Rng& rng, int n, int max_simplices,
                                     double pair_prob) {
  Pseudomanifold p;
  p.n = n;
  p.simplex_count = rng.uniform_int(1, max_simplices);
  std::vector<FaceRef> slots;
  for (int s = 0; s < p.simplex_count; ++s)
    for (int f = 0; f <= n; ++f) slots.push_back({s, f});
  for (int i = static_cast<int>(slots.size()) - 1; i > 0; --i)
    std::swap(slots[i], slots[rng.uniform_int(0, i)]);
  for (size_t i = 0; i + 1 < slots.size(); i += 2) {
    if (rng.uniform() > pair_prob) continue;
    Pairing pr;
    pr.a = slots[i];
    pr.b = slots[i + 1];
    if (rng.uniform() < 0.5) pr.perm = random_perm(rng, n);
    p.pairings.push_back(std::move(pr));
  }
  return p;
}

IntegralChain random_chain(hypgeom::Rng& rng, int n, int terms, int key_pool) {
  IntegralChain z;
  z.n = n;
  for (int i = 0; i < terms; ++i) {
    ChainTerm t;
    t.sign = rng.uniform() < 0.5 ? 1 : -1;
    for (int j = 0; j <= n; ++j)
      t.face_keys.push_back("k" + std::to_string(rng.uniform_int(0, key_pool - 1)));
    z.terms.push_back(std::move(t));
  }
  return z;
}

RealChain random_real_cycle(hypgeom::Rng& rng, int n, int pairs, double noise) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    RealChain z;
    z.n = n;
    // Mirrored pairs share all keys at equal positions; a few keys are shared
    // across pairs to couple the blocks.
    for (int p = 0; p < pairs; ++p) {
      RealTerm a, b;
      for (int j = 0; j <= n; ++j) {
        std::string key;
        if (j == 0 && p > 0 && rng.uniform() < 0.5)
          key = "x" + std::to_string(rng.uniform_int(0, p - 1));
        else
          key = "p" + std::to_string(p) + "f" + std::to_string(j);
        a.face_keys.push_back(key);
        b.face_keys.push_back(key);
      }
      z.terms.push_back(a);
      z.terms.push_back(b);
    }
    const int k = static_cast<int>(z.terms.size());
    const auto sys = cancellation_system(z);
    Eigen::MatrixXd a(sys.rows.size(), k);
    for (size_t r = 0; r < sys.rows.size(); ++r)
      for (int c = 0; c < k; ++c) a(r, c) = static_cast<double>(sys.rows[r][c]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-9);
    const Eigen::MatrixXd ker = lu.kernel();
    if (lu.dimensionOfKernel() == 0) continue;
    Eigen::VectorXd w(ker.cols());
    for (int i = 0; i < w.size(); ++i) w[i] = rng.uniform(-1.0, 1.0);
    Eigen::VectorXd x = ker * w;
    const double mx = x.lpNorm<Eigen::Infinity>();
    if (mx < 1e-6) continue;
    x /= mx;
    for (int i = 0; i < k; ++i)
      z.terms[i].coeff = x[i] + rng.uniform(-noise, noise);
    return z;
  }
  throw std::runtime_error("random_real_cycle: failed to build a cycle");
}

}  // namespace hypvol::pseudo
