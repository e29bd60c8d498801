#include "hypvol/rationalize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hypvol::pseudo {

namespace {

using boost::multiprecision::cpp_int;

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace

Rational rational_from_double(double x, double eps) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
  if (!(eps > 0)) throw std::domain_error("rational_from_double: eps must be positive");
  if (std::abs(x) > 9e15) return Rational(x);  // exact binary value
  const bool neg = x < 0;
  double y = std::abs(x);
  cpp_int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(y);
    if (fl > 9e18) break;
    const cpp_int a = static_cast<long long>(fl);
    const cpp_int p2 = a * p1 + p0;
    const cpp_int q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Rational approx(p1, q1);
    if (std::abs(to_double(approx) - std::abs(x)) <= eps) break;
    const double frac = y - fl;
    if (frac < 1e-18) break;
    y = 1.0 / frac;
  }
  Rational r(p1, q1);
  if (neg) r = -r;
  if (std::abs(to_double(r) - x) > eps)
    throw std::runtime_error("rational_from_double: no convergent within eps");
  return r;
}

CancellationSystem cancellation_system(const RealChain& z) {
  if (z.n < 1) throw std::invalid_argument("cancellation_system: dimension must be >= 1");
  std::map<std::string, std::vector<long long>> rows;
  const int k = static_cast<int>(z.terms.size());
  for (int i = 0; i < k; ++i) {
    const auto& t = z.terms[i];
    if (static_cast<int>(t.face_keys.size()) != z.n + 1)
      throw std::invalid_argument("cancellation_system: term needs n+1 face keys");
    for (int j = 0; j <= z.n; ++j) {
      const auto& key = t.face_keys[j];
      if (is_boundary_key(key)) continue;
      auto& row = rows[key];
      if (row.empty()) row.assign(k, 0);
      row[i] += (j % 2 == 0) ? 1 : -1;
    }
  }
  CancellationSystem sys;
  for (auto& [key, row] : rows) {
    sys.keys.push_back(key);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

bool in_cycle_space(const CancellationSystem& sys, const std::vector<Rational>& x) {
  for (const auto& row : sys.rows) {
    Rational acc = 0;
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) acc += Rational(row[i]) * x[i];
    if (acc != 0) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form over the rationals. Returns pivot column per row;
// matrix is modified in place.
std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const Rational inv = Rational(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RationalizedChain rationalize_cycle(const RealChain& z, const RationalizeOptions& opt) {
  if (!(opt.eps > 0)) throw std::domain_error("rationalize_cycle: eps must be positive");
  const int k = static_cast<int>(z.terms.size());
  if (k == 0) throw std::invalid_argument("rationalize_cycle: empty chain");
  const auto sys = cancellation_system(z);

  // Approximate-cycle precondition.
  double residual = 0.0, scale = 1.0;
  for (const auto& t : z.terms) scale = std::max(scale, std::abs(t.coeff));
  for (const auto& row : sys.rows) {
    double acc = 0.0;
    for (int i = 0; i < k; ++i) acc += static_cast<double>(row[i]) * z.terms[i].coeff;
    residual = std::max(residual, std::abs(acc));
  }
  if (residual > 1e-6 * scale)
    throw std::domain_error("rationalize_cycle: input does not satisfy the cycle condition");

  if (opt.normalizer && static_cast<int>(opt.normalizer->size()) != k)
    throw std::invalid_argument("rationalize_cycle: normalizer size mismatch");

  // Exact nullspace parametrization: x_pivots = -R x_free.
  std::vector<std::vector<Rational>> m;
  m.reserve(sys.rows.size());
  for (const auto& row : sys.rows) {
    std::vector<Rational> r(k);
    for (int i = 0; i < k; ++i) r[i] = row[i];
    m.push_back(std::move(r));
  }
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(k, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < k; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  double snap = std::min(opt.eps / 2.0, 1e-9);
  for (int attempt = 0; attempt < 48; ++attempt, snap *= 0.25) {
    std::vector<Rational> x(k, Rational(0));
    for (int c : free_cols) x[c] = rational_from_double(z.terms[c].coeff, snap);
    for (size_t r = 0; r < pivots.size(); ++r) {
      Rational acc = 0;
      for (int c : free_cols)
        if (m[r][c] != 0) acc += m[r][c] * x[c];
      x[pivots[r]] = -acc;
    }

    if (opt.normalizer) {
      Rational phi = 0;
      for (int i = 0; i < k; ++i) phi += (*opt.normalizer)[i] * x[i];
      if (phi == 0) continue;
      for (auto& xi : x) xi /= phi;
    }

    bool close = true;
    for (int i = 0; i < k && close; ++i)
      if (std::abs(to_double(x[i]) - z.terms[i].coeff) >= opt.eps) close = false;
    if (!close) continue;
    if (!in_cycle_space(sys, x))
      throw std::logic_error("rationalize_cycle: exact membership check failed");

    RationalizedChain out;
    out.coeffs = std::move(x);
    out.chain = z;
    for (int i = 0; i < k; ++i) out.chain.terms[i].coeff = to_double(out.coeffs[i]);
    return out;
  }
  throw std::runtime_error(
      "rationalize_cycle: no rational point within eps at the working precision");
}

}  // namespace hypvol::pseudo
