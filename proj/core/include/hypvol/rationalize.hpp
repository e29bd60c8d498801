#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypvol/chain.hpp"

namespace hypvol::pseudo {

using Rational = boost::multiprecision::cpp_rational;

// Best rational approximation with |p/q - x| <= eps, by continued-fraction
// convergents.
Rational rational_from_double(double x, double eps);

// The integer face-cancellation system: one row per non-boundary key, with
// A[row][i] = sum over faces j of term i carrying that key of (-1)^j.
// Cycles are exactly the chains annihilated by A.
struct CancellationSystem {
  std::vector<std::string> keys;
  std::vector<std::vector<long long>> rows;
};
CancellationSystem cancellation_system(const RealChain& z);

struct RationalizeOptions {
  double eps = 1e-6;
  // Optional normalizing functional phi given by rational weights; requires
  // phi(z) ~ 1 and rescales the output so phi(output) = 1 exactly.
  std::optional<std::vector<Rational>> normalizer;
};

struct RationalizedChain {
  std::vector<Rational> coeffs;
  RealChain chain;  // same structure, coefficients converted to double
};

// Rational coefficients that lie exactly in the cycle space (verified in
// exact arithmetic) and differ from the input componentwise by < eps.
RationalizedChain rationalize_cycle(const RealChain& z, const RationalizeOptions& opt = {});

// Exact membership check A x = 0, for tests and callers.
bool in_cycle_space(const CancellationSystem& sys, const std::vector<Rational>& x);

}  // namespace hypvol::pseudo
