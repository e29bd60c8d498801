#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypvol/geodesic_simplex.hpp"
#include "hypvol/pseudomanifold.hpp"

namespace hypvol::pseudo {

/// One signed singular n-simplex of an integral chain. Face j is identified
/// by face_keys[j]; equal keys mean equal restrictions. Keys starting with
/// '_' mark faces supported on the boundary of the ambient manifold: they
/// never cancel and impose no cycle constraint.
struct ChainTerm {
  int sign = 1;  // +1 or -1
  std::vector<std::string> face_keys;
  std::optional<std::vector<hypgeom::HPoint>> vertex_positions;
};

struct IntegralChain {
  int n = 3;
  std::vector<ChainTerm> terms;
};

struct RealTerm {
  double coeff = 0.0;
  std::vector<std::string> face_keys;
};

struct RealChain {
  int n = 3;
  std::vector<RealTerm> terms;
};

bool is_boundary_key(const std::string& key);

void validate_chain(const IntegralChain& z);

struct ChainComplexResult {
  Pseudomanifold pm;
  std::vector<int> signs;                 // eps_i, copied from the chain
  int unmatched_faces = 0;                // equals ||dz||_Z
  std::vector<FaceRef> unmatched;         // the boundary faces, in order
};

// Pseudomanifold from a maximal collection of canceling pairs: faces are
// bucketed by key and by the parity (-1)^j eps_i, and opposite parities are
// matched greedily in (term, face) order with order-preserving gluings.
ChainComplexResult chain_to_pseudomanifold(const IntegralChain& z);

}  // namespace hypvol::pseudo
