#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hypvol::pseudo {

struct FaceRef {
  int simplex = 0;
  int face = 0;  // facet index = omitted vertex
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

/// Identification of facet a with facet b. `perm` maps a position in the
/// canonical (ascending) vertex list of facet a to a position in the list of
/// facet b; empty means order-preserving (identity).
struct Pairing {
  FaceRef a, b;
  std::vector<int> perm;
};

/// n-simplices with affine facet identifications; each facet in at most one
/// pairing. Distinct facets of one simplex may be paired with each other.
struct Pseudomanifold {
  int n = 3;
  int simplex_count = 0;
  std::vector<Pairing> pairings;
};

// Canonical ascending vertex list of facet `face` of an n-simplex.
std::vector<int> facet_vertices(int n, int face);

// Empty iff the structure satisfies the definition. Violations are data.
std::vector<std::string> validate(const Pseudomanifold& p);
void require_valid(const Pseudomanifold& p);

// Sign per simplex making every identification orientation-reversing, or
// nullopt. A pairing (a, fa) ~ (b, fb) with bijection parity sgn(perm)
// imposes eps_a * eps_b = -(-1)^{fa+fb} sgn(perm).
std::optional<std::vector<int>> orientability(const Pseudomanifold& p);

struct FaceInstance {
  int simplex = 0;
  std::vector<int> verts;  // ascending vertex subset
  friend bool operator==(const FaceInstance&, const FaceInstance&) = default;
  friend auto operator<=>(const FaceInstance& x, const FaceInstance& y) {
    if (auto c = x.simplex <=> y.simplex; c != 0) return c;
    return x.verts <=> y.verts;
  }
};

// Classes of k-faces under the equivalence generated by the pairings,
// ordered by their minimal representative.
std::vector<std::vector<FaceInstance>> face_orbits(const Pseudomanifold& p, int k);

long long euler_characteristic(const Pseudomanifold& p);

// Facets belonging to no pairing, in (simplex, face) order.
std::vector<FaceRef> boundary_faces(const Pseudomanifold& p);

/// One codimension-2 fan of the boundary: the chain of (simplex, face)
/// instances around an (n-2)-face, from one unpaired facet to the other.
struct Fan {
  int start_bface = 0;      // indexes into boundary_faces(p)
  int start_sub = 0;        // omitted position within that facet
  int end_bface = 0;
  int end_sub = 0;
  std::vector<int> perm;    // position map between the two sub-face lists
  std::vector<FaceInstance> instances;  // (simplex, E) along the walk
};
std::vector<Fan> boundary_codim2_fans(const Pseudomanifold& p);

struct Boundary {
  Pseudomanifold pm;                 // dimension n-1, no boundary
  std::vector<FaceRef> faces;        // provenance: pm simplex i <- P facet
};
// The (n-1)-pseudomanifold formed by the unpaired facets, glued along the
// fans traced around each codimension-2 face.
Boundary boundary(const Pseudomanifold& p);

struct OmegaPartition {
  std::array<int, 5> t{};                     // t_i = #simplices with i boundary facets
  std::array<std::vector<int>, 5> members{};
};
OmegaPartition omega_partition(const Pseudomanifold& p);  // n == 3

struct EdgeOrbitLabel {
  FaceInstance representative;
  bool nice = false;
};
struct NiceBadReport {
  long long nice = 0;
  long long bad = 0;
  std::vector<EdgeOrbitLabel> orbits;  // edge orbits meeting the boundary
};
// Edge orbits of |P| meeting d|P|; an orbit is nice iff some Omega_0 simplex
// carries an edge in it. nice + bad = (3/2) * (#boundary 2-faces).
NiceBadReport nice_bad_edges(const Pseudomanifold& p);  // n == 3

struct FaceCountIdentity {
  long long codim2_boundary_orbits = 0;
  double n_half_c = 0.0;   // (n/2) * c(dP)
  bool equal = false;
};
FaceCountIdentity boundary_face_count_identity(const Pseudomanifold& p);

// Euler characteristic per connected component of a closed 2-dimensional
// pseudomanifold (the combinatorial closed-surface check for dP).
std::vector<long long> surface_component_chis(const Pseudomanifold& p);

}  // namespace hypvol::pseudo
