#include "hypvol/pseudomanifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hypvol::pseudo {

namespace {

int perm_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

bool is_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<int> effective_perm(const Pairing& pr, int n) {
  if (pr.perm.empty()) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  return pr.perm;
}

std::vector<int> invert_perm(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

// Position of vertex v in facet_vertices(n, face).
int facet_position(int face, int v) { return v - (v > face ? 1 : 0); }

// Vertex at position p of facet_vertices(n, face).
int facet_vertex_at(int face, int p) { return p + (p >= face ? 1 : 0); }

struct PairLookup {
  // (simplex, face) -> (pairing index, side 0/1); -1 if unpaired
  std::map<std::pair<int, int>, std::pair<int, int>> slots;

  explicit PairLookup(const Pseudomanifold& p) {
    for (int i = 0; i < static_cast<int>(p.pairings.size()); ++i) {
      const auto& pr = p.pairings[i];
      slots[{pr.a.simplex, pr.a.face}] = {i, 0};
      slots[{pr.b.simplex, pr.b.face}] = {i, 1};
    }
  }

  const std::pair<int, int>* find(int s, int f) const {
    auto it = slots.find({s, f});
    return it == slots.end() ? nullptr : &it->second;
  }
};

// Map an ordered vertex tuple lying in the given facet through a pairing.
struct CrossResult {
  int simplex;
  int face;  // facet arrived through
  std::vector<int> verts;
};

CrossResult cross_pairing(const Pseudomanifold& p, int pair_index, int side,
                          const std::vector<int>& verts) {
  const auto& pr = p.pairings[pair_index];
  const int n = p.n;
  const FaceRef from = side == 0 ? pr.a : pr.b;
  const FaceRef to = side == 0 ? pr.b : pr.a;
  std::vector<int> perm = effective_perm(pr, n);
  if (side == 1) perm = invert_perm(perm);
  CrossResult out;
  out.simplex = to.simplex;
  out.face = to.face;
  out.verts.reserve(verts.size());
  for (int v : verts)
    out.verts.push_back(facet_vertex_at(to.face, perm[facet_position(from.face, v)]));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<unsigned> subset_masks(int bits, int popcount) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << bits); ++m)
    if (std::popcount(m) == popcount) out.push_back(m);
  return out;
}

std::vector<int> mask_to_verts(unsigned m) {
  std::vector<int> v;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) v.push_back(i);
  return v;
}

unsigned verts_to_mask(const std::vector<int>& v) {
  unsigned m = 0;
  for (int x : v) m |= 1u << x;
  return m;
}

}  // namespace

std::vector<int> facet_vertices(int n, int face) {
  std::vector<int> v;
  v.reserve(n);
  for (int i = 0; i <= n; ++i)
    if (i != face) v.push_back(i);
  return v;
}

std::vector<std::string> validate(const Pseudomanifold& p) {
  std::vector<std::string> out;
  if (p.n < 1) out.push_back("dimension must be >= 1");
  if (p.simplex_count < 0) out.push_back("negative simplex count");
  std::map<std::pair<int, int>, int> uses;
  for (int i = 0; i < static_cast<int>(p.pairings.size()); ++i) {
    const auto& pr = p.pairings[i];
    for (const FaceRef& f : {pr.a, pr.b}) {
      if (f.simplex < 0 || f.simplex >= p.simplex_count)
        out.push_back("pairing " + std::to_string(i) + ": simplex index out of range");
      if (f.face < 0 || f.face > p.n)
        out.push_back("pairing " + std::to_string(i) + ": face index out of range");
      ++uses[{f.simplex, f.face}];
    }
    if (pr.a.simplex == pr.b.simplex && pr.a.face == pr.b.face)
      out.push_back("pairing " + std::to_string(i) + ": face identified with itself");
    if (!pr.perm.empty() && !is_permutation(pr.perm, p.n))
      out.push_back("pairing " + std::to_string(i) + ": vertex bijection is not a permutation");
  }
  for (const auto& [slot, count] : uses)
    if (count > 1)
      out.push_back("face (" + std::to_string(slot.first) + "," + std::to_string(slot.second) +
                    ") appears in " + std::to_string(count) + " pairings");
  return out;
}

void require_valid(const Pseudomanifold& p) {
  auto v = validate(p);
  if (!v.empty()) throw std::invalid_argument("invalid pseudomanifold: " + v.front());
}

std::optional<std::vector<int>> orientability(const Pseudomanifold& p) {
  require_valid(p);
  std::vector<int> sign(p.simplex_count, 0);
  // Constraint graph: rel = required product eps_a * eps_b.
  std::vector<std::vector<std::pair<int, int>>> adj(p.simplex_count);
  for (const auto& pr : p.pairings) {
    const int rel = -((pr.a.face + pr.b.face) % 2 == 0 ? 1 : -1) * perm_sign(effective_perm(pr, p.n));
    adj[pr.a.simplex].push_back({pr.b.simplex, rel});
    adj[pr.b.simplex].push_back({pr.a.simplex, rel});
  }
  for (int s = 0; s < p.simplex_count; ++s) {
    if (sign[s] != 0) continue;
    sign[s] = 1;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (auto [next, rel] : adj[cur]) {
        const int want = sign[cur] * rel;
        if (sign[next] == 0) {
          sign[next] = want;
          stack.push_back(next);
        } else if (sign[next] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

std::vector<std::vector<FaceInstance>> face_orbits(const Pseudomanifold& p, int k) {
  require_valid(p);
  if (k < 0 || k > p.n) throw std::invalid_argument("face_orbits: k out of range");
  const int bits = p.n + 1;
  const auto masks = subset_masks(bits, k + 1);
  std::vector<int> rank(1u << bits, -1);
  for (int i = 0; i < static_cast<int>(masks.size()); ++i) rank[masks[i]] = i;
  const auto id = [&](int s, unsigned m) { return s * static_cast<int>(masks.size()) + rank[m]; };

  UnionFind uf(static_cast<size_t>(p.simplex_count) * masks.size());
  for (int pi = 0; pi < static_cast<int>(p.pairings.size()); ++pi) {
    const auto& pr = p.pairings[pi];
    const unsigned facet_mask_a = ((1u << bits) - 1u) & ~(1u << pr.a.face);
    for (unsigned m : masks) {
      if ((m & facet_mask_a) != m) continue;
      const auto cr = cross_pairing(p, pi, 0, mask_to_verts(m));
      uf.unite(id(pr.a.simplex, m), id(cr.simplex, verts_to_mask(cr.verts)));
    }
  }

  std::map<int, std::vector<FaceInstance>> classes;
  for (int s = 0; s < p.simplex_count; ++s)
    for (unsigned m : masks)
      classes[uf.find(id(s, m))].push_back({s, mask_to_verts(m)});

  std::vector<std::vector<FaceInstance>> out;
  out.reserve(classes.size());
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

long long euler_characteristic(const Pseudomanifold& p) {
  require_valid(p);
  long long chi = 0;
  for (int k = 0; k <= p.n; ++k) {
    const long long c = static_cast<long long>(face_orbits(p, k).size());
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

std::vector<FaceRef> boundary_faces(const Pseudomanifold& p) {
  PairLookup lookup(p);
  std::vector<FaceRef> out;
  for (int s = 0; s < p.simplex_count; ++s)
    for (int f = 0; f <= p.n; ++f)
      if (!lookup.find(s, f)) out.push_back({s, f});
  return out;
}

std::vector<Fan> boundary_codim2_fans(const Pseudomanifold& p) {
  require_valid(p);
  if (p.n < 2) return {};
  const PairLookup lookup(p);
  const auto bfaces = boundary_faces(p);
  std::map<std::pair<int, int>, int> bface_index;  // (simplex, face) -> index
  for (int i = 0; i < static_cast<int>(bfaces.size()); ++i)
    bface_index[{bfaces[i].simplex, bfaces[i].face}] = i;

  std::vector<std::vector<bool>> used(bfaces.size(), std::vector<bool>(p.n, false));
  std::vector<Fan> fans;

  const long step_cap = 4 * static_cast<long>(p.pairings.size()) + 4;

  for (int bi = 0; bi < static_cast<int>(bfaces.size()); ++bi) {
    for (int sub = 0; sub < p.n; ++sub) {
      if (used[bi][sub]) continue;
      Fan fan;
      fan.start_bface = bi;
      fan.start_sub = sub;

      const auto& start = bfaces[bi];
      std::vector<int> fverts = facet_vertices(p.n, start.face);
      std::vector<int> everts;  // ordered image of the start sub-face list
      for (int i = 0; i < p.n; ++i)
        if (i != sub) everts.push_back(fverts[i]);

      int cur_s = start.simplex;
      int entry_face = start.face;
      long steps = 0;
      for (;;) {
        if (++steps > step_cap)
          throw std::runtime_error("boundary fan trace did not terminate");
        // The two vertices of cur_s outside E determine its two facets.
        std::vector<bool> in_e(p.n + 1, false);
        for (int v : everts) in_e[v] = true;
        int missing[2], mi = 0;
        for (int v = 0; v <= p.n; ++v)
          if (!in_e[v]) missing[mi++] = v;
        const int exit_face = (missing[0] == entry_face) ? missing[1] : missing[0];

        const auto* slot = lookup.find(cur_s, exit_face);
        if (!slot) {
          // Reached the other boundary facet.
          const int ei = bface_index.at({cur_s, exit_face});
          const auto exit_list = facet_vertices(p.n, exit_face);
          // entry_face is the vertex of the exit facet not in E
          int end_sub = -1;
          for (int i = 0; i < p.n; ++i)
            if (exit_list[i] == entry_face) end_sub = i;
          if (end_sub < 0) throw std::logic_error("fan trace: inconsistent end facet");
          // perm between the two canonical sub-face lists
          std::vector<int> end_list;
          for (int i = 0; i < p.n; ++i)
            if (i != end_sub) end_list.push_back(exit_list[i]);
          fan.perm.resize(p.n - 1);
          for (int i = 0; i < p.n - 1; ++i) {
            auto it = std::find(end_list.begin(), end_list.end(), everts[i]);
            if (it == end_list.end()) throw std::logic_error("fan trace: lost a vertex");
            fan.perm[i] = static_cast<int>(it - end_list.begin());
          }
          fan.end_bface = ei;
          fan.end_sub = end_sub;
          used[bi][sub] = true;
          used[ei][end_sub] = true;
          fans.push_back(std::move(fan));
          break;
        }
        fan.instances.push_back({cur_s, [&] {
                                   auto v = everts;
                                   std::sort(v.begin(), v.end());
                                   return v;
                                 }()});
        const auto cr = cross_pairing(p, slot->first, slot->second, everts);
        cur_s = cr.simplex;
        entry_face = cr.face;
        everts = cr.verts;
      }
      // The final instance (owner of the closing facet) was consumed by the
      // break; record it.
      auto v = everts;
      std::sort(v.begin(), v.end());
      fans.back().instances.push_back({cur_s, std::move(v)});
    }
  }
  return fans;
}

Boundary boundary(const Pseudomanifold& p) {
  require_valid(p);
  Boundary out;
  out.faces = boundary_faces(p);
  out.pm.n = p.n - 1;
  out.pm.simplex_count = static_cast<int>(out.faces.size());
  if (p.n >= 2) {
    for (const auto& fan : boundary_codim2_fans(p)) {
      Pairing pr;
      pr.a = {fan.start_bface, fan.start_sub};
      pr.b = {fan.end_bface, fan.end_sub};
      pr.perm = fan.perm;
      out.pm.pairings.push_back(std::move(pr));
    }
  }
  return out;
}

OmegaPartition omega_partition(const Pseudomanifold& p) {
  require_valid(p);
  if (p.n != 3) throw std::domain_error("omega_partition: defined for n = 3");
  const PairLookup lookup(p);
  OmegaPartition out;
  for (int s = 0; s < p.simplex_count; ++s) {
    int free_faces = 0;
    for (int f = 0; f <= p.n; ++f)
      if (!lookup.find(s, f)) ++free_faces;
    out.t[free_faces] += 1;
    out.members[free_faces].push_back(s);
  }
  return out;
}

NiceBadReport nice_bad_edges(const Pseudomanifold& p) {
  require_valid(p);
  if (p.n != 3) throw std::domain_error("nice_bad_edges: defined for n = 3");
  const auto omega = omega_partition(p);
  std::vector<bool> in_omega0(p.simplex_count, false);
  for (int s : omega.members[0]) in_omega0[s] = true;

  const auto bfaces = boundary_faces(p);
  if ((3 * bfaces.size()) % 2 != 0)
    throw std::runtime_error("nice_bad_edges: malformed boundary (odd incidence count)");
  std::vector<std::vector<bool>> bmask(p.simplex_count, std::vector<bool>(p.n + 1, false));
  for (const auto& f : bfaces) bmask[f.simplex][f.face] = true;

  NiceBadReport rep;
  for (const auto& orbit : face_orbits(p, 1)) {
    bool meets_boundary = false;
    bool nice = false;
    for (const auto& inst : orbit) {
      if (in_omega0[inst.simplex]) nice = true;
      for (int f = 0; f <= p.n; ++f) {
        if (!bmask[inst.simplex][f]) continue;
        if (std::find(inst.verts.begin(), inst.verts.end(), f) == inst.verts.end()) {
          meets_boundary = true;
        }
      }
    }
    if (!meets_boundary) continue;
    rep.orbits.push_back({orbit.front(), nice});
    if (nice)
      ++rep.nice;
    else
      ++rep.bad;
  }
  return rep;
}

FaceCountIdentity boundary_face_count_identity(const Pseudomanifold& p) {
  require_valid(p);
  FaceCountIdentity out;
  if (p.n < 2) {
    out.equal = boundary_faces(p).empty();
    return out;
  }
  const auto bfaces = boundary_faces(p);
  std::vector<std::vector<bool>> bmask(p.simplex_count, std::vector<bool>(p.n + 1, false));
  for (const auto& f : bfaces) bmask[f.simplex][f.face] = true;

  long long orbits_meeting = 0;
  for (const auto& orbit : face_orbits(p, p.n - 2)) {
    bool meets = false;
    for (const auto& inst : orbit) {
      for (int f = 0; f <= p.n && !meets; ++f) {
        if (!bmask[inst.simplex][f]) continue;
        if (std::find(inst.verts.begin(), inst.verts.end(), f) == inst.verts.end()) meets = true;
      }
      if (meets) break;
    }
    if (meets) ++orbits_meeting;
  }
  out.codim2_boundary_orbits = orbits_meeting;
  out.n_half_c = 0.5 * p.n * static_cast<double>(bfaces.size());
  out.equal = std::abs(out.n_half_c - static_cast<double>(orbits_meeting)) < 0.5;
  return out;
}

std::vector<long long> surface_component_chis(const Pseudomanifold& p) {
  require_valid(p);
  if (p.n != 2) throw std::domain_error("surface_component_chis: needs a 2-pseudomanifold");
  if (!boundary_faces(p).empty())
    throw std::domain_error("surface_component_chis: pseudomanifold has boundary");

  UnionFind comp(p.simplex_count);
  for (const auto& pr : p.pairings) comp.unite(pr.a.simplex, pr.b.simplex);

  std::map<int, long long> chi;
  for (int s = 0; s < p.simplex_count; ++s) chi[comp.find(s)] += 1;  // 2-faces
  for (int k = 0; k <= 1; ++k) {
    const long long sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& orbit : face_orbits(p, k)) chi[comp.find(orbit.front().simplex)] += sign;
  }
  std::vector<long long> out;
  out.reserve(chi.size());
  for (const auto& [root, value] : chi) out.push_back(value);
  return out;
}

}  // namespace hypvol::pseudo
