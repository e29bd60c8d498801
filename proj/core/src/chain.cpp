#include "hypvol/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hypvol::pseudo {

bool is_boundary_key(const std::string& key) { return !key.empty() && key[0] == '_'; }

void validate_chain(const IntegralChain& z) {
  if (z.n < 1) throw std::invalid_argument("chain: dimension must be >= 1");
  for (size_t i = 0; i < z.terms.size(); ++i) {
    const auto& t = z.terms[i];
    if (t.sign != 1 && t.sign != -1)
      throw std::invalid_argument("chain term " + std::to_string(i) + ": sign must be +-1");
    if (static_cast<int>(t.face_keys.size()) != z.n + 1)
      throw std::invalid_argument("chain term " + std::to_string(i) + ": needs n+1 face keys");
    if (t.vertex_positions) {
      if (static_cast<int>(t.vertex_positions->size()) != z.n + 1)
        throw std::invalid_argument("chain term " + std::to_string(i) +
                                    ": needs n+1 vertex positions");
      for (const auto& p : *t.vertex_positions)
        if (p.dim() != z.n)
          throw std::invalid_argument("chain term " + std::to_string(i) +
                                      ": vertex dimension mismatch");
    }
  }
}

ChainComplexResult chain_to_pseudomanifold(const IntegralChain& z) {
  validate_chain(z);
  ChainComplexResult out;
  out.pm.n = z.n;
  out.pm.simplex_count = static_cast<int>(z.terms.size());
  for (const auto& t : z.terms) out.signs.push_back(t.sign);

  // key -> faces with positive / negative boundary parity, in (term, face) order
  std::map<std::string, std::pair<std::vector<FaceRef>, std::vector<FaceRef>>> buckets;
  for (int i = 0; i < static_cast<int>(z.terms.size()); ++i) {
    const auto& t = z.terms[i];
    for (int j = 0; j <= z.n; ++j) {
      const auto& key = t.face_keys[j];
      if (is_boundary_key(key)) {
        out.unmatched.push_back({i, j});
        continue;
      }
      const int parity = (j % 2 == 0 ? 1 : -1) * t.sign;
      auto& b = buckets[key];
      (parity > 0 ? b.first : b.second).push_back({i, j});
    }
  }

  for (auto& [key, b] : buckets) {
    const size_t matched = std::min(b.first.size(), b.second.size());
    for (size_t m = 0; m < matched; ++m) {
      Pairing pr;
      pr.a = b.first[m];
      pr.b = b.second[m];
      out.pm.pairings.push_back(std::move(pr));
    }
    for (size_t m = matched; m < b.first.size(); ++m) out.unmatched.push_back(b.first[m]);
    for (size_t m = matched; m < b.second.size(); ++m) out.unmatched.push_back(b.second[m]);
  }

  std::sort(out.unmatched.begin(), out.unmatched.end(),
            [](const FaceRef& x, const FaceRef& y) {
              return std::pair(x.simplex, x.face) < std::pair(y.simplex, y.face);
            });
  out.unmatched_faces = static_cast<int>(out.unmatched.size());
  return out;
}

}  // namespace hypvol::pseudo
