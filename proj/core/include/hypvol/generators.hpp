#pragma once

#include "hypvol/chain.hpp"
#include "hypvol/pseudomanifold.hpp"
#include "hypvol/rationalize.hpp"
#include "hypvol/sampling.hpp"

namespace hypvol::pseudo {

// Valid pseudomanifold with random facet identifications: slots are shuffled
// and adjacent pairs glued with probability pair_prob under random vertex
// bijections.
Pseudomanifold random_pseudomanifold(hypgeom::Rng& rng, int n, int max_simplices,
                                     double pair_prob = 0.7);

// Chain with face keys drawn from a small pool, for boundary-norm checks.
IntegralChain random_chain(hypgeom::Rng& rng, int n, int terms, int key_pool);

// Real chain lying (up to `noise`) in a nontrivial cycle space.
RealChain random_real_cycle(hypgeom::Rng& rng, int n, int pairs, double noise = 1e-9);

}  // namespace hypvol::pseudo
