#pragma once

#include <cstdint>
#include <random>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

struct RandomGemOptions {
  int max_attempts = 10000;
};

// Uniformly random perfect matching per color on 2p vertices, resampled until
// the graph is connected. Deterministic for a fixed seed. No manifold guarantee.
ColoredGraph random_gem(int d, int p, std::uint64_t seed, const RandomGemOptions& options = {});

// Random connected member with boundary: colors 0..d-1 are random perfect
// matchings, color d is a random perfect matching with `boundary_pairs` edges
// dropped, giving 2*boundary_pairs boundary vertices.
ColoredGraph random_boundary_gem(int d, int p, int boundary_pairs, std::uint64_t seed,
                                 const RandomGemOptions& options = {});

// Uniform integer in [0, bound) that does not depend on the standard library's
// distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace gemkit
