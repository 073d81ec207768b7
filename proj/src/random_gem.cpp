#include "gemkit/random_gem.hpp"

#include <numeric>
#include <vector>

namespace gemkit {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

std::vector<Vertex> shuffled(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  }
  return perm;
}

void add_matching(std::vector<Edge>& edges, int n, Color c, int skip_pairs, std::mt19937_64& rng) {
  const auto perm = shuffled(n, rng);
  for (int k = 2 * skip_pairs; k + 1 < n; k += 2) {
    edges.push_back({perm[k], perm[k + 1], c});
  }
}

ColoredGraph sample(int d, int p, int boundary_pairs, std::uint64_t seed,
                    const RandomGemOptions& options) {
  if (d < 1) throw GemError(Errc::InvalidDimension, "dimension " + std::to_string(d));
  if (p < 1) throw GemError(Errc::InvalidVertex, "p must be at least 1");
  std::mt19937_64 rng(seed);
  const int n = 2 * p;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Color c = 0; c < d; ++c) add_matching(edges, n, c, 0, rng);
    add_matching(edges, n, d, boundary_pairs, rng);
    auto g = validate(d, n, edges, {.min_dimension = 1, .require_connected = false});
    if (g.is_connected()) return g;
  }
  throw GemError(Errc::SamplingExhausted,
                 "no connected sample after " + std::to_string(options.max_attempts) + " attempts");
}

}  // namespace

ColoredGraph random_gem(int d, int p, std::uint64_t seed, const RandomGemOptions& options) {
  return sample(d, p, 0, seed, options);
}

ColoredGraph random_boundary_gem(int d, int p, int boundary_pairs, std::uint64_t seed,
                                 const RandomGemOptions& options) {
  if (boundary_pairs < 1 || boundary_pairs > p) {
    throw GemError(Errc::Precondition, "boundary_pairs must lie in [1, p]");
  }
  return sample(d, p, boundary_pairs, seed, options);
}

}  // namespace gemkit
