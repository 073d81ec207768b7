#pragma once

#include <vector>

#include "gemkit/colored_graph.hpp"
#include "oracle.hpp"

namespace fixtures {

inline oracle::RawGem raw_s4_2() { return {4, 2, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}}}; }

inline oracle::RawGem raw_b4_2() { return {4, 2, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3}}}; }

// a_j = j, b_j = 3 + j; color i joins a_j to b_{j+i mod 3}.
inline oracle::RawGem raw_k33() {
  oracle::RawGem g{2, 6, {}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g.edges.push_back({j, 3 + (j + i) % 3, i});
  }
  return g;
}

// Two copies of S4_2 with their color-4 edges exchanged.
inline oracle::RawGem raw_non_contracted() {
  oracle::RawGem g{4, 4, {}};
  for (int c = 0; c < 4; ++c) {
    g.edges.push_back({0, 1, c});
    g.edges.push_back({2, 3, c});
  }
  g.edges.push_back({0, 3, 4});
  g.edges.push_back({1, 2, 4});
  return g;
}

// Order-2 disc: colors 0 and 1 present, color 2 missing.
inline oracle::RawGem raw_disc() { return {2, 2, {{0, 1, 0}, {0, 1, 1}}}; }

// Six vertices, two boundary components (each an order-2 gem).
inline oracle::RawGem raw_two_boundaries() {
  return {4, 6, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 2, 0}, {1, 3, 0}, {4, 5, 0}, {4, 5, 2}, {4, 5, 3},
                 {4, 2, 1}, {5, 3, 1}, {2, 3, 2}, {2, 3, 3}, {2, 3, 4}}};
}

inline gemkit::ColoredGraph build(const oracle::RawGem& raw) {
  std::vector<gemkit::Edge> edges;
  for (const auto& e : raw.edges) edges.push_back({e[0], e[1], e[2]});
  return gemkit::validate(raw.d, raw.n, edges);
}

inline oracle::RawGem raw(const gemkit::ColoredGraph& g) {
  oracle::RawGem out{g.dimension(), g.num_vertices(), {}};
  for (const auto& e : g.edges()) out.edges.push_back({e.u, e.v, e.color});
  return out;
}

inline gemkit::ColoredGraph s4_2() { return build(raw_s4_2()); }
inline gemkit::ColoredGraph b4_2() { return build(raw_b4_2()); }
inline gemkit::ColoredGraph k33() { return build(raw_k33()); }
inline gemkit::ColoredGraph non_contracted() { return build(raw_non_contracted()); }
inline gemkit::ColoredGraph disc() { return build(raw_disc()); }
inline gemkit::ColoredGraph two_boundaries() { return build(raw_two_boundaries()); }

}  // namespace fixtures
