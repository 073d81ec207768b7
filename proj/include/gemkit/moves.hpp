#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// Edge x --color-- y whose endpoints lie in different components of the
// residue on all colors except `color`.
struct DipoleSite {
  Color color = 0;
  Vertex x = 0;
  Vertex y = 0;

  friend bool operator==(const DipoleSite&, const DipoleSite&) = default;
};

// Ordered by color, then by least endpoint.
std::vector<DipoleSite> find_1_dipoles(const ColoredGraph& g);
std::vector<DipoleSite> find_1_dipoles(const ColoredGraph& g, Color color);

bool is_1_dipole(const ColoredGraph& g, const DipoleSite& site);

// Deletes x and y and welds, color by color, the edges they leave hanging.
// Remaining vertices keep their relative order.
ColoredGraph cancel_1_dipole(const ColoredGraph& g, const DipoleSite& site);

struct Insertion {
  ColoredGraph graph;
  DipoleSite site;       // the new edge; x and y are the two new vertices
  bool genuine = false;  // whether the new edge is a 1-dipole
};

// Inserts a dipole of color j next to u, where (u, neighbor(u, j)) is a
// j-colored edge: new vertex x takes over every non-j edge of u, new vertex y
// is joined to u by all those colors, and x --j-- y. Cancelling the new site
// gives back `g` exactly.
Insertion insert_1_dipole(const ColoredGraph& g, Vertex u, Color j);

// General insertion: for every color k != j one k-edge (a_k, b_k) is cut and
// re-attached as a_k --k-- x and y --k-- b_k; x --j-- y is added. For color d
// a missing entry leaves x and y without a d-edge. Cancelling the new site
// gives back `g` up to the position of the new vertices.
Insertion insert_1_dipole(const ColoredGraph& g, Color j,
                          const std::map<Color, std::optional<Edge>>& cut_edges);

// Random general insertion that produces a genuine 1-dipole (retries up to
// `attempts` times; falls back to the local insertion).
Insertion insert_random_1_dipole(const ColoredGraph& g, std::mt19937_64& rng, int attempts = 64);

struct RegularizationRecord {
  // Color capped per boundary component (index as in boundary_graph()).
  std::vector<Color> singular_color_choice;
  // Pairs of boundary vertices joined by a new color-d edge.
  std::vector<std::pair<Vertex, Vertex>> added_edges;
  // Transposition applied after capping; empty when colors differ per component.
  std::optional<std::pair<Color, Color>> color_swap;
};

struct Regularization {
  ColoredGraph graph;
  RegularizationRecord record;
};

// Joins by a color-d edge the two ends of every maximal {c,d}-colored path,
// with c chosen per boundary component. No color swap.
Regularization cap_boundary(const ColoredGraph& g, const std::vector<Color>& per_component);
Regularization cap_boundary(const ColoredGraph& g, Color c);

// Caps every boundary component with the same color c and then exchanges
// colors c and d, so that d becomes the singular color.
Regularization regularize(const ColoredGraph& g, Color c);
// With per-component colors only the capping step is performed.
Regularization regularize(const ColoredGraph& g, Color c,
                          const std::map<int, Color>& per_component);

struct ContractionStep {
  DipoleSite site;
  int vertices_after = 0;
};

struct Contraction {
  ColoredGraph graph;
  std::vector<ContractionStep> steps;
};

// Cancels 1-dipoles of colors 0..d-1, then of color d, until none are left.
// Colors ascending, sites by least vertex.
Contraction full_contraction(const ColoredGraph& g);

}  // namespace gemkit
