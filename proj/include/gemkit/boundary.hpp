#pragma once

#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// The d-colored graph on the boundary vertices of a gem with boundary: two
// boundary vertices are joined by color j iff the maximal path alternating
// colors j and d that leaves one of them ends at the other.
struct BoundaryGraph {
  ColoredGraph graph;                // dimension d-1, regular, possibly disconnected
  std::vector<Vertex> parent_vertex;  // boundary vertex index -> parent vertex
  std::vector<int> component_of;     // boundary vertex index -> component
  int components = 0;

  // Component k as a standalone connected graph, vertices in ascending order.
  ColoredGraph component(int k) const;
};

BoundaryGraph boundary_graph(const ColoredGraph& g);

// Components of the boundary graph restricted to `colors` (colors must avoid d).
int boundary_g(const ColoredGraph& g, ColorSet colors);
int boundary_g(const BoundaryGraph& boundary, ColorSet colors);

// Number of boundary components; zero for regular graphs.
int boundary_component_count(const ColoredGraph& g);

enum class Sphericity { ProvenSphere, Unknown };

// Genus-zero certificate for a closed regular gem (sound in every dimension
// handled here; in particular regular genus zero characterizes S^3).
Sphericity sphericity_heuristic(const ColoredGraph& component);

}  // namespace gemkit
