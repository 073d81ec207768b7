#include "gemkit/boundary.hpp"

#include "gemkit/invariants.hpp"

namespace gemkit {

BoundaryGraph boundary_graph(const ColoredGraph& g) {
  if (g.is_regular()) throw GemError(Errc::NoBoundary, "graph is regular");
  const Color d = g.dimension();

  BoundaryGraph out;
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.is_boundary_vertex(v)) {
      local[v] = static_cast<int>(out.parent_vertex.size());
      out.parent_vertex.push_back(v);
    }
  }

  std::vector<Edge> edges;
  for (Vertex u : out.parent_vertex) {
    for (Color j = 0; j < d; ++j) {
      // u has no d-edge, so the walk starts with color j and stops at the
      // first vertex without a d-edge.
      Vertex x = g.neighbor(u, j);
      int steps = 0;
      while (g.has_edge(x, d)) {
        x = g.neighbor(g.neighbor(x, d), j);
        if (++steps > g.num_vertices()) {
          throw GemError(Errc::InternalInconsistency, "alternating path does not terminate");
        }
      }
      if (local[x] < 0 || x == u) {
        throw GemError(Errc::InternalInconsistency, "alternating path ends at a non-boundary vertex");
      }
      if (local[u] < local[x]) edges.push_back({local[u], local[x], j});
    }
  }

  out.graph = validate(d - 1, static_cast<int>(out.parent_vertex.size()), edges,
                       {.min_dimension = 1, .require_connected = false});
  const auto comps = residues(out.graph, out.graph.colors());
  out.component_of = comps.component_of;
  out.components = comps.count();
  return out;
}

ColoredGraph BoundaryGraph::component(int k) const {
  if (k < 0 || k >= components) {
    throw GemError(Errc::Precondition, "no boundary component " + std::to_string(k));
  }
  std::vector<int> local(static_cast<std::size_t>(graph.num_vertices()), -1);
  int n = 0;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (component_of[v] == k) local[v] = n++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (component_of[e.u] == k) edges.push_back({local[e.u], local[e.v], e.color});
  }
  return validate(graph.dimension(), n, edges, {.min_dimension = 1});
}

int boundary_g(const BoundaryGraph& boundary, ColorSet colors) {
  if (colors.contains(boundary.graph.dimension() + 1)) {
    throw GemError(Errc::InvalidColor, "boundary color may not be used on the boundary graph");
  }
  return g_of(boundary.graph, colors);
}

int boundary_g(const ColoredGraph& g, ColorSet colors) {
  if (colors.contains(g.dimension())) {
    throw GemError(Errc::InvalidColor, "boundary color may not be used on the boundary graph");
  }
  return boundary_g(boundary_graph(g), colors);
}

int boundary_component_count(const ColoredGraph& g) {
  if (g.is_regular()) return 0;
  return boundary_graph(g).components;
}

Sphericity sphericity_heuristic(const ColoredGraph& component) {
  if (!component.is_regular()) throw GemError(Errc::NotRegular, "component is not regular");
  const auto genus = regular_genus(component);
  return genus.value.is_zero() ? Sphericity::ProvenSphere : Sphericity::Unknown;
}

}  // namespace gemkit
