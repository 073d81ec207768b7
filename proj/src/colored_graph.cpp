#include "gemkit/colored_graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

#include "gemkit/detail/disjoint_sets.hpp"

namespace gemkit {

bool canonical_less(const Edge& a, const Edge& b) {
  if (a.color != b.color) return a.color < b.color;
  const auto amin = std::min(a.u, a.v), bmin = std::min(b.u, b.v);
  if (amin != bmin) return amin < bmin;
  return std::max(a.u, a.v) < std::max(b.u, b.v);
}

ColorSet::ColorSet(std::initializer_list<Color> colors)
    : ColorSet(std::span<const Color>(colors.begin(), colors.size())) {}

ColorSet::ColorSet(std::span<const Color> colors) {
  for (Color c : colors) {
    if (c < 0 || c >= kMaxColors) {
      throw GemError(Errc::InvalidColor, "color " + std::to_string(c) + " out of range");
    }
    mask_ |= 1u << c;
  }
}

int ColorSet::size() const { return std::popcount(mask_); }

Color ColorSet::max_color() const {
  return mask_ == 0 ? -1 : 31 - std::countl_zero(mask_);
}

ColorSet ColorSet::with(Color c) const { return from_mask(mask_ | (1u << c)); }
ColorSet ColorSet::without(Color c) const { return from_mask(mask_ & ~(1u << c)); }

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (Color c = 0; c < kMaxColors; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

std::string ColorSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Color c : to_vector()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  for (Color c = 0; c <= dimension_; ++c) {
    for (Vertex v = 0; v < num_vertices_; ++v) {
      const Vertex w = neighbor(v, c);
      if (w != kNoVertex && v < w) out.push_back({v, w, c});
    }
  }
  return out;
}

int ColoredGraph::edge_count(Color c) const {
  int count = 0;
  for (Vertex v = 0; v < num_vertices_; ++v) {
    if (has_edge(v, c)) ++count;
  }
  return count / 2;
}

namespace {

std::string vertex_msg(Vertex v) { return "vertex " + std::to_string(v); }

}  // namespace

ColoredGraph validate(int dimension, int num_vertices, std::span<const Edge> edges,
                      const ValidationOptions& options) {
  if (dimension < options.min_dimension || dimension + 1 > kMaxColors) {
    throw GemError(Errc::InvalidDimension, "dimension " + std::to_string(dimension));
  }
  if (num_vertices <= 0) {
    throw GemError(Errc::InvalidVertex, "vertex count must be positive, got " +
                                            std::to_string(num_vertices));
  }

  ColoredGraph g;
  g.dimension_ = dimension;
  g.num_vertices_ = num_vertices;
  g.adjacency_.assign(static_cast<std::size_t>(num_vertices) * (dimension + 1), kNoVertex);

  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    const std::string where = "edge #" + std::to_string(k) + " [" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "," + std::to_string(e.color) + "]";
    if (e.color < 0 || e.color > dimension) throw GemError(Errc::InvalidColor, where);
    if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices) {
      throw GemError(Errc::InvalidVertex, where);
    }
    if (e.u == e.v) throw GemError(Errc::LoopEdge, where);
    for (Vertex x : {e.u, e.v}) {
      if (g.adjacency_[g.index(x, e.color)] != kNoVertex) {
        throw GemError(Errc::DuplicateColorAtVertex, where + " at " + vertex_msg(x));
      }
    }
    g.adjacency_[g.index(e.u, e.color)] = e.v;
    g.adjacency_[g.index(e.v, e.color)] = e.u;
  }

  int boundary = 0;
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (!g.has_edge(v, dimension)) ++boundary;
  }
  if (boundary % 2 != 0) {
    throw GemError(Errc::OddBoundaryCount, std::to_string(boundary) + " boundary vertices");
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    for (Color c = 0; c < dimension; ++c) {
      if (!g.has_edge(v, c)) {
        throw GemError(Errc::MissingNonFinalColor,
                       vertex_msg(v) + " has no edge of color " + std::to_string(c));
      }
    }
  }
  g.regular_ = boundary == 0;

  // Two-coloring by BFS also tells us connectivity.
  std::vector<int> side(static_cast<std::size_t>(num_vertices), -1);
  bool bipartite = true;
  int components = 0;
  for (Vertex s = 0; s < num_vertices; ++s) {
    if (side[s] != -1) continue;
    ++components;
    side[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Color c = 0; c <= dimension; ++c) {
        const Vertex w = g.neighbor(v, c);
        if (w == kNoVertex) continue;
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          bipartite = false;
        }
      }
    }
  }
  g.bipartite_ = bipartite;
  g.connected_ = components == 1;
  if (options.require_connected && !g.connected_) {
    throw GemError(Errc::Disconnected, std::to_string(components) + " connected components");
  }
  return g;
}

ColoredGraph permute_colors(const ColoredGraph& g, std::span<const Color> perm,
                            const ValidationOptions& options) {
  if (static_cast<int>(perm.size()) != g.num_colors()) {
    throw GemError(Errc::InvalidColor, "color permutation has wrong size");
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.color = perm[e.color];
  return validate(g.dimension(), g.num_vertices(), edges, options);
}

ColoredGraph relabel_vertices(const ColoredGraph& g, std::span<const Vertex> relabel) {
  if (static_cast<int>(relabel.size()) != g.num_vertices()) {
    throw GemError(Errc::InvalidVertex, "relabeling has wrong size");
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    e.u = relabel[e.u];
    e.v = relabel[e.v];
  }
  return validate(g.dimension(), g.num_vertices(), edges,
                  {.min_dimension = 1, .require_connected = g.is_connected()});
}

int ResidueDecomposition::regular_count() const {
  return static_cast<int>(std::count(regular.begin(), regular.end(), true));
}

namespace {

void check_colors(const ColoredGraph& g, ColorSet colors) {
  if ((colors.mask() & ~g.colors().mask()) != 0) {
    throw GemError(Errc::InvalidColor,
                   "color set " + colors.to_string() + " is not contained in {0.." +
                       std::to_string(g.dimension()) + "}");
  }
}

detail::DisjointSets union_colors(const ColoredGraph& g, ColorSet colors) {
  detail::DisjointSets sets(g.num_vertices());
  for (Color c : colors.to_vector()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const Vertex w = g.neighbor(v, c);
      if (w != kNoVertex && v < w) sets.unite(v, w);
    }
  }
  return sets;
}

}  // namespace

ResidueDecomposition residues(const ColoredGraph& g, ColorSet colors) {
  check_colors(g, colors);
  auto sets = union_colors(g, colors);

  ResidueDecomposition out;
  out.colors = colors;
  out.component_of.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<int> root_index(static_cast<std::size_t>(g.num_vertices()), -1);
  // Scanning vertices in ascending order numbers components by least vertex.
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int r = sets.find(v);
    if (root_index[r] == -1) {
      root_index[r] = out.count();
      out.components.emplace_back();
      out.regular.push_back(true);
    }
    const int k = root_index[r];
    out.component_of[v] = k;
    out.components[k].push_back(v);
    for (Color c : colors.to_vector()) {
      if (!g.has_edge(v, c)) out.regular[k] = false;
    }
  }
  return out;
}

ResidueCount count_g(const ColoredGraph& g, ColorSet colors) {
  const auto r = residues(g, colors);
  return {r.count(), r.regular_count()};
}

int g_of(const ColoredGraph& g, ColorSet colors) {
  check_colors(g, colors);
  return union_colors(g, colors).sets();
}

VertexClassification classify_vertices(const ColoredGraph& g) {
  VertexClassification out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    (g.is_boundary_vertex(v) ? out.boundary_vertices : out.internal_vertices).push_back(v);
  }
  out.p_bar = static_cast<int>(out.boundary_vertices.size()) / 2;
  out.p_dot = static_cast<int>(out.internal_vertices.size()) / 2;
  return out;
}

std::vector<bool> is_contracted(const ColoredGraph& g) {
  std::vector<bool> out;
  for (Color c = 0; c <= g.dimension(); ++c) {
    out.push_back(g_of(g, g.colors().without(c)) == 1);
  }
  return out;
}

bool is_fully_contracted(const ColoredGraph& g) {
  const auto flags = is_contracted(g);
  return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

bool is_crystallization(const ColoredGraph& g, int boundary_components) {
  if (boundary_components < 0) {
    throw GemError(Errc::NonPositiveH, "boundary component count " +
                                           std::to_string(boundary_components));
  }
  if (g.is_regular() && boundary_components == 0) return is_fully_contracted(g);
  const Color d = g.dimension();
  if (g_of(g, g.colors().without(d)) != 1) return false;
  for (Color c = 0; c < d; ++c) {
    if (g_of(g, g.colors().without(c)) != boundary_components) return false;
  }
  return true;
}

ColoredGraph order_two_gem(int d) {
  std::vector<Edge> edges;
  for (Color c = 0; c <= d; ++c) edges.push_back({0, 1, c});
  return validate(d, 2, edges, {.min_dimension = 1});
}

}  // namespace gemkit
