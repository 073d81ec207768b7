#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gemkit/errors.hpp"

namespace gemkit {

using Vertex = int;
using Color = int;

inline constexpr Vertex kNoVertex = -1;
inline constexpr int kMaxColors = 32;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Canonical edge order: by color, then least endpoint, then other endpoint.
bool canonical_less(const Edge& a, const Edge& b);

// A subset of the color set {0, ..., d}, stored as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors);
  explicit ColorSet(std::span<const Color> colors);

  static constexpr ColorSet from_mask(std::uint32_t mask) {
    ColorSet s;
    s.mask_ = mask;
    return s;
  }
  // {0, ..., d}
  static constexpr ColorSet all(int d) {
    return from_mask(d + 1 >= 32 ? ~0u : ((1u << (d + 1)) - 1u));
  }

  constexpr bool contains(Color c) const { return c >= 0 && c < kMaxColors && (mask_ >> c) & 1u; }
  constexpr std::uint32_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  Color max_color() const;

  ColorSet with(Color c) const;
  ColorSet without(Color c) const;
  ColorSet complement_in(int d) const { return from_mask(all(d).mask_ & ~mask_); }
  std::vector<Color> to_vector() const;
  std::string to_string() const;

  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

struct ValidationOptions {
  int min_dimension = 2;
  bool require_connected = true;
};

// A (d+1)-edge-colored multigraph in which every color class is a matching,
// colors 0..d-1 are perfect and color d may be missing at some vertices.
// Immutable once built by validate().
class ColoredGraph {
 public:
  int dimension() const { return dimension_; }
  int num_colors() const { return dimension_ + 1; }
  int num_vertices() const { return num_vertices_; }
  // Half the vertex count.
  int order_half() const { return num_vertices_ / 2; }
  Color boundary_color() const { return dimension_; }
  ColorSet colors() const { return ColorSet::all(dimension_); }

  Vertex neighbor(Vertex v, Color c) const { return adjacency_[index(v, c)]; }
  bool has_edge(Vertex v, Color c) const { return neighbor(v, c) != kNoVertex; }
  bool is_boundary_vertex(Vertex v) const { return !has_edge(v, dimension_); }

  // Perfect matching in color d.
  bool is_regular() const { return regular_; }
  bool is_bipartite() const { return bipartite_; }
  bool is_connected() const { return connected_; }

  // Edges in canonical order, each with u < v.
  std::vector<Edge> edges() const;
  int edge_count(Color c) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.dimension_ == b.dimension_ && a.num_vertices_ == b.num_vertices_ &&
           a.adjacency_ == b.adjacency_;
  }

 private:
  friend ColoredGraph validate(int, int, std::span<const Edge>, const ValidationOptions&);

  std::size_t index(Vertex v, Color c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(dimension_ + 1) +
           static_cast<std::size_t>(c);
  }

  int dimension_ = 0;
  int num_vertices_ = 0;
  std::vector<Vertex> adjacency_;
  bool regular_ = false;
  bool bipartite_ = false;
  bool connected_ = false;
};

// Checks the raw edge list and builds a member of the class of graphs that are
// regular with respect to color d.
ColoredGraph validate(int dimension, int num_vertices, std::span<const Edge> edges,
                      const ValidationOptions& options = {});

// Renames colors: result has an edge of color perm[c] wherever `g` has color c.
// perm must fix membership requirements (it is validated again).
ColoredGraph permute_colors(const ColoredGraph& g, std::span<const Color> perm,
                            const ValidationOptions& options = {});

// Relabels vertices: vertex v becomes relabel[v].
ColoredGraph relabel_vertices(const ColoredGraph& g, std::span<const Vertex> relabel);

struct ResidueDecomposition {
  ColorSet colors;
  // Components sorted by least vertex; vertices inside a component ascending.
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> regular;
  std::vector<int> component_of;

  int count() const { return static_cast<int>(components.size()); }
  int regular_count() const;
};

ResidueDecomposition residues(const ColoredGraph& g, ColorSet colors);

struct ResidueCount {
  int g = 0;
  int g_dot = 0;
};

ResidueCount count_g(const ColoredGraph& g, ColorSet colors);

// Number of connected components of the residue (g_B).
int g_of(const ColoredGraph& g, ColorSet colors);

struct VertexClassification {
  std::vector<Vertex> boundary_vertices;
  std::vector<Vertex> internal_vertices;
  int p_bar = 0;
  int p_dot = 0;

  int p() const { return p_bar + p_dot; }
};

VertexClassification classify_vertices(const ColoredGraph& g);

// For each color c, whether the residue on all colors except c is connected.
std::vector<bool> is_contracted(const ColoredGraph& g);
bool is_fully_contracted(const ColoredGraph& g);

bool is_crystallization(const ColoredGraph& g, int boundary_components);

// Smallest sphere gem: two vertices joined by every color 0..d.
ColoredGraph order_two_gem(int d);

}  // namespace gemkit
