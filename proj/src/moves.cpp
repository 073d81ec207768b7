#include "gemkit/moves.hpp"

#include <algorithm>
#include <numeric>

#include "gemkit/boundary.hpp"
#include "gemkit/random_gem.hpp"

namespace gemkit {

namespace {

// Mutable adjacency used while rewriting.
struct Scratch {
  int d = 0;
  int n = 0;
  std::vector<Vertex> adj;

  explicit Scratch(const ColoredGraph& g, int extra = 0)
      : d(g.dimension()), n(g.num_vertices() + extra),
        adj(static_cast<std::size_t>(n) * (g.dimension() + 1), kNoVertex) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (Color c = 0; c <= d; ++c) at(v, c) = g.neighbor(v, c);
    }
  }

  Vertex& at(Vertex v, Color c) { return adj[static_cast<std::size_t>(v) * (d + 1) + c]; }

  void link(Vertex a, Vertex b, Color c) {
    at(a, c) = b;
    at(b, c) = a;
  }

  ColoredGraph build(const std::vector<bool>& removed = {}) {
    std::vector<Vertex> index(static_cast<std::size_t>(n), kNoVertex);
    int kept = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (removed.empty() || !removed[v]) index[v] = kept++;
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
      if (index[v] == kNoVertex) continue;
      for (Color c = 0; c <= d; ++c) {
        const Vertex w = at(v, c);
        if (w == kNoVertex || v > w) continue;
        if (index[w] == kNoVertex) {
          throw GemError(Errc::InternalInconsistency, "edge into a removed vertex");
        }
        edges.push_back({index[v], index[w], c});
      }
    }
    return validate(d, kept, edges);
  }
};

}  // namespace

std::vector<DipoleSite> find_1_dipoles(const ColoredGraph& g, Color color) {
  if (color < 0 || color > g.dimension()) {
    throw GemError(Errc::InvalidColor, "color " + std::to_string(color));
  }
  std::vector<DipoleSite> out;
  const auto comps = residues(g, g.colors().without(color));
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const Vertex y = g.neighbor(x, color);
    if (y != kNoVertex && x < y && comps.component_of[x] != comps.component_of[y]) {
      out.push_back({color, x, y});
    }
  }
  return out;
}

std::vector<DipoleSite> find_1_dipoles(const ColoredGraph& g) {
  std::vector<DipoleSite> out;
  for (Color c = 0; c <= g.dimension(); ++c) {
    const auto sites = find_1_dipoles(g, c);
    out.insert(out.end(), sites.begin(), sites.end());
  }
  return out;
}

bool is_1_dipole(const ColoredGraph& g, const DipoleSite& site) {
  if (site.color < 0 || site.color > g.dimension()) return false;
  if (site.x < 0 || site.x >= g.num_vertices() || site.y < 0 || site.y >= g.num_vertices()) return false;
  if (g.neighbor(site.x, site.color) != site.y) return false;
  const auto comps = residues(g, g.colors().without(site.color));
  return comps.component_of[site.x] != comps.component_of[site.y];
}

ColoredGraph cancel_1_dipole(const ColoredGraph& g, const DipoleSite& site) {
  if (!is_1_dipole(g, site)) {
    throw GemError(Errc::NotADipole, "edge (" + std::to_string(site.x) + "," +
                                         std::to_string(site.y) + ") of color " +
                                         std::to_string(site.color) + " is not a 1-dipole");
  }
  Scratch s(g);
  for (Color k = 0; k <= g.dimension(); ++k) {
    if (k == site.color) continue;
    const Vertex a = s.at(site.x, k), b = s.at(site.y, k);
    if ((a == kNoVertex) != (b == kNoVertex)) {
      throw GemError(Errc::WeldMismatch, "color " + std::to_string(k) +
                                             " is present at only one endpoint of the dipole");
    }
    if (a == kNoVertex) continue;
    if (a == site.y || b == site.x || a == b) {
      throw GemError(Errc::WeldMismatch, "welding color " + std::to_string(k) + " would create a loop");
    }
    s.link(a, b, k);
  }
  std::vector<bool> removed(static_cast<std::size_t>(g.num_vertices()), false);
  removed[site.x] = removed[site.y] = true;
  if (g.num_vertices() == 2) {
    throw GemError(Errc::WeldMismatch, "cannot cancel the only two vertices");
  }
  return s.build(removed);
}

Insertion insert_1_dipole(const ColoredGraph& g, Vertex u, Color j) {
  if (u < 0 || u >= g.num_vertices() || j < 0 || j > g.dimension() || !g.has_edge(u, j)) {
    throw GemError(Errc::NoSuchEdge, "vertex " + std::to_string(u) + " has no edge of color " +
                                         std::to_string(j));
  }
  Scratch s(g, 2);
  const Vertex x = g.num_vertices(), y = g.num_vertices() + 1;
  for (Color k = 0; k <= g.dimension(); ++k) {
    if (k == j) continue;
    const Vertex w = g.neighbor(u, k);
    if (w == kNoVertex) continue;
    s.link(x, w, k);
    s.link(u, y, k);
  }
  s.link(x, y, j);
  Insertion out{s.build(), {j, x, y}, false};
  out.genuine = is_1_dipole(out.graph, out.site);
  return out;
}

Insertion insert_1_dipole(const ColoredGraph& g, Color j,
                          const std::map<Color, std::optional<Edge>>& cut_edges) {
  const Color d = g.dimension();
  if (j < 0 || j > d) throw GemError(Errc::InvalidColor, "color " + std::to_string(j));
  Scratch s(g, 2);
  const Vertex x = g.num_vertices(), y = g.num_vertices() + 1;
  for (Color k = 0; k <= d; ++k) {
    if (k == j) continue;
    const auto it = cut_edges.find(k);
    if (it == cut_edges.end() || !it->second) {
      if (k == d) continue;
      throw GemError(Errc::NoSuchEdge, "no edge of color " + std::to_string(k) + " given");
    }
    const Edge& e = *it->second;
    if (e.color != k || e.u < 0 || e.u >= g.num_vertices() || g.neighbor(e.u, k) != e.v) {
      throw GemError(Errc::NoSuchEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                           ") is not an edge of color " + std::to_string(k));
    }
    s.link(e.u, x, k);
    s.link(e.v, y, k);
  }
  s.link(x, y, j);
  Insertion out{s.build(), {j, x, y}, false};
  out.genuine = is_1_dipole(out.graph, out.site);
  return out;
}

Insertion insert_random_1_dipole(const ColoredGraph& g, std::mt19937_64& rng, int attempts) {
  const Color d = g.dimension();
  std::vector<std::vector<Edge>> by_color(static_cast<std::size_t>(d + 1));
  for (const Edge& e : g.edges()) by_color[e.color].push_back(e);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    const auto j = static_cast<Color>(uniform_below(rng, static_cast<std::uint64_t>(d + 1)));
    std::map<Color, std::optional<Edge>> cuts;
    for (Color k = 0; k <= d; ++k) {
      if (k == j) continue;
      const auto& pool = by_color[k];
      const bool skip_d = k == d && (pool.empty() || (!g.is_regular() && uniform_below(rng, 2) == 0));
      if (skip_d) {
        cuts[k] = std::nullopt;
        continue;
      }
      Edge e = pool[uniform_below(rng, pool.size())];
      if (uniform_below(rng, 2) == 1) std::swap(e.u, e.v);
      cuts[k] = e;
    }
    auto ins = insert_1_dipole(g, j, cuts);
    if (ins.genuine) return ins;
  }
  const auto u = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(g.num_vertices())));
  return insert_1_dipole(g, u, static_cast<Color>(uniform_below(rng, static_cast<std::uint64_t>(d))));
}

Regularization cap_boundary(const ColoredGraph& g, const std::vector<Color>& per_component) {
  const auto boundary = boundary_graph(g);
  const Color d = g.dimension();
  if (static_cast<int>(per_component.size()) != boundary.components) {
    throw GemError(Errc::Precondition, "need one color per boundary component");
  }
  for (Color c : per_component) {
    if (c < 0 || c >= d) throw GemError(Errc::InvalidColor, "capping color " + std::to_string(c));
  }

  Scratch s(g);
  Regularization out{g, {per_component, {}, std::nullopt}};
  for (std::size_t k = 0; k < boundary.parent_vertex.size(); ++k) {
    const Vertex u = boundary.parent_vertex[k];
    const Color c = per_component[boundary.component_of[k]];
    Vertex v = g.neighbor(u, c);
    while (g.has_edge(v, d)) v = g.neighbor(g.neighbor(v, d), c);
    if (u < v) {
      s.link(u, v, d);
      out.record.added_edges.emplace_back(u, v);
    }
  }
  out.graph = s.build();
  return out;
}

Regularization cap_boundary(const ColoredGraph& g, Color c) {
  const int h = boundary_component_count(g);
  if (h == 0) throw GemError(Errc::NoBoundary, "graph is regular");
  return cap_boundary(g, std::vector<Color>(static_cast<std::size_t>(h), c));
}

Regularization regularize(const ColoredGraph& g, Color c) { return regularize(g, c, {}); }

Regularization regularize(const ColoredGraph& g, Color c, const std::map<int, Color>& per_component) {
  const Color d = g.dimension();
  if (g.is_regular()) throw GemError(Errc::NoBoundary, "graph is regular");
  if (c < 0 || c >= d) throw GemError(Errc::InvalidColor, "singular color must lie in 0..d-1");
  const int h = boundary_component_count(g);
  std::vector<Color> choice(static_cast<std::size_t>(h), c);
  for (const auto& [component, color] : per_component) {
    if (component < 0 || component >= h) {
      throw GemError(Errc::Precondition, "no boundary component " + std::to_string(component));
    }
    choice[component] = color;
  }
  auto out = cap_boundary(g, choice);
  const bool uniform = std::all_of(choice.begin(), choice.end(), [&](Color x) { return x == c; });
  if (uniform) {
    std::vector<Color> perm(static_cast<std::size_t>(d + 1));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[c], perm[d]);
    out.graph = permute_colors(out.graph, perm);
    out.record.color_swap = std::make_pair(c, d);
  }
  return out;
}

namespace {

std::optional<DipoleSite> first_cancellable(const ColoredGraph& g, Color color) {
  for (const auto& site : find_1_dipoles(g, color)) {
    if (g.num_vertices() <= 2) return std::nullopt;
    const bool bx = g.is_boundary_vertex(site.x), by = g.is_boundary_vertex(site.y);
    if (bx == by) return site;
  }
  return std::nullopt;
}

}  // namespace

Contraction full_contraction(const ColoredGraph& g) {
  Contraction out{g, {}};
  const Color d = g.dimension();
  while (true) {
    std::optional<DipoleSite> site;
    for (Color c = 0; c < d && !site; ++c) site = first_cancellable(out.graph, c);
    if (!site) site = first_cancellable(out.graph, d);
    if (!site) break;
    out.graph = cancel_1_dipole(out.graph, *site);
    out.steps.push_back({*site, out.graph.num_vertices()});
  }
  return out;
}

}  // namespace gemkit
