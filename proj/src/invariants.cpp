#include "gemkit/invariants.hpp"

#include "gemkit/boundary.hpp"
#include "gemkit/detail/parallel.hpp"

namespace gemkit {

std::vector<long long> f_vector(const ColoredGraph& g) {
  const int d = g.dimension();
  std::vector<long long> f(static_cast<std::size_t>(d + 1), 0);
  const std::uint32_t full = g.colors().mask();
  for (std::uint32_t b = 1; b <= full; ++b) {
    const auto chosen = ColorSet::from_mask(b);
    f[chosen.size() - 1] += g_of(g, chosen.complement_in(d));
  }
  return f;
}

long long euler_characteristic(const std::vector<long long>& f) {
  long long chi = 0;
  for (std::size_t h = 0; h < f.size(); ++h) chi += (h % 2 == 0 ? 1 : -1) * f[h];
  return chi;
}

long long euler_characteristic(const ColoredGraph& g) { return euler_characteristic(f_vector(g)); }

namespace {

// Pairwise residue counts shared by every permutation.
struct PairCounts {
  int d = 0;
  std::vector<int> table;  // (d+1)^2, symmetric
  bool bipartite = false;

  int at(Color i, Color j) const { return table[static_cast<std::size_t>(i * (d + 1) + j)]; }
};

PairCounts closed_counts(const ColoredGraph& g) {
  PairCounts pc{g.dimension(), std::vector<int>(static_cast<std::size_t>(g.num_colors() * g.num_colors()), 0),
                g.is_bipartite()};
  for (Color i = 0; i <= pc.d; ++i) {
    for (Color j = i + 1; j <= pc.d; ++j) {
      const int v = g_of(g, {i, j});
      pc.table[static_cast<std::size_t>(i * (pc.d + 1) + j)] = v;
      pc.table[static_cast<std::size_t>(j * (pc.d + 1) + i)] = v;
    }
  }
  return pc;
}

struct BoundaryCounts {
  PairCounts regular;   // gdot for every pair
  PairCounts boundary;  // dg for pairs inside {0..d-1}
  int p_dot = 0;
  int p_bar = 0;
};

BoundaryCounts boundary_counts(const ColoredGraph& g) {
  const int d = g.dimension();
  const auto n = static_cast<std::size_t>((d + 1) * (d + 1));
  BoundaryCounts bc{{d, std::vector<int>(n, 0), g.is_bipartite()},
                    {d, std::vector<int>(n, 0), g.is_bipartite()}};
  const auto boundary = boundary_graph(g);
  for (Color i = 0; i <= d; ++i) {
    for (Color j = i + 1; j <= d; ++j) {
      const int dot = count_g(g, {i, j}).g_dot;
      bc.regular.table[static_cast<std::size_t>(i * (d + 1) + j)] = dot;
      bc.regular.table[static_cast<std::size_t>(j * (d + 1) + i)] = dot;
      if (j < d) {
        const int dg = boundary_g(boundary, {i, j});
        bc.boundary.table[static_cast<std::size_t>(i * (d + 1) + j)] = dg;
        bc.boundary.table[static_cast<std::size_t>(j * (d + 1) + i)] = dg;
      }
    }
  }
  const auto classes = classify_vertices(g);
  bc.p_dot = classes.p_dot;
  bc.p_bar = classes.p_bar;
  return bc;
}

long long cyclic_sum(const PairCounts& pc, const CyclicPermutation& eps) {
  long long sum = 0;
  for (int i = 0; i <= pc.d; ++i) sum += pc.at(eps.at(i), eps.at(i + 1));
  return sum;
}

HalfInt finish(long long euler, bool bipartite, const CyclicPermutation& eps) {
  // 2 - 2 rho = euler
  const auto r = HalfInt::from_twice(2 - euler);
  if (bipartite && !r.is_integer()) {
    throw GemError(Errc::NonIntegralGenusForBipartite,
                   "bipartite graph gives rho = " + r.to_string() + " for " + eps.to_string());
  }
  return r;
}

void check_eps(const ColoredGraph& g, const CyclicPermutation& eps) {
  if (eps.dimension() != g.dimension()) {
    throw GemError(Errc::Dimension, "permutation " + eps.to_string() + " does not match dimension " +
                                        std::to_string(g.dimension()));
  }
}

HalfInt rho_closed_from(const PairCounts& pc, int p, const CyclicPermutation& eps) {
  return finish(cyclic_sum(pc, eps) + static_cast<long long>(1 - pc.d) * p, pc.bipartite, eps);
}

HalfInt rho_boundary_from(const BoundaryCounts& bc, const CyclicPermutation& eps) {
  const int d = bc.regular.d;
  const long long euler = cyclic_sum(bc.regular, eps) + static_cast<long long>(1 - d) * bc.p_dot +
                          static_cast<long long>(2 - d) * bc.p_bar +
                          bc.boundary.at(eps[0], eps[static_cast<std::size_t>(d - 1)]);
  return finish(euler, bc.regular.bipartite, eps);
}

}  // namespace

HalfInt rho_closed(const ColoredGraph& g, const CyclicPermutation& eps) {
  if (!g.is_regular()) throw GemError(Errc::NotRegular, "closed formula needs a regular graph");
  check_eps(g, eps);
  return rho_closed_from(closed_counts(g), g.order_half(), eps);
}

HalfInt rho_boundary(const ColoredGraph& g, const CyclicPermutation& eps) {
  if (g.is_regular()) throw GemError(Errc::NoBoundary, "boundary formula needs a graph with boundary");
  check_eps(g, eps);
  return rho_boundary_from(boundary_counts(g), eps);
}

HalfInt rho(const ColoredGraph& g, const CyclicPermutation& eps) {
  return g.is_regular() ? rho_closed(g, eps) : rho_boundary(g, eps);
}

std::vector<RhoEntry> rho_table(const ColoredGraph& g, int threads) {
  const auto perms = enumerate_cyclic_permutations(g.dimension());
  std::vector<HalfInt> values;
  if (g.is_regular()) {
    const auto pc = closed_counts(g);
    const int p = g.order_half();
    values = detail::parallel_map(perms.size(), threads,
                                  [&](std::size_t k) { return rho_closed_from(pc, p, perms[k]); });
  } else {
    const auto bc = boundary_counts(g);
    values = detail::parallel_map(perms.size(), threads,
                                  [&](std::size_t k) { return rho_boundary_from(bc, perms[k]); });
  }
  std::vector<RhoEntry> out;
  out.reserve(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k) out.push_back({perms[k], values[k]});
  return out;
}

GenusResult regular_genus(const ColoredGraph& g, int threads) {
  GenusResult out;
  out.table = rho_table(g, threads);
  out.value = out.table.front().rho;
  for (const auto& e : out.table) out.value = std::min(out.value, e.rho);
  for (const auto& e : out.table) {
    if (e.rho == out.value) out.argmin.push_back(e.eps);
  }
  return out;
}

HalfInt gurau_degree(const ColoredGraph& g, int threads) {
  if (!g.is_regular()) throw GemError(Errc::NotRegular, "G-degree needs a regular graph");
  HalfInt sum;
  for (const auto& e : rho_table(g, threads)) sum += e.rho;
  return sum;
}

}  // namespace gemkit
