#pragma once

#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/permutations.hpp"

namespace gemkit {

// f_h = number of h-simplices of the associated simplicial cell complex:
// the sum over (h+1)-subsets B of the component count of the residue on the
// complementary colors.
std::vector<long long> f_vector(const ColoredGraph& g);

long long euler_characteristic(const ColoredGraph& g);
long long euler_characteristic(const std::vector<long long>& f);

// Regular genus with respect to eps for a regular graph:
//   2 - 2 rho = sum_i g(eps_i, eps_{i+1}) + (1 - d) p.
HalfInt rho_closed(const ColoredGraph& g, const CyclicPermutation& eps);

// Regular genus with respect to eps for a graph with boundary:
//   2 - 2 rho = sum_i gdot(eps_i, eps_{i+1}) + (1 - d) pdot + (2 - d) pbar
//               + dg(eps_0, eps_{d-1}).
HalfInt rho_boundary(const ColoredGraph& g, const CyclicPermutation& eps);

// rho_closed or rho_boundary depending on regularity.
HalfInt rho(const ColoredGraph& g, const CyclicPermutation& eps);

struct RhoEntry {
  CyclicPermutation eps;
  HalfInt rho;
};

std::vector<RhoEntry> rho_table(const ColoredGraph& g, int threads = 1);

struct GenusResult {
  HalfInt value;
  std::vector<CyclicPermutation> argmin;
  std::vector<RhoEntry> table;
};

GenusResult regular_genus(const ColoredGraph& g, int threads = 1);

// Sum of rho over all canonical cyclic permutations (regular graphs only).
HalfInt gurau_degree(const ColoredGraph& g, int threads = 1);

}  // namespace gemkit
