#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gemkit/colored_graph.hpp"
#include "gemkit/permutations.hpp"

namespace gemkit {

// Integers as JSON integers, halves as JSON numbers.
inline nlohmann::ordered_json half_json(HalfInt v) {
  if (v.is_integer()) return v.twice() / 2;
  return v.to_double();
}

struct CheckItem {
  std::string name;
  bool holds = true;
  std::string detail;
};

// Outcome of an identity or bound check. A failed item is a mathematical
// inconsistency, not an error.
struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;
  std::vector<std::string> notes;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  bool holds() const;
  int failures() const;
  void add(std::string name, bool holds, std::string detail = {});
  void merge(const CheckReport& other);
};

// (eps_1, eps_3, eps_0, eps_2, 4) in canonical form.
CyclicPermutation omega_partner(const CyclicPermutation& eps);

// omega_G = 6 (rho_eps + rho_eps') with the pair sum independent of eps.
CheckReport check_omega_pairing(const ColoredGraph& g, int threads = 1);

// Component-count identities for the graph capped with color c (before the
// color exchange), and the transfer of rho_eps from `g` to the capped graph.
// The case c not in {eps_0, eps_{d-1}} is asserted only when the boundary is
// connected and its {eps_0, eps_{d-1}, c}-residue consists of spheres;
// the exact general relation
//   2 (rho_eps(capped) - rho_eps(g)) = pbar + dg(a,b) - dg(a,c) - dg(b,c)
// is asserted for every eps.
CheckReport check_lemma_identities(const ColoredGraph& g, Color c);
CheckReport check_corollary_transfer(const ColoredGraph& g, Color c);
CheckReport check_regularization_identities(const ColoredGraph& g, Color c);

// Whether every component of the {a,b,c}-residue of the boundary graph is a
// sphere (Euler characteristic 2).
bool boundary_triple_is_spherical(const ColoredGraph& g, Color a, Color b, Color c);

struct LowerBound {
  long long genus_bound = 0;
  long long gdegree_bound = 0;
};

// 2 chi + 3 m + 2 h - 4 + 2 m_hat and twelve times that; needs h >= 1.
LowerBound lower_bound_thm(long long chi_m, long long m, long long h, long long m_hat);

// rho_eps >= genus bound for all eps and omega_G >= G-degree bound; the slack
// is reported per permutation.
CheckReport check_bound_on_gem(const ColoredGraph& g, long long chi_m, long long m, long long h,
                               long long m_hat, int threads = 1);

struct SemisimpleResult {
  bool semi_simple = false;
  std::vector<CyclicPermutation> weak_witnesses;
};

SemisimpleResult check_semisimple(const ColoredGraph& g, long long m, long long m_hat, long long h);

// 2p = 6 chi + 2 sum g_ijk - 30 for a regular 5-colored graph whose residues
// missing one color of 0..3 are connected.
CheckReport check_dehn_sommerville(const ColoredGraph& g);

// 6 (chi_M - 1 + p - 1) next to omega_G. Equality is only asserted when the
// caller states that the gem has minimal order.
CheckReport gem_complexity_relation(const ColoredGraph& g, long long chi_m, bool claimed_minimal = false,
                                    int threads = 1);

// Cancels every 1-dipole of `g` in turn (or, when there is none, inserts one
// and cancels it again) and compares f-vector, chi, rho_eps and H_1.
CheckReport check_dipole_invariance(const ColoredGraph& g, int threads = 1);

// Checks one cancellation: `before` contains the dipole, `after` is the result.
CheckReport check_dipole_step(const ColoredGraph& before, const ColoredGraph& after, int threads = 1);

// Expected f-vector drop for one cancellation on a regular graph.
std::vector<long long> dipole_f_delta(int d);

}  // namespace gemkit
