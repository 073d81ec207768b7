#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gemkit/colored_graph.hpp"
#include "gemkit/invariants.hpp"

namespace gemkit {

struct GTableEntry {
  ColorSet colors;
  int g = 0;
  int g_dot = 0;
};

// Everything computed for one gem.
struct InvariantReport {
  int dimension = 0;
  int vertices = 0;
  int p = 0;
  int p_bar = 0;
  int p_dot = 0;
  bool regular = false;
  bool bipartite = false;
  int boundary_components = 0;
  std::vector<GTableEntry> g_table;  // all pairs, then all triples
  std::vector<long long> f_vector;
  long long chi = 0;
  std::vector<RhoEntry> rho_table;
  HalfInt rho_min;
  std::optional<HalfInt> omega_g;  // regular graphs only
  std::map<std::string, bool> bound_checks;
};

InvariantReport compute_report(const ColoredGraph& g, int threads = 1);

nlohmann::ordered_json to_json(const InvariantReport& report);

}  // namespace gemkit
