#include "gemkit/report.hpp"

#include "gemkit/boundary.hpp"
#include "gemkit/checks.hpp"

namespace gemkit {

InvariantReport compute_report(const ColoredGraph& g, int threads) {
  InvariantReport r;
  const int d = g.dimension();
  const auto classes = classify_vertices(g);
  r.dimension = d;
  r.vertices = g.num_vertices();
  r.p = classes.p();
  r.p_bar = classes.p_bar;
  r.p_dot = classes.p_dot;
  r.regular = g.is_regular();
  r.bipartite = g.is_bipartite();
  r.boundary_components = boundary_component_count(g);

  for (int size : {2, 3}) {
    for (std::uint32_t mask = 0; mask <= g.colors().mask(); ++mask) {
      const auto set = ColorSet::from_mask(mask);
      if (set.size() != size) continue;
      const auto counts = count_g(g, set);
      r.g_table.push_back({set, counts.g, counts.g_dot});
    }
  }
  r.f_vector = f_vector(g);
  r.chi = euler_characteristic(r.f_vector);
  const auto genus = regular_genus(g, threads);
  r.rho_table = genus.table;
  r.rho_min = genus.value;
  if (g.is_regular()) {
    HalfInt omega;
    for (const auto& e : r.rho_table) omega += e.rho;
    r.omega_g = omega;
    if (d == 4) r.bound_checks["omega_pairing"] = check_omega_pairing(g, threads).holds();
  } else {
    for (Color c = 0; c < d; ++c) {
      r.bound_checks["lemma_c" + std::to_string(c)] = check_lemma_identities(g, c).holds();
    }
  }
  return r;
}

nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["dimension"] = r.dimension;
  j["vertices"] = r.vertices;
  j["p"] = r.p;
  j["p_bar"] = r.p_bar;
  j["p_dot"] = r.p_dot;
  j["regular"] = r.regular;
  j["bipartite"] = r.bipartite;
  j["boundary_components"] = r.boundary_components;
  auto table = nlohmann::ordered_json::array();
  for (const auto& e : r.g_table) {
    table.push_back({{"colors", e.colors.to_vector()}, {"g", e.g}, {"g_dot", e.g_dot}});
  }
  j["g_table"] = std::move(table);
  j["f_vector"] = r.f_vector;
  j["chi"] = r.chi;
  auto rho = nlohmann::ordered_json::array();
  for (const auto& e : r.rho_table) rho.push_back({{"eps", e.eps.to_string()}, {"rho", half_json(e.rho)}});
  j["rho_table"] = std::move(rho);
  j["rho_min"] = half_json(r.rho_min);
  j["omega_G"] = r.omega_g ? half_json(*r.omega_g) : nlohmann::ordered_json();
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : r.bound_checks) checks[name] = ok;
  j["bound_checks"] = std::move(checks);
  return j;
}

}  // namespace gemkit
