#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gemkit/boundary.hpp"
#include "gemkit/checks.hpp"
#include "gemkit/invariants.hpp"
#include "gemkit/io.hpp"
#include "gemkit/moves.hpp"
#include "gemkit/pi1.hpp"
#include "gemkit/report.hpp"

using namespace gemkit;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kViolated = 1, kUsage = 2, kInvalid = 3 };

struct Globals {
  bool json = false;
  int threads = 1;
};

Globals globals;

void emit(const json& j, const std::string& text) {
  if (globals.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

json check_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    json item = {{"name", i.name}, {"holds", i.holds}};
    if (!i.detail.empty()) item["detail"] = i.detail;
    items.push_back(std::move(item));
  }
  return {{"suite", r.suite}, {"holds", r.holds()}, {"failures", r.failures()},
          {"items", items},   {"notes", r.notes},   {"data", r.data}};
}

std::string check_text(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& i : r.items) {
    if (!i.holds) os << "FAILED " << i.name << (i.detail.empty() ? "" : " (" + i.detail + ")") << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  os << r.suite << ": " << (r.items.size() - static_cast<std::size_t>(r.failures())) << "/" << r.items.size()
     << " checks hold\n";
  return os.str();
}

json halves(const std::vector<RhoEntry>& table) {
  json out = json::array();
  for (const auto& e : table) out.push_back({{"eps", e.eps.to_string()}, {"rho", half_json(e.rho)}});
  return out;
}

std::pair<Color, Color> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--pair", "expected I,J");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--pair", "expected I,J");
  }
}

int cmd_validate(const std::string& file) {
  const auto gem = read_gem(file);
  const auto& g = gem.graph;
  json j = {{"valid", true},
            {"dimension", g.dimension()},
            {"vertices", g.num_vertices()},
            {"regular", g.is_regular()},
            {"bipartite", g.is_bipartite()}};
  std::ostringstream os;
  os << "valid: dimension " << g.dimension() << ", " << g.num_vertices() << " vertices, "
     << (g.is_regular() ? "regular" : "with boundary") << (g.is_bipartite() ? ", bipartite" : "") << '\n';
  emit(j, os.str());
  return kOk;
}

int cmd_info(const std::string& file) {
  const auto g = read_gem(file).graph;
  const auto c = classify_vertices(g);
  const int h = boundary_component_count(g);
  json table = json::array();
  std::ostringstream os;
  os << "vertices " << g.num_vertices() << " (p_bar " << c.p_bar << ", p_dot " << c.p_dot << ")\n";
  os << "regular " << (g.is_regular() ? "yes" : "no") << ", bipartite " << (g.is_bipartite() ? "yes" : "no")
     << ", boundary components " << h << '\n';
  for (Color i = 0; i <= g.dimension(); ++i) {
    for (Color k = i + 1; k <= g.dimension(); ++k) {
      const auto n = count_g(g, {i, k});
      table.push_back({{"colors", {i, k}}, {"g", n.g}, {"g_dot", n.g_dot}});
      os << "g_" << i << k << " = " << n.g << " (regular " << n.g_dot << ")\n";
    }
  }
  json contracted = json::array();
  for (bool b : is_contracted(g)) contracted.push_back(b);
  json j = {{"dimension", g.dimension()},
            {"vertices", g.num_vertices()},
            {"p", c.p()},
            {"p_bar", c.p_bar},
            {"p_dot", c.p_dot},
            {"regular", g.is_regular()},
            {"bipartite", g.is_bipartite()},
            {"boundary_components", h},
            {"contracted", contracted},
            {"g_table", table}};
  emit(j, os.str());
  return kOk;
}

int cmd_boundary(const std::string& file, const std::string& out, int component) {
  const auto g = read_gem(file).graph;
  const auto b = boundary_graph(g);
  json comps = json::array();
  std::ostringstream os;
  os << "boundary components " << b.components << '\n';
  for (int k = 0; k < b.components; ++k) {
    const auto part = b.component(k);
    const bool sphere = sphericity_heuristic(part) == Sphericity::ProvenSphere;
    comps.push_back({{"index", k}, {"vertices", part.num_vertices()}, {"sphericity", sphere ? "ProvenSphere" : "Unknown"}});
    os << "component " << k << ": " << part.num_vertices() << " vertices, " << (sphere ? "ProvenSphere" : "Unknown")
       << '\n';
  }
  if (!out.empty()) {
    if (component < 0 && b.components > 1) {
      throw CLI::ValidationError("--component", "boundary is disconnected; choose a component to write");
    }
    if (component >= b.components) throw CLI::ValidationError("--component", "no such component");
    write_gem(component < 0 ? b.graph : b.component(component), out);
  }
  emit({{"boundary_components", b.components}, {"components", comps}}, os.str());
  return kOk;
}

int cmd_regularize(const std::string& file, Color c, const std::string& out) {
  const auto gem = read_gem(file);
  const auto reg = regularize(gem.graph, c);
  if (!out.empty()) write_gem(reg.graph, out, gem.name.empty() ? "" : gem.name + "_regularized");
  json added = json::array();
  for (const auto& [u, v] : reg.record.added_edges) added.push_back({u, v});
  json j = {{"singular_color", c},
            {"added_edges", added},
            {"color_swap", reg.record.color_swap ? json{reg.record.color_swap->first, reg.record.color_swap->second}
                                                 : json()},
            {"vertices", reg.graph.num_vertices()}};
  std::ostringstream os;
  os << "capped " << added.size() << " paths with color " << c << ", exchanged colors " << c << " and "
     << gem.graph.dimension() << '\n';
  emit(j, os.str());
  return kOk;
}

int cmd_dipoles(const std::string& file, int cancel, const std::string& out) {
  const auto g = read_gem(file).graph;
  const auto sites = find_1_dipoles(g);
  json list = json::array();
  std::ostringstream os;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    list.push_back({{"index", k}, {"color", sites[k].color}, {"x", sites[k].x}, {"y", sites[k].y}});
    os << k << ": color " << sites[k].color << " (" << sites[k].x << "," << sites[k].y << ")\n";
  }
  json j = {{"dipoles", list}};
  if (cancel >= 0) {
    if (cancel >= static_cast<int>(sites.size())) throw CLI::ValidationError("--cancel", "no such dipole");
    const auto reduced = cancel_1_dipole(g, sites[static_cast<std::size_t>(cancel)]);
    if (!out.empty()) write_gem(reduced, out);
    j["cancelled"] = cancel;
    j["vertices_after"] = reduced.num_vertices();
    os << "cancelled " << cancel << ", " << reduced.num_vertices() << " vertices left\n";
  }
  emit(j, os.str());
  return kOk;
}

int cmd_contract(const std::string& file, const std::string& out) {
  const auto g = read_gem(file).graph;
  const auto c = full_contraction(g);
  if (!out.empty()) write_gem(c.graph, out);
  json steps = json::array();
  for (const auto& s : c.steps) {
    steps.push_back({{"color", s.site.color}, {"x", s.site.x}, {"y", s.site.y}, {"vertices_after", s.vertices_after}});
  }
  std::ostringstream os;
  os << "cancelled " << c.steps.size() << " dipoles: " << g.num_vertices() << " -> " << c.graph.num_vertices()
     << " vertices\n";
  emit({{"steps", steps}, {"vertices", c.graph.num_vertices()}}, os.str());
  return kOk;
}

int cmd_genus(const std::string& file, bool all) {
  const auto g = read_gem(file).graph;
  const auto r = regular_genus(g, globals.threads);
  json argmin = json::array();
  for (const auto& e : r.argmin) argmin.push_back(e.to_string());
  json j = {{"rho_min", half_json(r.value)}, {"argmin", argmin}};
  std::ostringstream os;
  if (all) {
    j["rho_table"] = halves(r.table);
    for (const auto& e : r.table) os << e.eps.to_string() << " " << e.rho.to_string() << '\n';
  }
  os << "regular genus " << r.value.to_string() << '\n';
  emit(j, os.str());
  return kOk;
}

int cmd_gdegree(const std::string& file) {
  const auto g = read_gem(file).graph;
  const auto omega = gurau_degree(g, globals.threads);
  emit({{"omega_G", half_json(omega)}}, "G-degree " + omega.to_string() + "\n");
  return kOk;
}

int cmd_fvector(const std::string& file) {
  const auto f = f_vector(read_gem(file).graph);
  std::ostringstream os;
  for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
  os << '\n';
  emit({{"f_vector", f}}, os.str());
  return kOk;
}

int cmd_euler(const std::string& file) {
  const auto chi = euler_characteristic(read_gem(file).graph);
  emit({{"chi", chi}}, std::to_string(chi) + "\n");
  return kOk;
}

int cmd_pi1(const std::string& file, const std::string& pair, bool simplify, const std::vector<int>& singular) {
  const auto g = read_gem(file).graph;
  const auto [i, j] = parse_pair(pair);
  std::optional<ColorSet> sing;
  if (!singular.empty()) sing = ColorSet(std::span<const int>(singular));
  auto pres = presentation(g, i, j, sing);
  if (simplify) pres = tietze_simplify(pres);
  const auto ab = abelianization_rank(pres);
  const auto bounds = rank_bounds(pres);
  auto words = [](const std::vector<Word>& ws) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(w);
    return out;
  };
  json js = {{"generators", pres.generators},
             {"relators", words(pres.relators)},
             {"tree_relators", words(pres.tree_relators)},
             {"abelianization", {{"free_rank", ab.free_rank}, {"divisors", ab.divisors}}},
             {"rank_bounds", {bounds.lower, bounds.upper}}};
  if (!pres.case_tag.empty()) js["case"] = pres.case_tag;
  std::ostringstream os;
  os << format_presentation(pres);
  os << "abelianization " << ab.to_string() << ", rank in [" << bounds.lower << ", " << bounds.upper << "]\n";
  emit(js, os.str());
  return kOk;
}

int cmd_check(const std::string& file, const std::string& suite, int color) {
  const auto g = read_gem(file).graph;
  CheckReport r;
  r.suite = suite;
  if (suite == "omega") {
    r = check_omega_pairing(g, globals.threads);
  } else if (suite == "dehn") {
    r = check_dehn_sommerville(g);
  } else if (suite == "dipole") {
    r = check_dipole_invariance(g, globals.threads);
  } else {
    for (Color c = 0; c < g.dimension(); ++c) {
      if (color >= 0 && c != color) continue;
      r.merge(suite == "lemma" ? check_lemma_identities(g, c) : check_corollary_transfer(g, c));
    }
    r.data.erase("singular_color");
  }
  emit(check_json(r), check_text(r));
  return r.holds() ? kOk : kViolated;
}

int cmd_bound(const std::string& file, long long chi, long long m, long long mhat, long long h, bool semisimple,
              bool minimal) {
  const auto g = read_gem(file).graph;
  auto r = check_bound_on_gem(g, chi, m, h, mhat, globals.threads);
  const auto complexity = gem_complexity_relation(g, chi, minimal, globals.threads);
  r.merge(complexity);
  r.suite = "bound";
  json j = check_json(r);
  std::ostringstream os;
  os << "genus bound " << r.data["genus_bound"] << ", G-degree bound " << r.data["gdegree_bound"] << ", omega_G "
     << r.data["omega_G"].dump() << '\n';
  os << "complexity relation " << r.data["relation_value"] << '\n';
  if (semisimple) {
    const auto s = check_semisimple(g, m, mhat, h);
    json witnesses = json::array();
    for (const auto& e : s.weak_witnesses) witnesses.push_back(e.to_string());
    j["semi_simple"] = s.semi_simple;
    j["weak_semi_simple"] = witnesses;
    os << "semi-simple: " << (s.semi_simple ? "true" : "false") << ", weak witnesses " << witnesses.size() << '\n';
  }
  os << check_text(r);
  emit(j, os.str());
  return r.holds() ? kOk : kViolated;
}

int cmd_catalog_add(const std::string& store, const std::string& file) {
  const auto gem = read_gem(file);
  const auto r = catalog_add(store, gem, globals.threads);
  emit({{"added", r.added}, {"digest", r.digest}},
       std::string(r.added ? "added " : "already present ") + r.digest + "\n");
  return kOk;
}

int cmd_catalog_scan(const std::string& store, const std::vector<std::string>& where) {
  std::vector<CatalogPredicate> preds;
  for (const auto& w : where) preds.push_back(parse_predicate(w));
  const auto scan = catalog_scan(store, preds);
  for (const auto& issue : scan.corrupt) {
    std::cerr << "StoreCorrupt: line " << issue.line << ": " << issue.message << '\n';
  }
  json records = json::array();
  std::ostringstream os;
  for (const auto& r : scan.records) {
    records.push_back(r);
    os << r["digest"].get<std::string>().substr(0, 12) << " " << r.value("name", std::string()) << " rho_min "
       << r["rho_min"].dump() << '\n';
  }
  os << scan.records.size() << " records\n";
  json corrupt = json::array();
  for (const auto& issue : scan.corrupt) corrupt.push_back({{"line", issue.line}, {"message", issue.message}});
  emit({{"records", records}, {"corrupt", corrupt}}, os.str());
  return kOk;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
  const auto gem = read_gem(file);
  const auto text = export_dot(gem.graph, gem.name.empty() ? "gem" : gem.name);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored-graph manifold encodings: invariants and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", globals.json, "machine-readable output");
  app.add_option("--threads", globals.threads, "worker threads")->check(CLI::Range(1, 256));

  std::string file, out, store, pair, suite;
  int color = -1, cancel = -1, component = -1;
  bool all_perms = false, simplify = false, semisimple = false, minimal = false;
  long long chi = 0, m = 0, mhat = 0, h = 0;
  std::vector<int> singular;
  std::vector<std::string> where;

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", file, "gem file")->required(); };

  auto* validate_cmd = app.add_subcommand("validate", "check a gem file");
  file_arg(validate_cmd);
  auto* info_cmd = app.add_subcommand("info", "vertex classes and residue counts");
  file_arg(info_cmd);
  auto* boundary_cmd = app.add_subcommand("boundary", "boundary graph");
  file_arg(boundary_cmd);
  boundary_cmd->add_option("-o,--output", out);
  boundary_cmd->add_option("--component", component);
  auto* regularize_cmd = app.add_subcommand("regularize", "cap the boundary and exchange colors");
  file_arg(regularize_cmd);
  regularize_cmd->add_option("--singular-color", color)->required();
  regularize_cmd->add_option("-o,--output", out);
  auto* dipoles_cmd = app.add_subcommand("dipoles", "list or cancel 1-dipoles");
  file_arg(dipoles_cmd);
  dipoles_cmd->add_option("--cancel", cancel);
  dipoles_cmd->add_option("-o,--output", out);
  auto* contract_cmd = app.add_subcommand("contract", "cancel 1-dipoles until none is left");
  file_arg(contract_cmd);
  contract_cmd->add_option("-o,--output", out);
  auto* genus_cmd = app.add_subcommand("genus", "regular genus");
  file_arg(genus_cmd);
  genus_cmd->add_flag("--all-perms", all_perms);
  auto* gdegree_cmd = app.add_subcommand("gdegree", "G-degree");
  file_arg(gdegree_cmd);
  auto* fvector_cmd = app.add_subcommand("fvector", "simplex counts");
  file_arg(fvector_cmd);
  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic");
  file_arg(euler_cmd);
  auto* pi1_cmd = app.add_subcommand("pi1", "fundamental group presentation");
  file_arg(pi1_cmd);
  pi1_cmd->add_option("--pair", pair)->required();
  pi1_cmd->add_flag("--simplify", simplify);
  pi1_cmd->add_option("--singular", singular, "singular colors")->delimiter(',');
  auto* check_cmd = app.add_subcommand("check", "identity suites");
  file_arg(check_cmd);
  check_cmd->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"lemma", "corollary", "omega", "dipole", "dehn"}));
  check_cmd->add_option("--singular-color", color);
  auto* bound_cmd = app.add_subcommand("bound", "lower bounds on a regular gem");
  file_arg(bound_cmd);
  bound_cmd->set_help_flag("--help");
  bound_cmd->add_option("--chi", chi)->required();
  bound_cmd->add_option("--m", m)->required();
  bound_cmd->add_option("--mhat", mhat)->required();
  bound_cmd->add_option("--h", h)->required();
  bound_cmd->add_flag("--semisimple", semisimple);
  bound_cmd->add_flag("--minimal", minimal, "assert the complexity relation");
  auto* catalog_cmd = app.add_subcommand("catalog", "invariant catalog");
  catalog_cmd->require_subcommand(1);
  auto* add_cmd = catalog_cmd->add_subcommand("add", "add a gem");
  add_cmd->add_option("store", store)->required();
  add_cmd->add_option("file", file)->required();
  auto* scan_cmd = catalog_cmd->add_subcommand("scan", "list records");
  scan_cmd->add_option("store", store)->required();
  scan_cmd->add_option("--where", where, "field=value, field<=value, ...");
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  file_arg(dot_cmd);
  dot_cmd->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*info_cmd) return cmd_info(file);
    if (*boundary_cmd) return cmd_boundary(file, out, component);
    if (*regularize_cmd) return cmd_regularize(file, color, out);
    if (*dipoles_cmd) return cmd_dipoles(file, cancel, out);
    if (*contract_cmd) return cmd_contract(file, out);
    if (*genus_cmd) return cmd_genus(file, all_perms);
    if (*gdegree_cmd) return cmd_gdegree(file);
    if (*fvector_cmd) return cmd_fvector(file);
    if (*euler_cmd) return cmd_euler(file);
    if (*pi1_cmd) return cmd_pi1(file, pair, simplify, singular);
    if (*check_cmd) return cmd_check(file, suite, color);
    if (*bound_cmd) return cmd_bound(file, chi, m, mhat, h, semisimple, minimal);
    if (*add_cmd) return cmd_catalog_add(store, file);
    if (*scan_cmd) return cmd_catalog_scan(store, where);
    if (*dot_cmd) return cmd_export_dot(file, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GemError& e) {
    std::cerr << e.what() << '\n';
    return e.code() == Errc::ParseError || e.code() == Errc::IoError ? kUsage : kInvalid;
  }
  return kUsage;
}
