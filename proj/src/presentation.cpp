#include <sstream>

#include "gemkit/detail/disjoint_sets.hpp"
#include "gemkit/pi1.hpp"

namespace gemkit {

std::vector<Word> GroupPresentation::all_relators() const {
  std::vector<Word> out = relators;
  out.insert(out.end(), tree_relators.begin(), tree_relators.end());
  return out;
}

GroupPresentation presentation(const ColoredGraph& g, Color i, Color j, std::optional<ColorSet> singular) {
  const int d = g.dimension();
  if (i == j || i < 0 || j < 0 || i > d || j > d) {
    throw GemError(Errc::InvalidColorPair, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  const ColorSet pair{i, j};
  const auto gens = residues(g, pair.complement_in(d));

  GroupPresentation out;
  out.generators = gens.count();

  const auto cycles = residues(g, pair);
  for (int k = 0; k < cycles.count(); ++k) {
    if (!cycles.regular[k]) continue;
    const Vertex v0 = cycles.components[k].front();
    Word w;
    Vertex v = v0;
    do {
      const Vertex u = g.neighbor(v, i);
      w.push_back(gens.component_of[v] + 1);
      w.push_back(-(gens.component_of[u] + 1));
      v = g.neighbor(u, j);
    } while (v != v0);
    out.relators.push_back(std::move(w));
  }

  // Spanning forest of K_ij: nodes are components missing i, then components
  // missing j; generator x joins the two components containing it.
  const auto without_i = residues(g, ColorSet{i}.complement_in(d));
  const auto without_j = residues(g, ColorSet{j}.complement_in(d));
  detail::DisjointSets forest(without_i.count() + without_j.count());
  for (int x = 0; x < gens.count(); ++x) {
    const Vertex v = gens.components[x].front();
    const int a = without_i.component_of[v];
    const int b = without_i.count() + without_j.component_of[v];
    if (forest.unite(a, b)) out.tree_relators.push_back({x + 1});
  }

  if (singular) {
    const bool a = !singular->contains(i) && !singular->contains(j);
    const bool b = (singular->mask() & pair.complement_in(d).mask()) == 0;
    out.case_tag = std::string(a ? "a" : "") + (b ? "b" : "");
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ' ';
    os << w[k];
  }
  return os.str();
}

std::string format_presentation(const GroupPresentation& pres) {
  std::ostringstream os;
  os << "generators: " << pres.generators << '\n';
  for (const auto& r : pres.relators) os << "relator: " << format_word(r) << '\n';
  for (const auto& r : pres.tree_relators) os << "tree: " << format_word(r) << '\n';
  return os.str();
}

}  // namespace gemkit
