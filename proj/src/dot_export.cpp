#include <array>
#include <sstream>

#include "gemkit/io.hpp"

namespace gemkit {

std::string export_dot(const ColoredGraph& g, const std::string& name) {
  static constexpr std::array<const char*, 5> palette = {"red", "blue", "forestgreen", "orange", "purple"};
  std::ostringstream os;
  std::string quoted;
  for (char ch : name) {
    if (ch == '"' || ch == '\\') quoted += '\\';
    quoted += ch;
  }
  os << "graph \"" << quoted << "\" {\n";
  os << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v;
    if (g.is_boundary_vertex(v)) os << " [shape=doublecircle, style=filled, fillcolor=lightgray]";
    os << ";\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v << " [color=" << palette[static_cast<std::size_t>(e.color) % palette.size()]
       << ", label=\"" << e.color << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gemkit
