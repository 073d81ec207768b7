#include <fstream>
#include <sstream>

#include "gemkit/io.hpp"

namespace gemkit {

namespace {

int require_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw GemError(Errc::ParseError, where + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw GemError(Errc::ParseError, where + " out of range");
  return static_cast<int>(v);
}

}  // namespace

GemFile parse_gem(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GemError(Errc::ParseError, "byte " + std::to_string(e.byte) + ": malformed document");
  }
  if (!doc.is_object()) throw GemError(Errc::ParseError, "top level must be an object");
  for (const char* key : {"dimension", "vertices", "edges"}) {
    if (!doc.contains(key)) throw GemError(Errc::ParseError, std::string("missing key \"") + key + "\"");
  }
  const int d = require_int(doc["dimension"], "dimension");
  const int n = require_int(doc["vertices"], "vertices");
  if (!doc["edges"].is_array()) throw GemError(Errc::ParseError, "edges must be an array");

  std::vector<Edge> edges;
  const auto& list = doc["edges"];
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const auto& e = list[k];
    if (!e.is_array() || e.size() != 3) throw GemError(Errc::ParseError, where + " must be [u, v, color]");
    const Edge edge{require_int(e[0], where), require_int(e[1], where), require_int(e[2], where)};
    if (edge.u == edge.v) throw GemError(Errc::ParseError, "LoopEdge: " + where + " joins vertex " +
                                                               std::to_string(edge.u) + " to itself");
    edges.push_back(edge);
  }

  GemFile out{validate(d, n, edges), {}, nlohmann::json::object()};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw GemError(Errc::ParseError, "name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw GemError(Errc::ParseError, "metadata must be an object");
    out.metadata = doc["metadata"];
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GemError(Errc::IoError, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GemError(Errc::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw GemError(Errc::IoError, "write failed for " + path.string());
}

GemFile read_gem(const std::filesystem::path& path) { return parse_gem(read_text(path)); }

std::string gem_text(const GemFile& gem) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"dimension\": " << gem.graph.dimension() << ",\n";
  os << "  \"vertices\": " << gem.graph.num_vertices() << ",\n";
  if (!gem.name.empty()) os << "  \"name\": " << nlohmann::json(gem.name).dump() << ",\n";
  if (!gem.metadata.empty()) os << "  \"metadata\": " << gem.metadata.dump() << ",\n";
  os << "  \"edges\": [";
  const auto edges = gem.graph.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    os << (k ? ",\n    " : "\n    ") << '[' << edges[k].u << ", " << edges[k].v << ", " << edges[k].color << ']';
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string gem_text(const ColoredGraph& g, const std::string& name) {
  return gem_text(GemFile{g, name, nlohmann::json::object()});
}

void write_gem(const GemFile& gem, const std::filesystem::path& path) { write_text(path, gem_text(gem)); }

void write_gem(const ColoredGraph& g, const std::filesystem::path& path, const std::string& name) {
  write_text(path, gem_text(g, name));
}

}  // namespace gemkit
