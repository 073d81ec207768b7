#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

struct GemFile {
  ColoredGraph graph;
  std::string name;
  nlohmann::json metadata = nlohmann::json::object();
};

// Parses the JSON gem schema: "dimension", "vertices", "edges" as [u, v, color]
// triples, optional "name" and "metadata".
GemFile parse_gem(std::string_view text);
GemFile read_gem(const std::filesystem::path& path);

// One edge per line, edges in canonical order; parse_gem(gem_text(x)) == x.
std::string gem_text(const GemFile& gem);
std::string gem_text(const ColoredGraph& g, const std::string& name = {});
void write_gem(const GemFile& gem, const std::filesystem::path& path);
void write_gem(const ColoredGraph& g, const std::filesystem::path& path, const std::string& name = {});

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// Graphviz document; boundary vertices are drawn as filled double circles.
std::string export_dot(const ColoredGraph& g, const std::string& name = "gem");

std::string sha256_hex(std::string_view bytes);

struct CatalogAddResult {
  bool added = false;
  std::string digest;
};

// Appends the full invariant report of `gem` unless a record with the same
// digest is already present. Appends are serialized by an exclusive lock.
CatalogAddResult catalog_add(const std::filesystem::path& store, const GemFile& gem, int threads = 1);

struct CatalogPredicate {
  std::string field;
  std::string op;  // = != < <= > >=
  std::string value;
};

// Parses "field<op>value", e.g. "rho_min=0" or "omega_G<=6".
CatalogPredicate parse_predicate(const std::string& text);
bool matches(const nlohmann::ordered_json& record, const CatalogPredicate& predicate);

struct CatalogIssue {
  int line = 0;
  std::string message;
};

struct CatalogScan {
  std::vector<nlohmann::ordered_json> records;
  std::vector<CatalogIssue> corrupt;
};

// Reads every record that satisfies all predicates. Lines that do not parse
// are reported and skipped. A missing store reads as empty.
CatalogScan catalog_scan(const std::filesystem::path& store, const std::vector<CatalogPredicate>& where = {});

}  // namespace gemkit
