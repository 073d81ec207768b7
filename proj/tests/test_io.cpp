#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "expect.hpp"
#include "fixtures.hpp"
#include "gemkit/io.hpp"

using namespace gemkit;
namespace fs = std::filesystem;

namespace {

fs::path data(const std::string& name) { return fs::path(GEMKIT_TEST_DATA) / name; }

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("gemkit_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("reading the sample gems") {
  const auto s4 = read_gem(data("s4_2.gem"));
  CHECK(s4.graph == fixtures::s4_2());
  CHECK(s4.name == "S4_2");
  CHECK(read_gem(data("b4_2.gem")).graph == fixtures::b4_2());
  CHECK(read_gem(data("k33.gem")).graph == fixtures::k33());
  CHECK(read_gem(data("b4_reg.gem")).graph == fixtures::s4_2());
}

TEST_CASE("parse errors") {
  try {
    read_gem(data("loop.gem"));
    FAIL("loop edge accepted");
  } catch (const GemError& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("LoopEdge") != std::string::npos);
  }
  CHECK(error_of([] { read_gem(data("duplicate.gem")); }) == Errc::DuplicateColorAtVertex);
  CHECK(error_of([] { read_gem(data("malformed.gem")); }) == Errc::ParseError);
  CHECK(error_of([] { parse_gem(R"({"dimension":4,"vertices":2})"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_gem(R"({"dimension":4,"vertices":2,"edges":[[0,1]]})"); }) == Errc::ParseError);
  CHECK(error_of([] { read_gem(data("missing.gem")); }) == Errc::IoError);
}

TEST_CASE("canonical text is a fixpoint") {
  GemFile gem{fixtures::k33(), "K33", {{"source", "test"}}};
  const auto text = gem_text(gem);
  const auto back = parse_gem(text);
  CHECK(back.graph == gem.graph);
  CHECK(back.name == "K33");
  CHECK(back.metadata == gem.metadata);
  CHECK(gem_text(back) == text);
  CHECK(text.find("[0, 3, 0]") != std::string::npos);

  TempDir dir;
  write_gem(gem, dir.path / "k.gem");
  CHECK(read_text(dir.path / "k.gem") == text);
}

TEST_CASE("graphviz export") {
  const auto dot = export_dot(fixtures::b4_2(), "B4_2");
  CHECK(dot.rfind("graph \"B4_2\" {", 0) == 0);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"3\"") != std::string::npos);
  CHECK(dot.find("label=\"4\"") == std::string::npos);
  CHECK(export_dot(fixtures::s4_2()).find("doublecircle") == std::string::npos);
}

TEST_CASE("sha-256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("catalog") {
  TempDir dir;
  const auto store = dir.path / "catalog.jsonl";
  CHECK(catalog_scan(store).records.empty());

  const GemFile s4{fixtures::s4_2(), "S4_2", {}};
  const auto first = catalog_add(store, s4);
  CHECK(first.added);
  CHECK(first.digest == sha256_hex(gem_text(s4)));
  const auto again = catalog_add(store, s4);
  CHECK_FALSE(again.added);
  CHECK(again.digest == first.digest);

  catalog_add(store, {fixtures::b4_2(), "B4_2", {}});
  catalog_add(store, {fixtures::k33(), "K33", {}});
  CHECK(catalog_scan(store).records.size() == 3);
  const auto zero = catalog_scan(store, {parse_predicate("rho_min=0")});
  CHECK(zero.records.size() == 2);
  CHECK(catalog_scan(store, {parse_predicate("rho_min>0")}).records.size() == 1);
  CHECK(catalog_scan(store, {parse_predicate("dimension=4"), parse_predicate("regular=true")}).records.size() == 1);

  {
    std::ofstream out(store, std::ios::app);
    out << "{not json\n";
  }
  const auto scan = catalog_scan(store);
  CHECK(scan.records.size() == 3);
  REQUIRE(scan.corrupt.size() == 1);
  CHECK(scan.corrupt[0].line == 4);
}

TEST_CASE("predicates") {
  const auto p = parse_predicate("omega_G<=6");
  CHECK(p.field == "omega_G");
  CHECK(p.op == "<=");
  CHECK(p.value == "6");
  CHECK(parse_predicate("name!=K33").op == "!=");
  const nlohmann::ordered_json rec{{"omega_G", 6}, {"name", "K33"}, {"chi", -1}};
  CHECK(matches(rec, p));
  CHECK_FALSE(matches(rec, parse_predicate("omega_G<6")));
  CHECK(matches(rec, parse_predicate("name=K33")));
  CHECK(matches(rec, parse_predicate("chi<0")));
  CHECK_FALSE(matches(rec, parse_predicate("absent=1")));
  CHECK(error_of([] { parse_predicate("no operator"); }) == Errc::ParseError);
}
