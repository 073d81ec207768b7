#include <doctest.h>

#include "fixtures.hpp"
#include "gemkit/boundary.hpp"
#include "gemkit/moves.hpp"
#include "oracle.hpp"

#include <map>
#include <optional>

using namespace gemkit;

TEST_CASE("boundary of B4_2 is the order-two gem of the 3-sphere") {
  const auto b = boundary_graph(fixtures::b4_2());
  CHECK(b.graph == order_two_gem(3));
  CHECK(b.components == 1);
  CHECK(b.parent_vertex == std::vector<Vertex>{0, 1});
  CHECK(b.graph == fixtures::build(oracle::boundary(fixtures::raw_b4_2())));
  CHECK(boundary_component_count(fixtures::b4_2()) == 1);
}

TEST_CASE("regular graphs have no boundary") {
  CHECK_THROWS_AS(boundary_graph(fixtures::s4_2()), GemError);
  try {
    boundary_graph(fixtures::s4_2());
  } catch (const GemError& e) {
    CHECK(e.code() == Errc::NoBoundary);
  }
  CHECK(boundary_component_count(fixtures::s4_2()) == 0);
}

TEST_CASE("boundary residue counts") {
  const auto b4 = fixtures::b4_2();
  CHECK(boundary_g(b4, {0, 3}) == 1);
  CHECK(boundary_g(b4, {0, 1, 2}) == 1);
  CHECK(boundary_g(b4, {0}) == 1);
  CHECK_THROWS_AS(boundary_g(b4, {0, 4}), GemError);
}

TEST_CASE("two boundary components") {
  const auto g = fixtures::two_boundaries();
  const auto b = boundary_graph(g);
  CHECK(b.components == 2);
  CHECK(b.parent_vertex == std::vector<Vertex>{0, 1, 4, 5});
  CHECK(b.component(0) == order_two_gem(3));
  CHECK(b.component(1) == order_two_gem(3));
  CHECK(boundary_component_count(g) == 2);
  const auto oracle_b = oracle::boundary(fixtures::raw_two_boundaries());
  CHECK(oracle::components(oracle_b, 0xF).total == 2);
}

TEST_CASE("two-component boundary from joined copies of B4_2") {
  // Two copies of B4_2 whose color-0 edges are each split by a color-4 edge,
  // the two new pairs being tied together by colors 1..3.
  const auto with_copy = [] {
    std::vector<Edge> out;
    for (const auto& e : fixtures::b4_2().edges()) {
      if (e.color == 0) continue;
      out.push_back(e);
      out.push_back({e.u + 2, e.v + 2, e.color});
    }
    out.insert(out.end(), {{0, 4, 0}, {5, 1, 0}, {2, 6, 0}, {7, 3, 0}, {4, 5, 4}, {6, 7, 4}});
    for (Color c = 1; c <= 3; ++c) {
      out.push_back({4, 6, c});
      out.push_back({5, 7, c});
    }
    return validate(4, 8, out);
  }();
  CHECK(boundary_component_count(with_copy) == 2);
  const auto b = boundary_graph(with_copy);
  CHECK(b.component(0) == order_two_gem(3));
  CHECK(b.component(1) == order_two_gem(3));
}

TEST_CASE("sphericity certificate") {
  const auto b = boundary_graph(fixtures::b4_2());
  CHECK(sphericity_heuristic(b.component(0)) == Sphericity::ProvenSphere);
  CHECK(sphericity_heuristic(fixtures::k33()) == Sphericity::Unknown);
  for (int d = 1; d <= 5; ++d) CHECK(sphericity_heuristic(order_two_gem(d)) == Sphericity::ProvenSphere);
  CHECK_THROWS_AS(sphericity_heuristic(fixtures::b4_2()), GemError);
}

TEST_CASE("boundary of a gem with an inserted color-4 dipole is unchanged") {
  const Edge cut[] = {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3}};
  std::map<Color, std::optional<Edge>> cuts;
  for (const auto& e : cut) cuts[e.color] = e;
  const auto ins = insert_1_dipole(fixtures::b4_2(), 4, cuts);
  CHECK(ins.genuine);
  const auto b = boundary_graph(ins.graph);
  CHECK(b.graph == order_two_gem(3));
  CHECK(b.parent_vertex == std::vector<Vertex>{0, 1});
}
