#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "expect.hpp"
#include "fixtures.hpp"
#include "gemkit/invariants.hpp"
#include "gemkit/moves.hpp"
#include "oracle.hpp"

using namespace gemkit;

namespace {

// 2 rho from the oracle's 2 - 2 rho.
long long oracle_twice_rho(const oracle::RawGem& raw, const CyclicPermutation& eps, bool regular) {
  const std::vector<int> order(eps.order().begin(), eps.order().end());
  const long long e = regular ? oracle::closed_euler(raw, order) : oracle::boundary_euler(raw, order);
  return 2 - e;
}

}  // namespace

TEST_CASE("cyclic permutation counts") {
  CHECK(enumerate_cyclic_permutations(1).size() == 1);
  CHECK(enumerate_cyclic_permutations(2).size() == 1);
  CHECK(enumerate_cyclic_permutations(3).size() == 3);
  CHECK(enumerate_cyclic_permutations(4).size() == 12);
  CHECK(enumerate_cyclic_permutations(5).size() == 60);
  for (const auto& eps : enumerate_cyclic_permutations(4)) {
    CHECK(eps[4] == 4);
    CHECK(eps[0] < eps[3]);
  }
  const auto perms = enumerate_cyclic_permutations(4);
  CHECK(std::is_sorted(perms.begin(), perms.end()));
}

TEST_CASE("canonical form of a cyclic permutation") {
  const auto a = CyclicPermutation::canonical({4, 2, 0, 1, 3});
  CHECK(a.order() == std::vector<Color>{2, 0, 1, 3, 4});
  const auto b = CyclicPermutation::canonical({3, 1, 0, 2, 4});
  CHECK(b == a);
  CHECK(a.at(-1) == 4);
  CHECK(a.at(5) == 2);
  CHECK(error_of([] { CyclicPermutation::canonical({0, 0, 1}); }) == Errc::InvalidColor);
  CHECK(error_of([] { enumerate_cyclic_permutations(0); }) == Errc::InvalidDimension);
}

TEST_CASE("f-vectors and Euler characteristics") {
  CHECK(f_vector(fixtures::s4_2()) == std::vector<long long>{5, 10, 10, 5, 2});
  CHECK(f_vector(fixtures::b4_2()) == std::vector<long long>{5, 10, 10, 6, 2});
  CHECK(euler_characteristic(fixtures::s4_2()) == 2);
  CHECK(euler_characteristic(fixtures::b4_2()) == 1);
  CHECK(euler_characteristic(fixtures::k33()) == 0);
  for (const auto& raw : {fixtures::raw_s4_2(), fixtures::raw_b4_2(), fixtures::raw_k33(), fixtures::raw_two_boundaries(),
                          fixtures::raw_non_contracted(), fixtures::raw_disc()}) {
    const auto f = f_vector(fixtures::build(raw));
    CHECK(f == oracle::f_vector(raw));
    CHECK(euler_characteristic(f) == oracle::euler(oracle::f_vector(raw)));
  }
}

TEST_CASE("regular genus of the oracle gems") {
  const auto s4 = fixtures::s4_2();
  const auto table = rho_table(s4);
  CHECK(table.size() == 12);
  for (const auto& row : table) {
    CHECK(row.rho.is_zero());
    CHECK(row.rho.twice() == oracle_twice_rho(fixtures::raw_s4_2(), row.eps, true));
  }
  for (const auto& row : rho_table(fixtures::b4_2())) {
    CHECK(row.rho.is_zero());
    CHECK(row.rho.twice() == oracle_twice_rho(fixtures::raw_b4_2(), row.eps, false));
  }
  const auto k = regular_genus(fixtures::k33());
  CHECK(k.value == HalfInt::integer(1));
  CHECK(k.value.twice() == oracle_twice_rho(fixtures::raw_k33(), k.argmin.front(), true));
  CHECK(regular_genus(fixtures::disc()).value.is_zero());
  CHECK(regular_genus(fixtures::two_boundaries()).table.size() == 12);
}

TEST_CASE("G-degree") {
  CHECK(gurau_degree(fixtures::s4_2()).is_zero());
  CHECK(gurau_degree(fixtures::k33()) == HalfInt::integer(1));
  CHECK(gurau_degree(fixtures::non_contracted()) == gurau_degree(fixtures::non_contracted(), 4));
  CHECK(error_of([] { gurau_degree(fixtures::b4_2()); }) == Errc::NotRegular);
}

TEST_CASE("dipole in B4_2 leaves the genus at zero") {
  const auto ins = insert_1_dipole(fixtures::b4_2(), 0, 1);
  for (const auto& row : rho_table(ins.graph)) CHECK(row.rho.is_zero());
}

TEST_CASE("formula preconditions") {
  const auto eps = enumerate_cyclic_permutations(4).front();
  CHECK(error_of([&] { rho_closed(fixtures::b4_2(), eps); }) == Errc::NotRegular);
  CHECK(error_of([&] { rho_boundary(fixtures::s4_2(), eps); }) == Errc::NoBoundary);
  CHECK(error_of([&] { rho(fixtures::k33(), eps); }) == Errc::Dimension);
}

TEST_CASE("half-integer values") {
  CHECK(HalfInt::from_twice(3).to_string() == "3/2");
  CHECK(HalfInt::integer(-2).to_string() == "-2");
  CHECK(HalfInt::from_twice(1) + HalfInt::from_twice(1) == HalfInt::integer(1));
  CHECK(HalfInt::from_twice(1) < HalfInt::integer(1));
  CHECK_FALSE(HalfInt::from_twice(5).is_integer());
}
