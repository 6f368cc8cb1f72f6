#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spm/core.hpp"
#include "spm/errors.hpp"

using spm::Partition;

TEST_CASE("height differences") {
  CHECK(spm::height_diff({3, 1}, 1) == 2);
  CHECK(spm::height_diff({2, 2}, 1) == 0);
  CHECK(spm::height_diff({2, 2}, 2) == 2);
  CHECK_THROWS_AS(spm::height_diff({2, 2}, 3), spm::ColumnOutOfRange);
  CHECK_THROWS_AS(spm::height_diff({2, 2}, 0), spm::ColumnOutOfRange);
}

TEST_CASE("classification of columns") {
  CHECK(spm::classify({3, 2, 1}, 2) == spm::HeightClass::step);
  CHECK(spm::classify({2, 2}, 1) == spm::HeightClass::plateau);
  CHECK(spm::classify({3, 1}, 1) == spm::HeightClass::cliff);
}

TEST_CASE("stair length") {
  CHECK(spm::stair_length({2, 1}) == 2);
  CHECK(spm::stair_length({2, 2}) == 0);
  CHECK(spm::stair_length({4, 3, 1}) == 1);
  CHECK(spm::stair_length({}) == 0);
  CHECK(spm::stair_length({1}) == 1);
}

TEST_CASE("falls") {
  CHECK(*spm::fall({3, 1}, 1) == Partition{2, 2});
  CHECK(*spm::fall({2, 2}, 2) == Partition{2, 1, 1});
  CHECK_FALSE(spm::fall({2, 2}, 1));
  CHECK_FALSE(spm::fall({2, 2}, 5));
}

TEST_CASE("successors") {
  using T = spm::Transition;
  CHECK(spm::successors({4, 2, 1}) == std::vector<T>{{1, {3, 3, 1}}});
  CHECK(spm::successors({3, 2, 1}).empty());
  CHECK(spm::successors({4, 2}) == std::vector<T>{{1, {3, 3}}, {2, {4, 1, 1}}});
}

TEST_CASE("adding grains") {
  CHECK(*spm::add_grain({2, 1}, 2) == Partition{2, 2});
  CHECK(*spm::add_grain({2, 1}, 3) == Partition{2, 1, 1});
  CHECK_FALSE(spm::add_grain({2, 2}, 2));
  CHECK_FALSE(spm::add_grain({2, 2}, 4));
}

TEST_CASE("membership test agrees with simulation") {
  CHECK_FALSE(spm::is_spm({3, 3, 2, 2}));
  CHECK(spm::is_spm({4, 4, 2, 2}));
  CHECK(spm::is_spm({3, 2, 1}));
  for (int n = 0; n <= 14; ++n) {
    const auto lattice = oracle::simulate(n);
    const std::set<oracle::Pile> reachable(lattice.nodes.begin(), lattice.nodes.end());
    for (const Partition& s : spm::all_partitions(n)) {
      CHECK_MESSAGE(spm::is_spm(s) == (reachable.count(s.vec()) > 0), spm::to_string(s));
    }
  }
}

TEST_CASE("fixed points are the simulation sinks") {
  CHECK(spm::fixed_point(10) == Partition{4, 3, 2, 1});
  CHECK(spm::fixed_point(11) == Partition{4, 3, 2, 1, 1});
  CHECK(spm::fixed_point(0).empty());
  for (int n = 0; n <= 16; ++n) {
    const auto lattice = oracle::simulate(n);
    std::vector<oracle::Pile> sinks;
    for (const auto& s : lattice.nodes) {
      bool moves = false;
      for (const auto& [a, i, b] : lattice.edges) {
        (void)i;
        (void)b;
        if (a == s) moves = true;
      }
      if (!moves) sinks.push_back(s);
    }
    REQUIRE(sinks.size() == 1);
    CHECK(spm::fixed_point(n).vec() == sinks.front());
  }
}

TEST_CASE("rank rises by one per fall") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& [a, i, b] : oracle::simulate(n).edges) {
      (void)i;
      CHECK(spm::rank(Partition(b)) == spm::rank(Partition(a)) + 1);
    }
  }
  CHECK(spm::prefix_sums({3, 1}) == std::vector<long long>{3, 4});
}
