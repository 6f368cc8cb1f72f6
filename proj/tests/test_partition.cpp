#include <doctest.h>

#include <unordered_set>

#include "spm/errors.hpp"
#include "spm/partition.hpp"

using spm::Partition;

TEST_CASE("construction trims trailing zeros and validates order") {
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK(Partition({}).empty());
  CHECK(Partition({2, 2, 1}).grains() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), spm::NotAPartition);
  CHECK_THROWS_AS(Partition({2, -1}), spm::NotAPartition);
  CHECK_THROWS_AS(Partition({2, 0, 1}), spm::NotAPartition);
}

TEST_CASE("columns past the end are empty") {
  const Partition s{4, 2};
  CHECK(s.column(1) == 4);
  CHECK(s.column(2) == 2);
  CHECK(s.column(3) == 0);
  CHECK(s.column(0) == 0);
  CHECK(s.length() == 2);
}

TEST_CASE("text round trip") {
  for (const Partition& s : {Partition{}, Partition{1}, Partition{4, 3, 3}, Partition{5, 4, 1}}) {
    CHECK(spm::parse_partition(spm::to_string(s)) == s);
  }
  CHECK(spm::to_string(Partition{3, 2, 1}) == "3,2,1");
  CHECK(spm::parse_partition(" 4, 2 ") == Partition{4, 2});
  CHECK_THROWS_AS(spm::parse_partition("4,x"), spm::NotAPartition);
  CHECK_THROWS_AS(spm::parse_partition("1,2"), spm::NotAPartition);
}

TEST_CASE("raised prefix adds one grain per column") {
  CHECK(Partition{2, 1}.raised_prefix(3) == Partition{3, 2, 1});
  CHECK(Partition{}.raised_prefix(2) == Partition{1, 1});
}

TEST_CASE("staircases and triangular numbers") {
  CHECK(spm::staircase(3) == Partition{3, 2, 1});
  CHECK(spm::staircase(0).empty());
  CHECK(spm::triangular(4) == 10);
  CHECK(spm::triangular_root(10) == 4);
  CHECK(spm::triangular_root(0) == 0);
  CHECK(spm::triangular_root(11) == -1);
}

TEST_CASE("all partitions of n") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(spm::all_partitions(n).size() == static_cast<std::size_t>(expected[n]));
  const auto p4 = spm::all_partitions(4);
  CHECK(p4.front() == Partition{4});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
}

TEST_CASE("hash distinguishes small piles") {
  std::unordered_set<Partition> set;
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& s : spm::all_partitions(n)) set.insert(s);
  }
  std::size_t total = 0;
  for (int n = 0; n <= 12; ++n) total += spm::all_partitions(n).size();
  CHECK(set.size() == total);
}
