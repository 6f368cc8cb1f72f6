#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "spm/core.hpp"
#include "spm/diagram.hpp"
#include "spm/errors.hpp"

using spm::Partition;

namespace {

std::set<oracle::Edge> edge_set(const spm::Diagram& d) {
  std::set<oracle::Edge> out;
  for (const spm::Edge& e : d.edges()) out.insert({d.node(e.source).vec(), e.label, d.node(e.target).vec()});
  return out;
}

}  // namespace

TEST_CASE("BFS diagram of SPM(4)") {
  const spm::Diagram d = spm::build_bfs(4);
  CHECK(d.nodes() == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}});
  CHECK(d.edges().size() == 3);
  CHECK(spm::build_bfs(0).size() == 1);
  CHECK(spm::build_bfs(0).edges().empty());
  CHECK(spm::build_bfs(7).size() == 9);
}

TEST_CASE("BFS agrees with simulation") {
  for (int n = 0; n <= 16; ++n) {
    const spm::Diagram d = spm::build_bfs(n);
    const auto lattice = oracle::simulate(n);
    std::vector<oracle::Pile> nodes;
    for (const Partition& s : d.nodes()) nodes.push_back(s.vec());
    std::sort(nodes.begin(), nodes.end());
    CHECK(nodes == lattice.nodes);
    CHECK(edge_set(d) == lattice.edges);
    CHECK(d.sources() == std::vector<spm::NodeId>{0});
    REQUIRE(d.sinks().size() == 1);
    CHECK(d.node(d.sinks().front()) == spm::fixed_point(n));
  }
}

TEST_CASE("budget limits construction") {
  spm::Budget tiny;
  tiny.max_nodes = 5;
  CHECK_THROWS_AS(spm::build_bfs(10, tiny), spm::BudgetExceeded);
  CHECK_NOTHROW(spm::build_bfs(4, tiny));
}

TEST_CASE("canonical order is stable") {
  const spm::Diagram d = spm::build_bfs(9);
  CHECK(spm::canonical(d) == d);
}

TEST_CASE("dominance comparisons") {
  CHECK(spm::leq({3, 1}, {2, 2}) == spm::Relation::above);
  CHECK(spm::leq({2, 2}, {3, 1}) == spm::Relation::below);
  CHECK(spm::leq({4, 1, 1}, {3, 3}) == spm::Relation::incomparable);
  CHECK(spm::leq({2, 1}, {2, 1}) == spm::Relation::equal);
  CHECK_THROWS_AS(spm::leq({2, 1}, {2}), spm::GrainMismatch);
}

TEST_CASE("meets and joins") {
  CHECK(spm::infimum({4, 2}, {3, 3}) == Partition{3, 3});
  CHECK(spm::infimum({2, 2}, {2, 2}) == Partition{2, 2});
  CHECK(spm::infimum({5, 2}, {4, 3}) == Partition{4, 3});
  const spm::Diagram d6 = spm::build_bfs(6);
  CHECK(spm::supremum({4, 1, 1}, {3, 3}, d6) == Partition{4, 2});
  CHECK(spm::supremum({2, 2}, {2, 1, 1}, spm::build_bfs(4)) == Partition{2, 2});
  CHECK(spm::supremum({6}, {3, 2, 1}, d6) == Partition{6});
  CHECK_THROWS_AS(spm::supremum({7}, {3, 2, 1}, d6), spm::NodeNotFound);
}

TEST_CASE("reachability meets and joins match brute force") {
  for (int n = 0; n <= 10; ++n) {
    const spm::Diagram d = spm::build_bfs(n);
    const spm::Reachability reach(d);
    const auto lattice = oracle::simulate(n);
    for (spm::NodeId a = 0; a < d.size(); ++a) {
      for (spm::NodeId b = 0; b < d.size(); ++b) {
        oracle::Pile m, j;
        REQUIRE(oracle::meet(lattice, d.node(a).vec(), d.node(b).vec(), m));
        REQUIRE(oracle::join(lattice, d.node(a).vec(), d.node(b).vec(), j));
        CHECK(d.node(*reach.meet(a, b)).vec() == m);
        CHECK(d.node(*reach.join(a, b)).vec() == j);
        CHECK(spm::infimum(d.node(a), d.node(b)).vec() == m);
        CHECK(reach.reaches(a, b) == (lattice.below.at(d.node(a).vec()).count(d.node(b).vec()) > 0));
      }
    }
  }
}

TEST_CASE("lattice checks") {
  CHECK(spm::check_lattice(spm::build_bfs(6)).passed());
  CHECK(spm::check_lattice(spm::build_bfs(0)).passed());
  const auto report = spm::check_lattice(spm::build_bfs(9));
  CHECK(report.passed());
  CHECK(report.nodes == 15);
}

TEST_CASE("the column-1 image of SPM(10) is a sublattice of SPM(11)") {
  const spm::Diagram d10 = spm::build_bfs(10);
  const spm::Diagram d11 = spm::build_bfs(11);
  std::vector<spm::NodeId> image;
  for (const Partition& s : d10.nodes()) image.push_back(d11.id_of(*spm::add_grain(s, 1)));
  CHECK(spm::check_sublattice(d11, image).passed());
}

TEST_CASE("a non-closed subset is detected") {
  const spm::Diagram d = spm::build_bfs(6);
  const std::vector<spm::NodeId> pair{d.id_of({4, 1, 1}), d.id_of({3, 3})};
  const auto report = spm::check_sublattice(d, pair);
  CHECK_FALSE(report.passed());
  CHECK(report.meet_escapes > 0);
  CHECK(report.join_escapes > 0);
}
