#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "spm/partition.hpp"

namespace spm {

using NodeId = std::uint32_t;

enum class DiagramKind { single, upto };

/// finite: nodes are ordinary piles. infinite: nodes are tails after the
/// implicit infinite first column, and labels are shifted by one.
enum class Coords { finite, infinite };

struct Edge {
  NodeId source;
  int label;
  NodeId target;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Node limit for every construction.
struct Budget {
  static constexpr std::size_t default_max_nodes = 10'000'000;
  std::size_t max_nodes = default_max_nodes;

  /// Reads SPM_BUDGET, falling back to the default.
  static Budget from_env();
};

/// Labelled DAG over interned partitions.
class Diagram {
 public:
  Diagram(DiagramKind kind, int n, Coords coords = Coords::finite, Budget budget = {});

  DiagramKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  Coords coords() const noexcept { return coords_; }

  /// Returns the id of s, inserting it when new.
  NodeId intern(const Partition& s);
  std::optional<NodeId> find(const Partition& s) const;
  /// Throws NodeNotFound.
  NodeId id_of(const Partition& s) const;
  bool contains(const Partition& s) const { return index_.contains(s); }

  void add_edge(NodeId source, int label, NodeId target);

  /// Sorts edges by (source, label, target), drops duplicates and builds
  /// the adjacency index. Called by every builder before returning.
  void finalize();

  const std::vector<Partition>& nodes() const noexcept { return nodes_; }
  const Partition& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Requires finalize().
  std::span<const Edge> out_edges(NodeId id) const;
  std::vector<NodeId> sources() const;
  std::vector<NodeId> sinks() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.coords_ == b.coords_ && a.nodes_ == b.nodes_ &&
           a.edges_ == b.edges_;
  }

 private:
  DiagramKind kind_;
  int n_;
  Coords coords_;
  Budget budget_;
  std::vector<Partition> nodes_;
  std::unordered_map<Partition, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
};

/// Every configuration reachable from (n), ids in BFS discovery order with
/// successors taken by ascending label.
Diagram build_bfs(int n, Budget budget = {});

/// Renumbers nodes in BFS order from the unique source (ascending labels).
/// Two diagrams with the same labelled graph canonicalize identically.
Diagram canonical(const Diagram& d);

/// Relation of a to b in dominance order; `above` means a >= b, i.e. b is
/// reachable from a.
enum class Relation { equal, above, below, incomparable };

const char* to_string(Relation r) noexcept;

/// Prefix-sum comparison. Throws GrainMismatch.
Relation leq(const Partition& a, const Partition& b);

/// Partition whose prefix sums are the pointwise minimum. Throws GrainMismatch.
Partition infimum(const Partition& a, const Partition& b);

/// Descendant/ancestor closure of a finalized diagram.
class Reachability {
 public:
  explicit Reachability(const Diagram& d);

  /// target is a descendant of source (or equal).
  bool reaches(NodeId source, NodeId target) const { return below_[source].test(target); }
  const boost::dynamic_bitset<>& descendants(NodeId id) const { return below_[id]; }
  const boost::dynamic_bitset<>& ancestors(NodeId id) const { return above_[id]; }

  /// Greatest common descendant; empty when it is not unique.
  std::optional<NodeId> meet(NodeId a, NodeId b) const;
  /// Least common ancestor; empty when it is not unique.
  std::optional<NodeId> join(NodeId a, NodeId b) const;

  /// Topological order from the sources.
  const std::vector<NodeId>& order() const noexcept { return order_; }

 private:
  static std::optional<NodeId> extremum(const boost::dynamic_bitset<>& common,
                                        const std::vector<boost::dynamic_bitset<>>& beyond,
                                        const std::vector<boost::dynamic_bitset<>>& covered);

  std::vector<NodeId> order_;
  std::vector<boost::dynamic_bitset<>> below_;
  std::vector<boost::dynamic_bitset<>> above_;
};

/// Minimum of the common ancestors of a and b in d. Throws NodeNotFound.
Partition supremum(const Partition& a, const Partition& b, const Diagram& d);

struct LatticeReport {
  std::size_t nodes = 0;
  std::size_t pairs = 0;
  bool unique_source = false;
  bool unique_sink = false;
  std::size_t missing_meets = 0;
  std::size_t missing_joins = 0;
  std::size_t formula_disagreements = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Exhaustive pair check of a single-n diagram: unique top and bottom,
/// unique meet and join per pair, and prefix-sum meet equal to the
/// diagram meet.
LatticeReport check_lattice(const Diagram& d);

struct SublatticeReport {
  std::size_t members = 0;
  std::size_t pairs = 0;
  std::size_t meet_escapes = 0;
  std::size_t join_escapes = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Closure of `members` under the diagram meet and join.
SublatticeReport check_sublattice(const Diagram& d, const std::vector<NodeId>& members);
SublatticeReport check_sublattice(const Diagram& d, const Reachability& reach,
                                  const std::vector<NodeId>& members);

}  // namespace spm
