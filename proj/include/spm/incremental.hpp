#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spm/diagram.hpp"

namespace spm {

/// Nodes of a single-n diagram whose stair length is at least i (P_i).
std::vector<Partition> p_set(const Diagram& d, int i);

/// What one pass of build_next added, per stair length i.
struct BuildStep {
  int i;
  std::vector<Partition> gained_successor;  // P_i shifted on column i
  std::vector<Partition> added;             // P_i shifted on column i+1
  std::size_t back_edges = 0;
};

struct BuildTrace {
  std::vector<BuildStep> steps;
};

/// SPM(n+1) from SPM(n) through the stratification by stair length:
/// shift everything on column 1, then for each i with P_i non-empty copy
/// P_i shifted on column i+1 with its internal edges, connect s↓i -> s↓(i+1)
/// with label i, and add the back edge on column i+1 where that column of s
/// is a cliff. The result is canonical (ids equal to build_bfs(n+1)).
Diagram build_next(const Diagram& d, Budget budget = {}, BuildTrace* trace = nullptr);

/// SPM(n) by iterating build_next from SPM(0).
Diagram build_incremental(int n, Budget budget = {});

/// One class Q_{i,k}: members of P_i whose leading part is k.
struct QClass {
  int k = 0;
  std::vector<NodeId> members;
  std::optional<NodeId> maximum;
  /// Every member is reached from the maximum using only labels > i+1.
  bool generated_from_maximum = false;
  /// Smallest label on an edge with both ends in the class; 0 when none.
  int min_internal_label = 0;
  bool is_lattice = false;
};

/// P_i split by leading part, each class verified against d.
std::map<int, QClass> q_classes(const Diagram& d, int i);

struct GeneratingPartition {
  int k;
  Partition body;
  int l;  // length of the run k-1, k-1, k-2, ... after the first two parts
  int r;  // trailing remainder, 0 when absent
};

/// Maximal elements of the classes Q_{1,k}, one per admissible k, from
/// the inequalities 2k-1 <= n <= k-1 + k(k+1)/2.
std::vector<GeneratingPartition> generating_partitions(int n);

/// How the floor formula for the generating-partition count is read.
enum class RadicandReading {
  product,  // sqrt(17/4 * 2n) as typeset
  sum,      // sqrt(17/4 + 2n), the bound used in the derivation
};

long long generating_count_printed(int n, RadicandReading reading);

/// Integers in [-3/2 + sqrt(17/4 + 2n), (n+1)/2].
long long generating_count_interval(int n);

/// P_i(m) for all m <= max_n, taken from BFS diagrams.
class PSetTable {
 public:
  explicit PSetTable(int max_n, Budget budget = {});

  int max_n() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
  /// Sorted; empty for m outside [0, max_n] or i beyond every stair length.
  std::vector<Partition> p_set(int i, int m) const;
  long long count(int i, int m) const;
  std::size_t spm_size(int m) const { return nodes_.at(static_cast<std::size_t>(m)).size(); }

 private:
  std::vector<std::vector<Partition>> nodes_;
};

/// Right-hand side of the decomposition
///   P_i(n+2) = T(n+2) + P_i(n-i+1) raised on columns 1..i+1
///              + sum_{k>i} P_k(n+1) raised on column k+1
/// evaluated as a multiset and compared with the true P_i(n+2).
struct DecompositionReport {
  int i = 0;
  int n = 0;  // the right-hand side targets n+2 grains
  std::vector<Partition> rhs;    // sorted multiset
  std::vector<Partition> truth;  // sorted set
  std::vector<Partition> duplicates;
  std::vector<Partition> missing;  // in truth, absent from rhs
  std::vector<Partition> extra;    // in rhs, absent from truth

  bool holds() const noexcept { return rhs == truth; }
  std::string status() const { return holds() ? "ok" : "multiset-mismatch"; }
  std::string to_json() const;
};

/// Requires i(i+1)/2 <= n+2 and tables covering n+2.
DecompositionReport decompose_strata(int i, int n, const PSetTable& tables);

/// Successor laws for adding a grain on column i of s when e(s) >= i-1.
struct SuccessorLawReport {
  std::size_t checked = 0;
  std::size_t plateau_cases = 0;
  std::size_t cliff_cases = 0;
  std::size_t step_cases = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// Exhaustive over s in d and 1 <= i <= e(s)+1. For cliffs also checks
/// that s↓i falls on column i to a pile reached from s↓1 by the label path
/// i, i-1, ..., 1 inside the column-1 image of d.
SuccessorLawReport check_successor_laws(const Diagram& d);

}  // namespace spm
