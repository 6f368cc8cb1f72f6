#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spm/diagram.hpp"

namespace spm {

/// N_k root: stairs on columns 1..k-2, a plateau at k-1 and a cliff at k.
/// For k = 1 only the cliff at column 1 is required.
bool is_nk_root(const Partition& s, int k);

/// The k such that s is an N_k root; each pile roots at most one.
std::optional<int> nk_root_class(const Partition& s);

/// X_k root: the first k sons root N_1, ..., N_k. Always false for k <= 0.
bool is_xk_root(const Partition& s, int k);

/// Largest k with is_xk_root(s, k), 0 when none.
int xk_max(const Partition& s);

/// SPT(inf) materialized to a depth. Node ids are assigned level by
/// level, children ordered by label.
class TreeLevels {
 public:
  struct Node {
    Partition value;
    int level = 0;
    NodeId parent = 0;  // the root is its own parent
    int label = 0;      // 0 for the root
    std::vector<NodeId> children;
    std::optional<int> n_root;  // k when the node is an N_k root
    int x_max = 0;
    /// k for every N_k subtree containing this node.
    std::set<int> memberships;
  };

  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId root() const noexcept { return 0; }
  int depth() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<NodeId>& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  /// Throws NodeNotFound.
  NodeId id_of(const Partition& s) const;
  std::optional<NodeId> find(const Partition& s) const;

  /// Labelled father edges as a diagram-like DOT graph.
  std::string to_dot() const;

  friend TreeLevels build_subtree(const Partition& root, int depth, Budget budget);

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> levels_;
  std::unordered_map<Partition, NodeId> index_;
};

/// Subtree of SPT(inf) hanging from `root`, down to `depth` levels below it.
TreeLevels build_subtree(const Partition& root, int depth, Budget budget = {});

/// Levels 0..depth from the empty pile.
inline TreeLevels build_tree(int depth, Budget budget = {}) { return build_subtree(Partition{}, depth, budget); }

struct Attachment {
  int level;
  int k;  // the subtree class X_k
  Partition root;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct ChainDecomposition {
  std::vector<Partition> chain;  // chain[level]
  std::vector<Attachment> attachments;
  bool chain_fixed_points = false;
};

/// Rightmost chain of SPT(inf) from () to `depth`, with X_k attachments
/// at every chain node strictly above the last level.
ChainDecomposition chain_decomposition(int depth);

/// X_k at T_k and X_m at T_k + (k-m) for m = 1..k-1, levels < depth.
std::vector<Attachment> expected_attachments(int depth);

/// {1} together with k+1 for every N_k subtree containing s.
std::set<int> successors_via_tree(const Partition& s, const TreeLevels& t);

/// Class of subtree used by the path counts.
enum class SubtreeKind { x, n };

/// Nodes at distance exactly l below `root` inside the X_k subtree (first
/// k sons of the root, then all descendants) or the N subtree (all
/// descendants). Throws Error when the tree is too shallow.
long long count_paths_oracle(const TreeLevels& t, NodeId root, SubtreeKind kind, int k, int l);

struct SubtreeStructureReport {
  std::size_t n_roots = 0;
  std::size_t x_roots = 0;
  std::size_t n1_chains = 0;
  std::size_t label_bound_checks = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// For every N_k root of t: N_1 subtrees are single chains labelled 1;
/// for k >= 2 the chain k-1, ..., 1 exists, node i roots X_{k-1-i} for
/// i <= k-2 and node k roots X_k; all labels inside are <= k.
SubtreeStructureReport check_subtree_structure(const TreeLevels& t);

}  // namespace spm
