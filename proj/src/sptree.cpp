#include "spm/sptree.hpp"

#include <sstream>

#include "spm/core.hpp"
#include "spm/errors.hpp"

namespace spm {

bool is_nk_root(const Partition& s, int k) {
  if (k < 1) return false;
  for (int j = 1; j <= k - 2; ++j) {
    if (drop(s, j) != 1) return false;
  }
  if (k >= 2 && drop(s, k - 1) != 0) return false;
  return drop(s, k) >= 2;
}

std::optional<int> nk_root_class(const Partition& s) {
  // A root has e(s) = k-2, except k = 1 where column 1 itself is a cliff.
  if (drop(s, 1) >= 2) return 1;
  const int k = stair_length(s) + 2;
  if (is_nk_root(s, k)) return k;
  return std::nullopt;
}

bool is_xk_root(const Partition& s, int k) {
  if (k < 1 || k > stair_length(s) + 1) return false;
  for (int i = 1; i <= k; ++i) {
    auto son = add_grain(s, i);
    if (!son || !is_nk_root(*son, i)) return false;
  }
  return true;
}

int xk_max(const Partition& s) {
  int k = 0;
  while (is_xk_root(s, k + 1)) ++k;
  return k;
}

NodeId TreeLevels::id_of(const Partition& s) const {
  auto id = find(s);
  if (!id) throw NodeNotFound("(" + to_string(s) + ") is not in the tree");
  return *id;
}

std::optional<NodeId> TreeLevels::find(const Partition& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string TreeLevels::to_dot() const {
  std::ostringstream os;
  os << "digraph SPT {\n";
  for (NodeId v = 0; v < nodes_.size(); ++v) os << "  p_" << v << " [label=\"" << to_string(nodes_[v].value) << "\"];\n";
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    for (NodeId c : nodes_[v].children) os << "  p_" << v << " -> p_" << c << " [label=\"" << nodes_[c].label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

TreeLevels build_subtree(const Partition& root, int depth, Budget budget) {
  if (depth < 0) throw Error("depth must be non-negative");
  TreeLevels t;
  auto push = [&](Partition value, int level, NodeId parent, int label) {
    if (t.nodes_.size() >= budget.max_nodes) throw BudgetExceeded("tree exceeds " + std::to_string(budget.max_nodes) + " nodes");
    TreeLevels::Node node;
    node.n_root = nk_root_class(value);
    node.x_max = xk_max(value);
    node.level = level;
    node.parent = parent;
    node.label = label;
    if (label != 0) node.memberships = t.nodes_[parent].memberships;
    if (node.n_root) node.memberships.insert(*node.n_root);
    const auto id = static_cast<NodeId>(t.nodes_.size());
    t.index_.emplace(value, id);
    node.value = std::move(value);
    t.nodes_.push_back(std::move(node));
    return id;
  };
  t.levels_.push_back({push(root, root.grains(), 0, 0)});
  for (int step = 1; step <= depth; ++step) {
    std::vector<NodeId> next;
    for (NodeId parent : t.levels_.back()) {
      const Partition value = t.nodes_[parent].value;
      const int sons = stair_length(value) + 1;
      for (int i = 1; i <= sons; ++i) {
        const NodeId child = push(*add_grain(value, i), value.grains() + 1, parent, i);
        t.nodes_[parent].children.push_back(child);
        next.push_back(child);
      }
    }
    t.levels_.push_back(std::move(next));
  }
  return t;
}

ChainDecomposition chain_decomposition(int depth) {
  if (depth < 1) throw Error("chain depth must be at least 1");
  ChainDecomposition out;
  Partition current;
  out.chain_fixed_points = true;
  for (int level = 0; level <= depth; ++level) {
    if (current != fixed_point(level)) out.chain_fixed_points = false;
    out.chain.push_back(current);
    const int e = stair_length(current);
    if (level < depth && e >= 1) {
      const int k = xk_max(current);
      if (k > 0) out.attachments.push_back({level, k, current});
    }
    current = *add_grain(current, e + 1);
  }
  return out;
}

std::vector<Attachment> expected_attachments(int depth) {
  std::vector<Attachment> out;
  for (int k = 1; triangular(k) < depth; ++k) {
    const int base = static_cast<int>(triangular(k));
    out.push_back({base, k, staircase(k)});
    for (int m = k - 1; m >= 1; --m) {
      const int level = base + (k - m);
      if (level >= depth) break;
      out.push_back({level, m, Partition{}});
    }
  }
  // Roots: the chain node at each level.
  Partition current;
  std::size_t next = 0;
  for (int level = 0; level < depth && next < out.size(); ++level) {
    while (next < out.size() && out[next].level == level) out[next++].root = current;
    current = *add_grain(current, stair_length(current) + 1);
  }
  return out;
}

std::set<int> successors_via_tree(const Partition& s, const TreeLevels& t) {
  const auto& node = t.node(t.id_of(s));
  std::set<int> labels{1};
  for (int k : node.memberships) labels.insert(k + 1);
  return labels;
}

long long count_paths_oracle(const TreeLevels& t, NodeId root, SubtreeKind kind, int k, int l) {
  const auto& start = t.node(root);
  const int root_step = start.level - t.node(t.root()).level;
  if (root_step + l > t.depth()) throw Error("tree depth " + std::to_string(t.depth()) + " too shallow for paths of length " + std::to_string(l));
  if (l < 0) return 0;
  if (l == 0) return 1;
  std::vector<NodeId> frontier;
  for (NodeId c : start.children) {
    if (kind == SubtreeKind::n || t.node(c).label <= k) frontier.push_back(c);
  }
  for (int step = 1; step < l; ++step) {
    std::vector<NodeId> next;
    for (NodeId v : frontier) next.insert(next.end(), t.node(v).children.begin(), t.node(v).children.end());
    frontier = std::move(next);
  }
  return static_cast<long long>(frontier.size());
}

SubtreeStructureReport check_subtree_structure(const TreeLevels& t) {
  SubtreeStructureReport report;
  const int base = t.node(t.root()).level;
  for (NodeId v = 0; v < t.size(); ++v) {
    const auto& node = t.node(v);
    if (node.x_max > 0) ++report.x_roots;
    if (!node.n_root) continue;
    ++report.n_roots;
    const int k = *node.n_root;
    const std::string where = "N_" + std::to_string(k) + " at (" + to_string(node.value) + ")";

    // Labels below the root stay <= k.
    std::vector<NodeId> frontier{v};
    while (!frontier.empty()) {
      std::vector<NodeId> next;
      for (NodeId u : frontier) {
        for (NodeId c : t.node(u).children) {
          ++report.label_bound_checks;
          if (t.node(c).label > k) report.failures.push_back(where + ": label " + std::to_string(t.node(c).label) + " inside");
          next.push_back(c);
        }
      }
      frontier = std::move(next);
    }

    if (k == 1) {
      NodeId u = v;
      bool chain = true;
      while (!t.node(u).children.empty()) {
        if (t.node(u).children.size() != 1 || t.node(t.node(u).children[0]).label != 1) chain = false;
        u = t.node(u).children[0];
      }
      if (chain) ++report.n1_chains;
      else report.failures.push_back(where + ": not a chain labelled 1");
      continue;
    }

    // Chain node j+1 is node j shifted on column k-j.
    NodeId u = v;
    for (int j = 1; j <= k; ++j) {
      const auto& here = t.node(u);
      const int expected_x = j <= k - 2 ? k - 1 - j : (j == k ? k : 0);
      if (here.x_max != expected_x) {
        report.failures.push_back(where + ": chain node " + std::to_string(j) + " roots X_" + std::to_string(here.x_max) +
                                  ", expected X_" + std::to_string(expected_x));
      }
      if (j == k) break;
      if (here.level - base >= t.depth()) break;
      const int label = k - j;
      NodeId son = 0;
      bool found = false;
      for (NodeId c : here.children) {
        if (t.node(c).label == label) {
          son = c;
          found = true;
        }
      }
      if (!found) {
        report.failures.push_back(where + ": chain node " + std::to_string(j) + " has no son " + std::to_string(label));
        break;
      }
      u = son;
    }
  }
  return report;
}

}  // namespace spm
