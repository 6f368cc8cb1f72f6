#include "spm/verify.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "spm/core.hpp"
#include "spm/counting.hpp"
#include "spm/errors.hpp"
#include "spm/incremental.hpp"
#include "spm/infinite.hpp"
#include "spm/sptree.hpp"

namespace spm {

namespace {

using Check = std::function<std::string()>;  // empty string on success

SuiteResult run(std::string name, const Check& check) {
  SuiteResult r{std::move(name), false, {}};
  try {
    r.detail = check();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string first_failure(const std::vector<std::string>& failures) {
  return failures.empty() ? std::string() : failures.front() + " (" + std::to_string(failures.size()) + " total)";
}

}  // namespace

std::vector<SuiteResult> verify_all(int n, Budget budget) {
  if (n < 0) throw Error("verify needs n >= 0");
  std::vector<Diagram> levels;
  for (int m = 0; m <= n; ++m) levels.push_back(build_bfs(m, budget));
  std::vector<SuiteResult> out;

  out.push_back(run("cardinality", [&]() -> std::string {
    const CountTables tables = p_table_oracle(n, budget);
    const TreeLevels tree = build_tree(n, budget);
    Diagram chain = build_bfs(0, budget);
    for (int m = 0; m <= n; ++m) {
      if (m > 0) chain = build_next(chain, budget);
      const auto size = static_cast<long long>(levels[m].size());
      if (static_cast<long long>(chain.size()) != size || static_cast<long long>(tree.level(m).size()) != size ||
          spm_size_via_p(m, tables) != size || spm_size_via_tree(m, TreeSumMode::structural, CVariant::structural) != size) {
        return "counts disagree at n=" + std::to_string(m);
      }
    }
    return {};
  }));

  out.push_back(run("incremental-equality", [&]() -> std::string {
    for (int m = 0; m < n; ++m) {
      if (!(build_next(levels[m], budget) == levels[m + 1])) return "build_next differs at n=" + std::to_string(m);
    }
    return {};
  }));

  out.push_back(run("lattice", [&]() -> std::string {
    for (const Diagram& d : levels) {
      const LatticeReport r = check_lattice(d);
      if (!r.passed()) return "n=" + std::to_string(d.n()) + ": " + first_failure(r.failures);
    }
    return {};
  }));

  out.push_back(run("successor-laws", [&]() -> std::string {
    for (const Diagram& d : levels) {
      const SuccessorLawReport r = check_successor_laws(d);
      if (!r.passed()) return "n=" + std::to_string(d.n()) + ": " + first_failure(r.failures);
    }
    return {};
  }));

  const Diagram upto = build_upto(n, UptoMethod::incremental, budget);

  out.push_back(run("upto-methods", [&]() -> std::string {
    if (!(build_upto(n, UptoMethod::explore, budget) == upto)) return "incremental and explore constructions differ";
    return {};
  }));

  out.push_back(run("shot-vector-order", [&]() -> std::string {
    const Reachability reach(upto);
    for (NodeId a = 0; a < upto.size(); ++a) {
      for (NodeId b = 0; b < upto.size(); ++b) {
        const Relation r = leq_infinite(InfinitePartition(upto.node(a)), InfinitePartition(upto.node(b)));
        const bool dominates = r == Relation::above || r == Relation::equal;
        if (dominates != reach.reaches(a, b)) return "order mismatch at " + to_string(upto.node(a)) + " / " + to_string(upto.node(b));
      }
    }
    return {};
  }));

  out.push_back(run("label-shift", [&]() -> std::string {
    for (const Edge& e : upto.edges()) {
      const Partition& s = upto.node(e.source);
      const Partition& t = upto.node(e.target);
      const auto expected = e.label == 1 ? add_grain(s, 1) : fall(s, e.label - 1);
      if (!expected || *expected != t) return "edge " + to_string(s) + " -" + std::to_string(e.label) + "-> " + to_string(t);
      if (rank(t) != rank(s) + 1) return "rank not graded at " + to_string(s);
    }
    return {};
  }));

  out.push_back(run("pi-embedding", [&]() -> std::string {
    for (const Diagram& d : levels) {
      const Reachability reach(d);
      for (NodeId a = 0; a < d.size(); ++a) {
        for (NodeId b = a; b < d.size(); ++b) {
          const InfinitePartition pa = embed_pi(d.node(a));
          const InfinitePartition pb = embed_pi(d.node(b));
          if (embed_pi(d.node(*reach.meet(a, b))) != inf_infinite(pa, pb) ||
              embed_pi(d.node(*reach.join(a, b))) != sup_infinite(pa, pb)) {
            return "n=" + std::to_string(d.n()) + " at " + to_string(d.node(a)) + " / " + to_string(d.node(b));
          }
        }
      }
    }
    return {};
  }));

  out.push_back(run("filter", [&]() -> std::string {
    const FilterReport r = check_filter_sublattice(build_upto(std::max(n - 1, 0), UptoMethod::incremental, budget), n + 1, budget);
    return first_failure(r.failures);
  }));

  const TreeLevels tree = build_tree(n, budget);

  out.push_back(run("tree-levels", [&]() -> std::string {
    for (int m = 0; m <= n; ++m) {
      std::vector<Partition> a;
      for (NodeId v : tree.level(m)) a.push_back(tree.node(v).value);
      std::vector<Partition> b = levels[m].nodes();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return "level " + std::to_string(m) + " differs from SPM(" + std::to_string(m) + ")";
    }
    return {};
  }));

  out.push_back(run("tree-successors", [&]() -> std::string {
    for (NodeId v = 0; v < tree.size(); ++v) {
      const Partition& s = tree.node(v).value;
      std::set<int> direct;
      for (const InfiniteTransition& t : successors_infinite(chi(s))) direct.insert(t.label);
      if (successors_via_tree(s, tree) != direct) return "labels differ at (" + to_string(s) + ")";
    }
    return {};
  }));

  out.push_back(run("tree-structure", [&]() -> std::string { return first_failure(check_subtree_structure(tree).failures); }));

  out.push_back(run("chain", [&]() -> std::string {
    if (n < 1) return {};
    const ChainDecomposition c = chain_decomposition(n);
    if (!c.chain_fixed_points) return "chain leaves the fixed points";
    if (c.attachments != expected_attachments(n)) return "attachments differ from the chain pattern";
    return {};
  }));

  out.push_back(run("path-counts", [&]() -> std::string {
    if (n < 1) return {};
    for (int k = 1; k <= std::min(n, 6); ++k) {
      const TreeLevels x = build_subtree(staircase(k), n, budget);
      for (int l = 1; l <= n; ++l) {
        if (c_structural(l, k) != count_paths_oracle(x, x.root(), SubtreeKind::x, k, l)) {
          return "c(" + std::to_string(l) + "," + std::to_string(k) + ") disagrees with the tree";
        }
      }
    }
    return {};
  }));

  out.push_back(run("p-recursion", [&]() -> std::string {
    if (n < 2) return {};
    const CountTables oracle = p_table_oracle(n, budget);
    const CountTables rec = p_recursion(n, DeltaVariant::corrected);
    if (rec.p != oracle.p) return "corrected recursion disagrees with the oracle table";
    return {};
  }));

  return out;
}

bool print_suites(const std::vector<SuiteResult>& results, std::ostream& out) {
  bool all = true;
  for (const SuiteResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << ": " << r.detail;
    out << '\n';
    all = all && r.passed;
  }
  return all;
}

}  // namespace spm
