#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spm/diagram.hpp"

namespace spm {

/// p[i][m] = number of elements of SPM(m) whose stairs have length >= i.
/// p[0][m] = |SPM(m)|.
struct CountTables {
  std::vector<std::vector<long long>> p;  // p[i][m], m = 0..max_n

  int max_n() const noexcept { return p.empty() ? -1 : static_cast<int>(p[0].size()) - 1; }
  /// Zero outside the table.
  long long at(int i, int m) const noexcept;
  long long spm_size(int m) const noexcept { return at(0, m); }
};

/// Direct scan of build_bfs(m) for every m <= max_n.
CountTables p_table_oracle(int max_n, Budget budget = {});

enum class DeltaVariant {
  printed_corollary,  // 1 iff n is triangular
  printed_theorem3,   // 1 iff n+2 = T_k with i <= k
  corrected,          // 1 iff n+2 = T_k with i = k
};

const char* to_string(DeltaVariant v) noexcept;
/// Throws Error on an unknown name.
DeltaVariant parse_delta_variant(std::string_view name);

/// δ_{i,n+2} under a variant.
int delta(DeltaVariant v, int i, int n);

/// Evaluates p_{i,n+2} = p_{i,n-i+1} + sum_{j>i} p_{j,n+1} + δ on its own
/// values for m >= 3, from p_{1,1} = 1, p_{i,1} = 0 for i > 1, p_{i,2} = 0
/// for i > 0, p_{i,m} = 0 for m <= 0 and p_{i,m} = 0 whenever T_i > m.
/// Row 0 is filled by spm_size_via_p.
CountTables p_recursion(int max_n, DeltaVariant variant);

/// |SPM(n-1)| + sum_{i>=1} p_{i,n-1}; |SPM(0)| = 1. Throws Error when the
/// tables do not cover n-1.
long long spm_size_via_p(int n, const CountTables& tables);

/// The four-case recurrence as typeset, first case read as "l <= 0 or k <= 0".
long long c_printed(int l, int k);

/// Nodes at depth l of an X_k subtree, from the structure of the N_k subtrees.
long long c_structural(int l, int k);
/// Nodes at depth m of an N_k subtree.
long long d_structural(int m, int k);

enum class CVariant { printed, structural };
const char* to_string(CVariant v) noexcept;
CVariant parse_c_variant(std::string_view name);
long long c_value(CVariant v, int l, int k);

enum class TreeSumMode {
  printed,     // the typeset double sum over i, j
  structural,  // one term per chain attachment
};
const char* to_string(TreeSumMode m) noexcept;
long long spm_size_via_tree(int n, TreeSumMode mode, CVariant variant);

struct ReconciliationRow {
  std::string formula;
  std::string variant;
  std::string args;
  long long formula_value = 0;
  long long oracle_value = 0;
  bool match() const noexcept { return formula_value == oracle_value; }
  std::string status() const { return match() ? "match" : "mismatch"; }
};

struct ReconciliationReport {
  std::vector<std::string> notes;
  std::vector<ReconciliationRow> rows;

  std::size_t mismatches(std::string_view formula, std::string_view variant) const;
  const ReconciliationRow* find(std::string_view formula, std::string_view variant, std::string_view args) const;

  /// Notes as leading '#' lines, then the header and one line per row.
  std::string to_csv() const;
  std::string to_json() const;
};

struct ReconcileOptions {
  int max_n = 25;
  int max_l = 15;
  int max_k = 6;
  int max_generating_n = 200;
  Budget budget = {};
};

ReconciliationReport reconcile(const ReconcileOptions& options);

}  // namespace spm
