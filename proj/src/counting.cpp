#include "spm/counting.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "spm/core.hpp"
#include "spm/errors.hpp"
#include "spm/incremental.hpp"
#include "spm/sptree.hpp"

namespace spm {

long long CountTables::at(int i, int m) const noexcept {
  if (i < 0 || m < 0 || static_cast<std::size_t>(i) >= p.size()) return 0;
  const auto& row = p[static_cast<std::size_t>(i)];
  return static_cast<std::size_t>(m) < row.size() ? row[static_cast<std::size_t>(m)] : 0;
}

namespace {

// Largest i with T_i <= n.
int max_stairs(int n) {
  int i = 0;
  while (triangular(i + 1) <= n) ++i;
  return i;
}

CountTables empty_tables(int max_n) {
  CountTables t;
  t.p.assign(static_cast<std::size_t>(max_stairs(std::max(max_n, 0)) + 1),
             std::vector<long long>(static_cast<std::size_t>(max_n + 1), 0));
  return t;
}

long long& cell(CountTables& t, int i, int m) { return t.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]; }

}  // namespace

CountTables p_table_oracle(int max_n, Budget budget) {
  if (max_n < 0) throw Error("table bound must be non-negative");
  CountTables t = empty_tables(max_n);
  for (int m = 0; m <= max_n; ++m) {
    const Diagram d = build_bfs(m, budget);
    for (const Partition& s : d.nodes()) {
      const int e = stair_length(s);
      for (int i = 0; i <= e; ++i) ++cell(t, i, m);
    }
  }
  return t;
}

const char* to_string(DeltaVariant v) noexcept {
  switch (v) {
    case DeltaVariant::printed_corollary: return "printed-corollary";
    case DeltaVariant::printed_theorem3: return "printed-theorem3";
    case DeltaVariant::corrected: return "corrected";
  }
  return "?";
}

DeltaVariant parse_delta_variant(std::string_view name) {
  for (DeltaVariant v : {DeltaVariant::printed_corollary, DeltaVariant::printed_theorem3, DeltaVariant::corrected}) {
    if (name == to_string(v)) return v;
  }
  throw Error("unknown delta variant '" + std::string(name) + "'");
}

int delta(DeltaVariant v, int i, int n) {
  switch (v) {
    case DeltaVariant::printed_corollary: return triangular_root(n) >= 0 ? 1 : 0;
    case DeltaVariant::printed_theorem3: {
      const int k = triangular_root(n + 2);
      return k >= 0 && i <= k ? 1 : 0;
    }
    case DeltaVariant::corrected: return triangular_root(n + 2) == i ? 1 : 0;
  }
  return 0;
}

CountTables p_recursion(int max_n, DeltaVariant variant) {
  if (max_n < 2) throw Error("recursion needs at least two grains");
  CountTables t = empty_tables(max_n);
  const int top = static_cast<int>(t.p.size()) - 1;
  if (top >= 1) cell(t, 1, 1) = 1;
  for (int m = 3; m <= max_n; ++m) {
    const int n = m - 2;
    for (int i = 1; i <= top; ++i) {
      if (triangular(i) > m) continue;
      long long value = t.at(i, n - i + 1) + delta(variant, i, n);
      for (int j = i + 1; j <= top; ++j) value += t.at(j, n + 1);
      cell(t, i, m) = value;
    }
  }
  for (int m = 0; m <= max_n; ++m) cell(t, 0, m) = spm_size_via_p(m, t);
  return t;
}

long long spm_size_via_p(int n, const CountTables& tables) {
  if (n < 0) throw Error("grain count must be non-negative");
  if (n - 1 > tables.max_n()) throw Error("tables do not cover " + std::to_string(n - 1) + " grains");
  long long size = 1;
  for (int m = 0; m < n; ++m) {
    for (std::size_t i = 1; i < tables.p.size(); ++i) size += tables.at(static_cast<int>(i), m);
  }
  return size;
}

long long c_printed(int l, int k) {
  if (l <= 0 || k <= 0) return 0;
  if (k == 1) return 1;
  if (l == 1) return k;
  long long value = c_printed(l - k, k) + (k > l ? 0 : 1);
  for (int i = 1; i <= k - 1; ++i) value += c_printed(l - i + 1, k - i);
  return value;
}

namespace {

class PathCounts {
 public:
  long long c(int l, int k) {
    if (l <= 0 || k <= 0) return 0;
    const auto key = pack(l, k);
    if (auto it = c_.find(key); it != c_.end()) return it->second;
    long long value = 0;
    for (int i = 1; i <= k; ++i) value += d(l - 1, i);
    return c_[key] = value;
  }

  long long d(int m, int k) {
    if (m < 0 || k <= 0) return 0;
    if (m == 0 || k == 1) return 1;
    const auto key = pack(m, k);
    if (auto it = d_.find(key); it != d_.end()) return it->second;
    long long value = m <= k - 1 ? 1 : 0;
    for (int j = 1; j <= k - 2; ++j) value += c(m - j + 1, k - 1 - j);
    value += c(m - k + 1, k);
    return d_[key] = value;
  }

 private:
  static long long pack(int a, int b) { return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b); }
  std::unordered_map<long long, long long> c_;
  std::unordered_map<long long, long long> d_;
};

PathCounts& path_counts() {
  thread_local PathCounts counts;
  return counts;
}

}  // namespace

long long c_structural(int l, int k) { return path_counts().c(l, k); }
long long d_structural(int m, int k) { return path_counts().d(m, k); }

const char* to_string(CVariant v) noexcept { return v == CVariant::printed ? "printed-c" : "structural-c"; }

CVariant parse_c_variant(std::string_view name) {
  if (name == "printed-c" || name == "printed") return CVariant::printed;
  if (name == "structural-c" || name == "structural") return CVariant::structural;
  throw Error("unknown c variant '" + std::string(name) + "'");
}

long long c_value(CVariant v, int l, int k) { return v == CVariant::printed ? c_printed(l, k) : c_structural(l, k); }

const char* to_string(TreeSumMode m) noexcept { return m == TreeSumMode::printed ? "printed" : "structural"; }

long long spm_size_via_tree(int n, TreeSumMode mode, CVariant variant) {
  if (n < 0) throw Error("grain count must be non-negative");
  long long size = 1;
  if (mode == TreeSumMode::printed) {
    const int k = max_stairs(n);
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= i; ++j) size += c_value(variant, n - i * (i - 1) / 2 - j + 1, i - j + 1);
    }
    return size;
  }
  for (int k = 1; triangular(k) <= n; ++k) {
    const int rest = n - static_cast<int>(triangular(k));
    size += c_value(variant, rest, k);
    for (int m = 1; m <= k - 1; ++m) size += c_value(variant, rest - (k - m), m);
  }
  return size;
}

std::size_t ReconciliationReport::mismatches(std::string_view formula, std::string_view variant) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const ReconciliationRow& r) {
    return r.formula == formula && r.variant == variant && !r.match();
  }));
}

const ReconciliationRow* ReconciliationReport::find(std::string_view formula, std::string_view variant,
                                                    std::string_view args) const {
  for (const ReconciliationRow& r : rows) {
    if (r.formula == formula && r.variant == variant && r.args == args) return &r;
  }
  return nullptr;
}

std::string ReconciliationReport::to_csv() const {
  std::ostringstream os;
  for (const std::string& note : notes) os << "# " << note << '\n';
  os << "formula,variant,args,formula_value,oracle_value,status\n";
  for (const ReconciliationRow& r : rows) {
    os << r.formula << ',' << r.variant << ',' << r.args << ',' << r.formula_value << ',' << r.oracle_value << ','
       << r.status() << '\n';
  }
  return os.str();
}

std::string ReconciliationReport::to_json() const {
  nlohmann::ordered_json j;
  j["notes"] = notes;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ReconciliationRow& r : rows) {
    j["rows"].push_back({{"formula", r.formula},
                         {"variant", r.variant},
                         {"args", r.args},
                         {"formula_value", r.formula_value},
                         {"oracle_value", r.oracle_value},
                         {"status", r.status()}});
  }
  return j.dump(2) + "\n";
}

namespace {

std::string args2(const char* a, int x, const char* b, int y) {
  return std::string(a) + "=" + std::to_string(x) + ";" + b + "=" + std::to_string(y);
}

std::string dotted(const Partition& s) {
  std::string out = to_string(s);
  std::replace(out.begin(), out.end(), ',', '.');
  return out.empty() ? "()" : out;
}

}  // namespace

ReconciliationReport reconcile(const ReconcileOptions& options) {
  if (options.max_n < 2 || options.max_l < 1 || options.max_k < 1) throw Error("reconcile needs max-n >= 2, max-l >= 1, max-k >= 1");
  ReconciliationReport report;
  report.notes = {
      "p recursion initial conditions: p(1,1)=1, p(i,1)=0 for i>1, p(i,2)=0 for i>0, p(i,m)=0 for m<=0 or T_i>m",
      "printed c: first case read as l<=0 or k<=0",
      "oracle for c(l,k): nodes at depth l under staircase(k) using its first k sons",
      "oracle for d(m,k): nodes at depth m under staircase(k) shifted on column k",
      "generating counts: printed-sum reads the radicand as 17/4+2n, printed-product as 17/4*2n",
      "status mismatch rows are findings, not failures",
  };
  auto add = [&](std::string formula, std::string variant, std::string args, long long value, long long oracle) {
    report.rows.push_back({std::move(formula), std::move(variant), std::move(args), value, oracle});
  };

  const CountTables oracle = p_table_oracle(options.max_n, options.budget);
  const int top = static_cast<int>(oracle.p.size()) - 1;

  for (DeltaVariant v : {DeltaVariant::printed_corollary, DeltaVariant::printed_theorem3, DeltaVariant::corrected}) {
    const CountTables rec = p_recursion(options.max_n, v);
    for (int m = 1; m <= options.max_n; ++m) {
      for (int i = 1; i <= top; ++i) add("p_recursion", to_string(v), args2("i", i, "m", m), rec.at(i, m), oracle.at(i, m));
    }
  }

  for (int n = 0; n <= options.max_n; ++n) add("spm_size_via_p", "oracle-tables", "n=" + std::to_string(n), spm_size_via_p(n, oracle), oracle.spm_size(n));

  for (int k = 1; k <= options.max_k; ++k) {
    const TreeLevels x = build_subtree(staircase(k), options.max_l, options.budget);
    for (int l = 1; l <= options.max_l; ++l) {
      const long long truth = count_paths_oracle(x, x.root(), SubtreeKind::x, k, l);
      add("c", "printed-c", args2("l", l, "k", k), c_printed(l, k), truth);
      add("c", "structural-c", args2("l", l, "k", k), c_structural(l, k), truth);
    }
  }
  for (int k = 1; k <= options.max_k; ++k) {
    const TreeLevels nk = build_subtree(*add_grain(staircase(k), k), options.max_l, options.budget);
    for (int m = 0; m <= options.max_l; ++m) {
      add("d", "structural", args2("m", m, "k", k), d_structural(m, k), count_paths_oracle(nk, nk.root(), SubtreeKind::n, k, m));
    }
  }

  for (TreeSumMode mode : {TreeSumMode::printed, TreeSumMode::structural}) {
    for (CVariant cv : {CVariant::printed, CVariant::structural}) {
      const std::string variant = std::string(to_string(mode)) + "/" + to_string(cv);
      for (int n = 0; n <= options.max_n; ++n) add("spm_size_via_tree", variant, "n=" + std::to_string(n), spm_size_via_tree(n, mode, cv), oracle.spm_size(n));
    }
  }

  for (int n = 1; n <= options.max_n; ++n) {
    std::vector<Partition> bodies;
    for (const GeneratingPartition& g : generating_partitions(n)) bodies.push_back(g.body);
    const Diagram d = build_bfs(n, options.budget);
    std::vector<Partition> maxima;
    for (const auto& [k, q] : q_classes(d, 1)) {
      if (q.maximum) maxima.push_back(d.node(*q.maximum));
    }
    std::sort(bodies.begin(), bodies.end());
    std::sort(maxima.begin(), maxima.end());
    add("generating_partitions", "q-class-maxima", "n=" + std::to_string(n), static_cast<long long>(bodies.size()), static_cast<long long>(maxima.size()));
    std::vector<Partition> diff;
    std::set_symmetric_difference(bodies.begin(), bodies.end(), maxima.begin(), maxima.end(), std::back_inserter(diff));
    for (const Partition& s : diff) {
      const bool enumerated = std::binary_search(bodies.begin(), bodies.end(), s);
      add("generating_partition_body", "q-class-maxima", "n=" + std::to_string(n) + ";body=" + dotted(s), enumerated ? 1 : 0, enumerated ? 0 : 1);
    }
  }
  for (int n = 4; n <= options.max_generating_n; ++n) {
    const auto truth = static_cast<long long>(generating_partitions(n).size());
    const std::string args = "n=" + std::to_string(n);
    add("generating_count", "printed-sum", args, generating_count_printed(n, RadicandReading::sum), truth);
    add("generating_count", "printed-product", args, generating_count_printed(n, RadicandReading::product), truth);
    add("generating_count", "interval", args, generating_count_interval(n), truth);
  }

  const PSetTable sets(options.max_n, options.budget);
  for (int target = 3; target <= options.max_n; ++target) {
    for (int i = 1; triangular(i) <= target; ++i) {
      const DecompositionReport dec = decompose_strata(i, target - 2, sets);
      const std::string args = args2("i", i, "n+2", target);
      add("decomposition_multiset", "printed", args, static_cast<long long>(dec.rhs.size()), static_cast<long long>(dec.truth.size()));
      for (const Partition& s : dec.duplicates) {
        const auto copies = std::count(dec.rhs.begin(), dec.rhs.end(), s);
        add("decomposition_duplicate", "printed", args + ";element=" + dotted(s), copies, 1);
      }
      for (const Partition& s : dec.missing) add("decomposition_missing", "printed", args + ";element=" + dotted(s), 0, 1);
      for (const Partition& s : dec.extra) add("decomposition_extra", "printed", args + ";element=" + dotted(s), 1, 0);
    }
  }
  return report;
}

}  // namespace spm
