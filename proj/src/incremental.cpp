#include "spm/incremental.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <json.hpp>

#include "spm/core.hpp"
#include "spm/errors.hpp"

namespace spm {

namespace {

void require_single(const Diagram& d) {
  if (d.kind() != DiagramKind::single) throw Error("operation needs a single-n diagram");
}

// Unique maximal element of `common` that dominates all of it.
std::optional<NodeId> greatest(const Reachability& reach, const boost::dynamic_bitset<>& common) {
  std::optional<NodeId> found;
  for (auto m = common.find_first(); m != boost::dynamic_bitset<>::npos; m = common.find_next(m)) {
    if ((reach.ancestors(static_cast<NodeId>(m)) & common).count() == 1) {
      if (found) return std::nullopt;
      found = static_cast<NodeId>(m);
    }
  }
  if (found && !common.is_subset_of(reach.descendants(*found))) return std::nullopt;
  return found;
}

std::optional<NodeId> least(const Reachability& reach, const boost::dynamic_bitset<>& common) {
  std::optional<NodeId> found;
  for (auto m = common.find_first(); m != boost::dynamic_bitset<>::npos; m = common.find_next(m)) {
    if ((reach.descendants(static_cast<NodeId>(m)) & common).count() == 1) {
      if (found) return std::nullopt;
      found = static_cast<NodeId>(m);
    }
  }
  if (found && !common.is_subset_of(reach.ancestors(*found))) return std::nullopt;
  return found;
}

}  // namespace

std::vector<Partition> p_set(const Diagram& d, int i) {
  require_single(d);
  std::vector<Partition> out;
  for (const Partition& s : d.nodes()) {
    if (stair_length(s) >= i) out.push_back(s);
  }
  return out;
}

Diagram build_next(const Diagram& d, Budget budget, BuildTrace* trace) {
  require_single(d);
  Diagram out(DiagramKind::single, d.n() + 1, Coords::finite, budget);

  const std::size_t size = d.size();
  std::vector<int> stairs(size);
  // current[v]: id in `out` of node v shifted on column i; next[v]: shifted on i+1.
  std::vector<NodeId> current(size);
  std::vector<NodeId> next(size);
  for (NodeId v = 0; v < size; ++v) {
    stairs[v] = stair_length(d.node(v));
    current[v] = out.intern(*add_grain(d.node(v), 1));
  }
  for (const Edge& e : d.edges()) out.add_edge(current[e.source], e.label, current[e.target]);

  std::vector<NodeId> members;
  for (NodeId v = 0; v < size; ++v) {
    if (stairs[v] >= 1) members.push_back(v);
  }
  std::vector<Edge> internal;
  for (const Edge& e : d.edges()) {
    if (stairs[e.source] >= 1 && stairs[e.target] >= 1) internal.push_back(e);
  }

  for (int i = 1; !members.empty(); ++i) {
    BuildStep step{i, {}, {}, 0};
    for (NodeId v : members) {
      const Partition& s = d.node(v);
      Partition lifted = *add_grain(s, i + 1);
      next[v] = out.intern(lifted);
      out.add_edge(current[v], i, next[v]);
      if (drop(s, i + 1) >= 2) {
        auto target = out.find(*fall(lifted, i + 1));
        if (!target) throw Error("back edge target missing while building SPM(" + std::to_string(d.n() + 1) + ")");
        out.add_edge(next[v], i + 1, *target);
        ++step.back_edges;
      }
      if (trace != nullptr) {
        step.gained_successor.push_back(out.node(current[v]));
        step.added.push_back(std::move(lifted));
      }
    }
    for (const Edge& e : internal) out.add_edge(next[e.source], e.label, next[e.target]);

    std::erase_if(members, [&](NodeId v) { return stairs[v] < i + 1; });
    std::erase_if(internal, [&](const Edge& e) { return stairs[e.source] < i + 1 || stairs[e.target] < i + 1; });
    for (NodeId v : members) current[v] = next[v];
    if (trace != nullptr) trace->steps.push_back(std::move(step));
  }

  out.finalize();
  return canonical(out);
}

Diagram build_incremental(int n, Budget budget) {
  Diagram d = build_bfs(0, budget);
  for (int m = 0; m < n; ++m) d = build_next(d, budget);
  return d;
}

std::map<int, QClass> q_classes(const Diagram& d, int i) {
  require_single(d);
  std::map<int, QClass> classes;
  for (NodeId v = 0; v < d.size(); ++v) {
    if (stair_length(d.node(v)) >= i) {
      QClass& q = classes[d.node(v).column(1)];
      q.k = d.node(v).column(1);
      q.members.push_back(v);
    }
  }
  if (classes.empty()) return classes;

  Reachability reach(d);
  for (auto& [k, q] : classes) {
    boost::dynamic_bitset<> in(d.size());
    for (NodeId v : q.members) in.set(v);
    q.maximum = greatest(reach, in);

    if (q.maximum) {
      boost::dynamic_bitset<> seen(d.size());
      std::vector<NodeId> stack{*q.maximum};
      seen.set(*q.maximum);
      while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (const Edge& e : d.out_edges(u)) {
          if (e.label > i + 1 && !seen.test(e.target)) {
            seen.set(e.target);
            stack.push_back(e.target);
          }
        }
      }
      q.generated_from_maximum = seen == in;
    }

    for (const Edge& e : d.edges()) {
      if (in.test(e.source) && in.test(e.target) && (q.min_internal_label == 0 || e.label < q.min_internal_label)) {
        q.min_internal_label = e.label;
      }
    }

    q.is_lattice = true;
    for (std::size_t x = 0; x < q.members.size() && q.is_lattice; ++x) {
      for (std::size_t y = x; y < q.members.size(); ++y) {
        NodeId a = q.members[x];
        NodeId b = q.members[y];
        if (!greatest(reach, reach.descendants(a) & reach.descendants(b) & in) ||
            !least(reach, reach.ancestors(a) & reach.ancestors(b) & in)) {
          q.is_lattice = false;
          break;
        }
      }
    }
  }
  return classes;
}

std::vector<GeneratingPartition> generating_partitions(int n) {
  std::vector<GeneratingPartition> out;
  for (int k = 1; 2 * k - 1 <= n; ++k) {
    if (k - 1 + triangular(k) < n) continue;
    std::vector<int> parts{k};
    if (k >= 2) parts.push_back(k - 1);
    int rem = n - (2 * k - 1);
    int room = k - 1;
    int l = 0;
    int r = 0;
    while (rem > 0 && room > 0) {
      const int take = std::min(rem, room);
      if (take == room) {
        ++l;
      } else {
        r = take;
      }
      parts.push_back(take);
      rem -= take;
      room = take - 1;
    }
    if (rem != 0) throw Error("generating partition construction failed for k=" + std::to_string(k));
    out.push_back({k, Partition(std::move(parts)), l, r});
  }
  return out;
}

long long generating_count_printed(int n, RadicandReading reading) {
  const double radicand = reading == RadicandReading::product ? 17.0 / 4.0 * 2.0 * n : 17.0 / 4.0 + 2.0 * n;
  return static_cast<long long>(std::floor(n / 2.0 + 2.0 - std::sqrt(radicand)));
}

long long generating_count_interval(int n) {
  const auto lo = static_cast<long long>(std::ceil(-1.5 + std::sqrt(17.0 / 4.0 + 2.0 * n)));
  const auto hi = static_cast<long long>(std::floor((n + 1) / 2.0));
  return std::max(0LL, hi - lo + 1);
}

PSetTable::PSetTable(int max_n, Budget budget) {
  for (int m = 0; m <= max_n; ++m) {
    std::vector<Partition> nodes = build_bfs(m, budget).nodes();
    std::sort(nodes.begin(), nodes.end());
    nodes_.push_back(std::move(nodes));
  }
}

std::vector<Partition> PSetTable::p_set(int i, int m) const {
  std::vector<Partition> out;
  if (m < 0 || m > max_n()) return out;
  for (const Partition& s : nodes_[static_cast<std::size_t>(m)]) {
    if (stair_length(s) >= i) out.push_back(s);
  }
  return out;
}

long long PSetTable::count(int i, int m) const { return static_cast<long long>(p_set(i, m).size()); }

std::string DecompositionReport::to_json() const {
  nlohmann::ordered_json j;
  j["i"] = i;
  j["n"] = n;
  j["target"] = n + 2;
  j["status"] = status();
  auto list = [](const std::vector<Partition>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const Partition& s : v) a.push_back(s.vec());
    return a;
  };
  j["duplicates"] = list(duplicates);
  j["missing"] = list(missing);
  j["extra"] = list(extra);
  return j.dump();
}

DecompositionReport decompose_strata(int i, int n, const PSetTable& tables) {
  if (i < 1 || n < 0) throw Error("decomposition needs i >= 1 and n >= 0");
  if (triangular(i) > n + 2) throw Error("stair length " + std::to_string(i) + " infeasible with " + std::to_string(n + 2) + " grains");
  if (tables.max_n() < n + 2) throw Error("P tables do not cover " + std::to_string(n + 2) + " grains");

  DecompositionReport report;
  report.i = i;
  report.n = n;
  if (int k = triangular_root(n + 2); k >= 0) report.rhs.push_back(staircase(k));
  for (const Partition& s : tables.p_set(i, n - i + 1)) report.rhs.push_back(s.raised_prefix(i + 1));
  for (int k = i + 1; triangular(k) <= n + 1; ++k) {
    for (const Partition& s : tables.p_set(k, n + 1)) report.rhs.push_back(*add_grain(s, k + 1));
  }
  std::sort(report.rhs.begin(), report.rhs.end());
  report.truth = tables.p_set(i, n + 2);

  for (std::size_t x = 1; x < report.rhs.size(); ++x) {
    if (report.rhs[x] == report.rhs[x - 1] && (report.duplicates.empty() || report.duplicates.back() != report.rhs[x])) {
      report.duplicates.push_back(report.rhs[x]);
    }
  }
  std::vector<Partition> distinct = report.rhs;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::set_difference(report.truth.begin(), report.truth.end(), distinct.begin(), distinct.end(),
                      std::back_inserter(report.missing));
  std::set_difference(distinct.begin(), distinct.end(), report.truth.begin(), report.truth.end(),
                      std::back_inserter(report.extra));
  return report;
}

SuccessorLawReport check_successor_laws(const Diagram& d) {
  require_single(d);
  SuccessorLawReport report;
  std::unordered_set<Partition> image;
  for (const Partition& s : d.nodes()) image.insert(*add_grain(s, 1));

  for (const Partition& s : d.nodes()) {
    const int e = stair_length(s);
    for (int i = 1; i <= e + 1; ++i) {
      ++report.checked;
      const Partition raised = *add_grain(s, i);
      const std::string where = "(" + to_string(s) + ") column " + std::to_string(i);
      std::vector<Transition> lifted;
      bool lift_ok = true;
      for (const Transition& t : successors(s)) {
        auto up = add_grain(t.target, i);
        if (!up) {
          lift_ok = false;
          break;
        }
        lifted.push_back({t.label, std::move(*up)});
      }
      if (!lift_ok) {
        report.failures.push_back(where + ": a successor cannot take a grain on the same column");
        continue;
      }
      const std::vector<Transition> actual = successors(raised);
      const int diff = drop(s, i);
      if (diff == 0) {
        ++report.plateau_cases;
        if (actual != lifted) report.failures.push_back(where + ": plateau successors differ");
      } else if (diff >= 2) {
        ++report.cliff_cases;
        if (actual != lifted) report.failures.push_back(where + ": cliff successors differ");
        Partition walk = *add_grain(s, 1);
        bool path_ok = true;
        for (int label = i; label >= 1 && path_ok; --label) {
          auto step = fall(walk, label);
          path_ok = step && image.contains(*step);
          if (path_ok) walk = std::move(*step);
        }
        if (!path_ok || walk != *fall(raised, i)) report.failures.push_back(where + ": cliff back path broken");
      } else {
        ++report.step_cases;
        lifted.push_back({i, *add_grain(s, i + 1)});
        std::sort(lifted.begin(), lifted.end());
        if (actual != lifted) report.failures.push_back(where + ": step successors differ");
      }
    }
  }
  return report;
}

}  // namespace spm
