#include "spm/infinite.hpp"

#include <algorithm>
#include <unordered_set>

#include "spm/core.hpp"
#include "spm/errors.hpp"
#include "spm/incremental.hpp"

namespace spm {

InfinitePartition::InfinitePartition(Partition tail) : tail_(std::move(tail)) {
  if (!is_spm(tail_)) throw CharacterizationViolation("(~," + to_string(tail_) + ") is not an element of SPM(inf)");
}

std::string to_string(const InfinitePartition& s) {
  return s.tail().empty() ? std::string("~") : "~," + to_string(s.tail());
}

InfinitePartition parse_infinite(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (!text.empty() && text.front() == '~') {
    text.remove_prefix(1);
    if (!text.empty() && text.front() == ',') text.remove_prefix(1);
  }
  return InfinitePartition(parse_partition(text));
}

ShotVector shot_vector(const InfinitePartition& s) {
  ShotVector v;
  const auto& tail = s.tail().vec();
  v.counts.resize(tail.size());
  long long acc = 0;
  for (std::size_t i = tail.size(); i-- > 0;) v.counts[i] = acc += tail[i];
  return v;
}

std::optional<Partition> tail_from_shots(const ShotVector& v) {
  std::vector<int> parts;
  for (std::size_t i = 1; i <= v.counts.size(); ++i) {
    const long long part = v.at(i) - v.at(i + 1);
    if (part < 0 || (i > 1 && part > parts.back())) return std::nullopt;
    parts.push_back(static_cast<int>(part));
  }
  try {
    return Partition(std::move(parts));
  } catch (const NotAPartition&) {
    return std::nullopt;
  }
}

namespace {

ShotVector combine(const ShotVector& a, const ShotVector& b, bool take_max) {
  ShotVector out;
  const std::size_t len = std::max(a.counts.size(), b.counts.size());
  for (std::size_t i = 1; i <= len; ++i) out.counts.push_back(take_max ? std::max(a.at(i), b.at(i)) : std::min(a.at(i), b.at(i)));
  while (!out.counts.empty() && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

bool dominated(const ShotVector& a, const ShotVector& b) {
  const std::size_t len = std::max(a.counts.size(), b.counts.size());
  for (std::size_t i = 1; i <= len; ++i) {
    if (a.at(i) > b.at(i)) return false;
  }
  return true;
}

}  // namespace

Relation leq_infinite(const InfinitePartition& s, const InfinitePartition& t) {
  const ShotVector a = shot_vector(s);
  const ShotVector b = shot_vector(t);
  const bool s_ge = dominated(a, b);
  const bool t_ge = dominated(b, a);
  if (s_ge && t_ge) return Relation::equal;
  if (s_ge) return Relation::above;
  if (t_ge) return Relation::below;
  return Relation::incomparable;
}

InfinitePartition inf_infinite(const InfinitePartition& s, const InfinitePartition& t) {
  auto tail = tail_from_shots(combine(shot_vector(s), shot_vector(t), true));
  if (!tail) throw Error("maximum shot vector of " + to_string(s) + " and " + to_string(t) + " is not realizable");
  return InfinitePartition(std::move(*tail));
}

std::vector<InfiniteTransition> successors_infinite(const InfinitePartition& s) {
  std::vector<InfiniteTransition> out;
  out.push_back({1, InfinitePartition(*add_grain(s.tail(), 1))});
  for (const Transition& t : successors(s.tail())) out.push_back({t.label + 1, InfinitePartition(t.target)});
  return out;
}

JoinResult sup_infinite_detailed(const InfinitePartition& s, const InfinitePartition& t) {
  const ShotVector a = shot_vector(s);
  const ShotVector b = shot_vector(t);
  const ShotVector low = combine(a, b, false);
  if (auto tail = tail_from_shots(low); tail && is_spm(*tail)) return {InfinitePartition(std::move(*tail)), false};

  // Descend from the top through upper bounds; in a lattice every upper
  // bound above the join has a covering successor that is still one.
  InfinitePartition current;
  for (;;) {
    bool moved = false;
    for (InfiniteTransition& step : successors_infinite(current)) {
      const ShotVector v = shot_vector(step.target);
      if (dominated(v, a) && dominated(v, b)) {
        current = std::move(step.target);
        moved = true;
        break;
      }
    }
    if (!moved) return {current, true};
  }
}

InfinitePartition embed_pi(const Partition& s) {
  if (!is_spm(s)) throw CharacterizationViolation("(" + to_string(s) + ") is not an SPM pile");
  std::vector<int> tail(s.vec().begin() + (s.empty() ? 0 : 1), s.vec().end());
  return InfinitePartition(Partition(std::move(tail)));
}

InfinitePartition chi(const Partition& s) { return InfinitePartition(s); }

Partition chi_inverse(const InfinitePartition& t) { return t.tail(); }

Diagram build_upto(int n, UptoMethod method, Budget budget) {
  if (n < 0) throw Error("grain bound must be non-negative");
  Diagram d(DiagramKind::upto, n, Coords::infinite, budget);
  if (method == UptoMethod::incremental) {
    Diagram level = build_bfs(0, budget);
    std::vector<NodeId> previous;
    for (int i = 0; i <= n; ++i) {
      if (i > 0) level = build_next(level, budget);
      std::vector<NodeId> ids(level.size());
      for (NodeId v = 0; v < level.size(); ++v) ids[v] = d.intern(level.node(v));
      for (const Edge& e : level.edges()) d.add_edge(ids[e.source], e.label + 1, ids[e.target]);
      for (NodeId old : previous) d.add_edge(old, 1, d.id_of(*add_grain(d.node(old), 1)));
      previous = std::move(ids);
    }
  } else {
    std::vector<NodeId> stack{d.intern(Partition{})};
    std::unordered_set<NodeId> expanded;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      if (!expanded.insert(u).second) continue;
      const InfinitePartition here(d.node(u));
      for (InfiniteTransition& t : successors_infinite(here)) {
        if (t.target.tail().grains() > n) continue;
        const NodeId v = d.intern(t.target.tail());
        d.add_edge(u, t.label, v);
        stack.push_back(v);
      }
    }
  }
  d.finalize();
  return canonical(d);
}

FilterReport check_filter_sublattice(const Diagram& d, int outer_n, Budget budget) {
  if (d.kind() != DiagramKind::upto) throw Error("filter check needs an up-to diagram");
  if (outer_n < d.n()) throw Error("outer bound must be at least the diagram bound");
  FilterReport report;
  const Diagram outer = build_upto(outer_n, UptoMethod::incremental, budget);
  const Reachability reach(outer);

  boost::dynamic_bitset<> in(outer.size());
  std::vector<NodeId> members;
  for (NodeId v = 0; v < outer.size(); ++v) {
    if (outer.node(v).grains() <= d.n()) {
      in.set(v);
      members.push_back(v);
    }
  }
  report.members = members.size();
  if (members.size() != d.size()) report.failures.push_back("member count differs from the diagram");
  for (const Partition& s : d.nodes()) {
    if (!outer.contains(s)) report.failures.push_back(to_string(InfinitePartition(s)) + " missing from the outer filter");
  }

  report.upward_closed = true;
  for (NodeId v : members) {
    if (!reach.ancestors(v).is_subset_of(in)) report.upward_closed = false;
  }
  if (!report.upward_closed) report.failures.push_back("not upward closed");

  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x; y < members.size(); ++y) {
      const NodeId a = members[x];
      const NodeId b = members[y];
      const InfinitePartition sa(outer.node(a));
      const InfinitePartition sb(outer.node(b));
      auto m = reach.meet(a, b);
      auto j = reach.join(a, b);
      if (!m || !in.test(*m)) ++report.meet_escapes;
      if (!j || !in.test(*j)) ++report.join_escapes;
      if (!m || !j || inf_infinite(sa, sb).tail() != outer.node(*m) || sup_infinite(sa, sb).tail() != outer.node(*j)) {
        ++report.formula_disagreements;
      }
    }
  }
  if (report.meet_escapes != 0) report.failures.push_back(std::to_string(report.meet_escapes) + " meets escape");
  if (report.join_escapes != 0) report.failures.push_back(std::to_string(report.join_escapes) + " joins escape");
  if (report.formula_disagreements != 0) {
    report.failures.push_back(std::to_string(report.formula_disagreements) + " shot-vector formula disagreements");
  }

  const Reachability inner(d);
  for (int level = 0; level <= d.n(); ++level) {
    std::vector<NodeId> ids;
    for (NodeId v = 0; v < d.size(); ++v) {
      if (d.node(v).grains() == level) ids.push_back(v);
    }
    if (!check_sublattice(d, inner, ids).passed()) report.levels_not_closed.push_back(level);
  }
  if (!report.levels_not_closed.empty()) report.failures.push_back("some levels are not sublattices");
  return report;
}

}  // namespace spm
