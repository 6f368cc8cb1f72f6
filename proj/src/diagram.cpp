#include "spm/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "spm/core.hpp"
#include "spm/errors.hpp"

namespace spm {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("SPM_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) b.max_nodes = static_cast<std::size_t>(v);
  }
  return b;
}

Diagram::Diagram(DiagramKind kind, int n, Coords coords, Budget budget)
    : kind_(kind), n_(n), coords_(coords), budget_(budget) {}

NodeId Diagram::intern(const Partition& s) {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  if (nodes_.size() >= budget_.max_nodes) {
    throw BudgetExceeded("node budget of " + std::to_string(budget_.max_nodes) + " exceeded");
  }
  auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(s);
  index_.emplace(s, id);
  return id;
}

std::optional<NodeId> Diagram::find(const Partition& s) const {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  return std::nullopt;
}

NodeId Diagram::id_of(const Partition& s) const {
  if (auto id = find(s)) return *id;
  throw NodeNotFound("(" + to_string(s) + ") is not a node of the diagram");
}

void Diagram::add_edge(NodeId source, int label, NodeId target) {
  edges_.push_back({source, label, target});
  offsets_.clear();
}

void Diagram::finalize() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  offsets_.assign(nodes_.size() + 1, 0);
  for (const Edge& e : edges_) ++offsets_[e.source + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

std::span<const Edge> Diagram::out_edges(NodeId id) const {
  if (offsets_.size() != nodes_.size() + 1) throw Error("diagram is not finalized");
  return std::span<const Edge>(edges_).subspan(offsets_[id], offsets_[id + 1] - offsets_[id]);
}

std::vector<NodeId> Diagram::sources() const {
  std::vector<bool> has_in(nodes_.size(), false);
  for (const Edge& e : edges_) has_in[e.target] = true;
  std::vector<NodeId> out;
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    if (!has_in[v]) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> Diagram::sinks() const {
  std::vector<bool> has_out(nodes_.size(), false);
  for (const Edge& e : edges_) has_out[e.source] = true;
  std::vector<NodeId> out;
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    if (!has_out[v]) out.push_back(v);
  }
  return out;
}

Diagram build_bfs(int n, Budget budget) {
  if (n < 0) throw Error("grain count must be non-negative");
  Diagram d(DiagramKind::single, n, Coords::finite, budget);
  d.intern(n == 0 ? Partition{} : Partition{n});
  for (NodeId u = 0; u < d.size(); ++u) {
    // Copy: intern may reallocate the node vector.
    const Partition s = d.node(u);
    for (const Transition& t : successors(s)) d.add_edge(u, t.label, d.intern(t.target));
  }
  d.finalize();
  return d;
}

Diagram canonical(const Diagram& d) {
  auto srcs = d.sources();
  if (srcs.size() != 1) throw Error("canonical order needs exactly one source, found " + std::to_string(srcs.size()));
  std::vector<std::vector<Edge>> out(d.size());
  for (const Edge& e : d.edges()) out[e.source].push_back(e);
  for (auto& list : out) std::sort(list.begin(), list.end(), [](const Edge& a, const Edge& b) {
      return a.label != b.label ? a.label < b.label : a.target < b.target;
    });

  constexpr NodeId unseen = static_cast<NodeId>(-1);
  std::vector<NodeId> renumber(d.size(), unseen);
  std::vector<NodeId> order;
  order.reserve(d.size());
  renumber[srcs.front()] = 0;
  order.push_back(srcs.front());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Edge& e : out[order[head]]) {
      if (renumber[e.target] == unseen) {
        renumber[e.target] = static_cast<NodeId>(order.size());
        order.push_back(e.target);
      }
    }
  }
  if (order.size() != d.size()) throw Error("diagram has nodes unreachable from its source");

  Diagram c(d.kind(), d.n(), d.coords(), Budget{std::max<std::size_t>(d.size(), 1)});
  for (NodeId old : order) c.intern(d.node(old));
  for (const Edge& e : d.edges()) c.add_edge(renumber[e.source], e.label, renumber[e.target]);
  c.finalize();
  return c;
}

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::above: return "above";
    case Relation::below: return "below";
    case Relation::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

void require_same_grains(const Partition& a, const Partition& b) {
  if (a.grains() != b.grains()) {
    throw GrainMismatch("grain counts differ: (" + to_string(a) + ") has " + std::to_string(a.grains()) + ", (" +
                        to_string(b) + ") has " + std::to_string(b.grains()));
  }
}

}  // namespace

Relation leq(const Partition& a, const Partition& b) {
  require_same_grains(a, b);
  bool a_ge = true;
  bool b_ge = true;
  long long pa = 0;
  long long pb = 0;
  const int len = std::max(a.length(), b.length());
  for (int j = 1; j <= len; ++j) {
    pa += a.column(j);
    pb += b.column(j);
    if (pa < pb) a_ge = false;
    if (pb < pa) b_ge = false;
  }
  if (a_ge && b_ge) return Relation::equal;
  if (a_ge) return Relation::above;
  if (b_ge) return Relation::below;
  return Relation::incomparable;
}

Partition infimum(const Partition& a, const Partition& b) {
  require_same_grains(a, b);
  const int len = std::max(a.length(), b.length());
  std::vector<int> parts;
  long long pa = 0;
  long long pb = 0;
  long long prev = 0;
  for (int j = 1; j <= len; ++j) {
    pa += a.column(j);
    pb += b.column(j);
    long long m = std::min(pa, pb);
    parts.push_back(static_cast<int>(m - prev));
    prev = m;
  }
  return Partition(std::move(parts));
}

Reachability::Reachability(const Diagram& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<NodeId>> out(n);
  for (const Edge& e : d.edges()) {
    ++indegree[e.target];
    out[e.source].push_back(e.target);
  }
  std::deque<NodeId> ready;
  for (NodeId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    NodeId v = ready.front();
    ready.pop_front();
    order_.push_back(v);
    for (NodeId w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (order_.size() != n) throw Error("diagram contains a cycle");

  below_.assign(n, boost::dynamic_bitset<>(n));
  above_.assign(n, boost::dynamic_bitset<>(n));
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    below_[*it].set(*it);
    for (NodeId w : out[*it]) below_[*it] |= below_[w];
  }
  for (NodeId v : order_) {
    above_[v].set(v);
    for (NodeId w : out[v]) above_[w] |= above_[v];
  }
}

std::optional<NodeId> Reachability::extremum(const boost::dynamic_bitset<>& common,
                                             const std::vector<boost::dynamic_bitset<>>& beyond,
                                             const std::vector<boost::dynamic_bitset<>>& covered) {
  std::optional<NodeId> found;
  for (auto m = common.find_first(); m != boost::dynamic_bitset<>::npos; m = common.find_next(m)) {
    if ((beyond[m] & common).count() == 1) {
      if (found) return std::nullopt;
      found = static_cast<NodeId>(m);
    }
  }
  if (found && !common.is_subset_of(covered[*found])) return std::nullopt;
  return found;
}

std::optional<NodeId> Reachability::meet(NodeId a, NodeId b) const {
  return extremum(below_[a] & below_[b], above_, below_);
}

std::optional<NodeId> Reachability::join(NodeId a, NodeId b) const {
  return extremum(above_[a] & above_[b], below_, above_);
}

Partition supremum(const Partition& a, const Partition& b, const Diagram& d) {
  const NodeId ia = d.id_of(a);
  const NodeId ib = d.id_of(b);
  Reachability reach(d);
  auto j = reach.join(ia, ib);
  if (!j) throw Error("no unique least common ancestor of (" + to_string(a) + ") and (" + to_string(b) + ")");
  return d.node(*j);
}

LatticeReport check_lattice(const Diagram& d) {
  LatticeReport report;
  report.nodes = d.size();
  auto srcs = d.sources();
  auto snks = d.sinks();
  report.unique_source = srcs.size() == 1;
  report.unique_sink = snks.size() == 1;
  if (!report.unique_source) report.failures.push_back(std::to_string(srcs.size()) + " sources");
  if (!report.unique_sink) report.failures.push_back(std::to_string(snks.size()) + " sinks");
  if (report.unique_source && d.kind() == DiagramKind::single) {
    Partition top = d.n() == 0 ? Partition{} : Partition{d.n()};
    if (d.node(srcs.front()) != top) report.failures.push_back("source is not (n)");
  }
  if (report.unique_sink && d.kind() == DiagramKind::single && d.node(snks.front()) != fixed_point(d.n())) {
    report.failures.push_back("sink is not the fixed point");
  }

  Reachability reach(d);
  for (NodeId a = 0; a < d.size(); ++a) {
    for (NodeId b = a; b < d.size(); ++b) {
      ++report.pairs;
      auto m = reach.meet(a, b);
      auto j = reach.join(a, b);
      if (!m) {
        ++report.missing_meets;
        report.failures.push_back("no unique meet for (" + to_string(d.node(a)) + ") and (" + to_string(d.node(b)) + ")");
      }
      if (!j) {
        ++report.missing_joins;
        report.failures.push_back("no unique join for (" + to_string(d.node(a)) + ") and (" + to_string(d.node(b)) + ")");
      }
      if (m && d.kind() == DiagramKind::single && infimum(d.node(a), d.node(b)) != d.node(*m)) {
        ++report.formula_disagreements;
        report.failures.push_back("prefix-sum meet differs from diagram meet for (" + to_string(d.node(a)) + ") and (" +
                                  to_string(d.node(b)) + ")");
      }
    }
  }
  return report;
}

SublatticeReport check_sublattice(const Diagram& d, const std::vector<NodeId>& members) {
  return check_sublattice(d, Reachability(d), members);
}

SublatticeReport check_sublattice(const Diagram& d, const Reachability& reach, const std::vector<NodeId>& members) {
  SublatticeReport report;
  report.members = members.size();
  boost::dynamic_bitset<> in(d.size());
  for (NodeId v : members) in.set(v);
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x; y < members.size(); ++y) {
      ++report.pairs;
      const NodeId a = members[x];
      const NodeId b = members[y];
      auto m = reach.meet(a, b);
      auto j = reach.join(a, b);
      if (!m || !in.test(*m)) {
        ++report.meet_escapes;
        report.failures.push_back("meet of (" + to_string(d.node(a)) + ") and (" + to_string(d.node(b)) + ") escapes");
      }
      if (!j || !in.test(*j)) {
        ++report.join_escapes;
        report.failures.push_back("join of (" + to_string(d.node(a)) + ") and (" + to_string(d.node(b)) + ") escapes");
      }
    }
  }
  return report;
}

}  // namespace spm
