#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spm/diagram.hpp"

namespace spm {

/// Element (inf, s_2, ..., s_k) of SPM(inf), stored as its tail.
class InfinitePartition {
 public:
  InfinitePartition() = default;
  /// Throws CharacterizationViolation when the tail is not an SPM pile.
  explicit InfinitePartition(Partition tail);

  const Partition& tail() const noexcept { return tail_; }

  friend bool operator==(const InfinitePartition&, const InfinitePartition&) = default;
  friend auto operator<=>(const InfinitePartition&, const InfinitePartition&) = default;

 private:
  Partition tail_;
};

/// "~,2,1"; the top element is "~".
std::string to_string(const InfinitePartition& s);

/// Accepts "~,2,1", "~" or a bare tail "2,1".
InfinitePartition parse_infinite(std::string_view text);

/// Firing counts from (inf): counts[i-1] = number of falls from column i.
struct ShotVector {
  std::vector<long long> counts;  // trailing zeros trimmed

  long long at(std::size_t column) const noexcept {
    return column >= 1 && column <= counts.size() ? counts[column - 1] : 0;
  }
  friend bool operator==(const ShotVector&, const ShotVector&) = default;
};

ShotVector shot_vector(const InfinitePartition& s);

/// Tail whose shot vector is v, if v is realized by a partition at all.
/// Does not test SPM membership.
std::optional<Partition> tail_from_shots(const ShotVector& v);

/// Comparison through shot vectors: s >= t iff shots(s) <= shots(t).
Relation leq_infinite(const InfinitePartition& s, const InfinitePartition& t);

/// Meet: componentwise maximum of the shot vectors.
InfinitePartition inf_infinite(const InfinitePartition& s, const InfinitePartition& t);

struct JoinResult {
  InfinitePartition value;
  /// The componentwise-minimum candidate was not an element, so the
  /// join came from descending through upper bounds.
  bool used_fallback = false;
};

JoinResult sup_infinite_detailed(const InfinitePartition& s, const InfinitePartition& t);
inline InfinitePartition sup_infinite(const InfinitePartition& s, const InfinitePartition& t) {
  return sup_infinite_detailed(s, t).value;
}

/// Covering transitions in SPM(inf) labels: 1 fires the infinite column.
struct InfiniteTransition {
  int label;
  InfinitePartition target;
};
std::vector<InfiniteTransition> successors_infinite(const InfinitePartition& s);

/// (s_1, s_2, ..., s_k) -> (inf, s_2, ..., s_k). Throws CharacterizationViolation.
InfinitePartition embed_pi(const Partition& s);

/// (s_1, ..., s_k) -> (inf, s_1, ..., s_k).
InfinitePartition chi(const Partition& s);
Partition chi_inverse(const InfinitePartition& t);

enum class UptoMethod {
  incremental,  // generate each SPM(i) incrementally and link consecutive levels
  explore,      // depth-first search of SPM(inf) from the top, cut at n grains
};

/// SPM(<= n) in infinite coordinates: nodes are tails, intra-level edges
/// carry label j+1, every s -> s↓1 link carries label 1. Canonical order.
Diagram build_upto(int n, UptoMethod method = UptoMethod::incremental, Budget budget = {});

struct FilterReport {
  std::size_t members = 0;
  bool upward_closed = false;
  std::size_t meet_escapes = 0;
  std::size_t join_escapes = 0;
  std::size_t formula_disagreements = 0;
  std::vector<int> levels_not_closed;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Checks that the up-to-n diagram `d` is a filter and a sublattice of
/// SPM(<= outer_n), that diagram meets/joins match the shot-vector
/// formulas, and that each level SPM(i) is a sublattice of d.
FilterReport check_filter_sublattice(const Diagram& d, int outer_n, Budget budget = {});

}  // namespace spm
