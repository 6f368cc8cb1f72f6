#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spm/partition.hpp"

namespace spm {

enum class HeightClass { step, plateau, cliff };

const char* to_string(HeightClass c) noexcept;

/// s_i - s_{i+1}. Throws ColumnOutOfRange unless 1 <= i <= length(s).
int height_diff(const Partition& s, int i);

/// Same as height_diff without the range check; any i >= 1 is accepted.
inline int drop(const Partition& s, int i) noexcept { return s.column(i) - s.column(i + 1); }

HeightClass classify(const Partition& s, int i);

/// e(s): length of the initial run of steps.
int stair_length(const Partition& s) noexcept;

/// One grain falls from column i onto column i+1. Empty when column i is
/// not a cliff (or i is out of range).
std::optional<Partition> fall(const Partition& s, int i);

/// Successor labelled by the column the grain fell from.
struct Transition {
  int label;
  Partition target;
  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// All transitions from s, ordered by label.
std::vector<Transition> successors(const Partition& s);

/// s with one grain added on column i; i may be length+1 (new column).
/// Empty when the result is not weakly decreasing.
std::optional<Partition> add_grain(const Partition& s, int i);

/// Membership test for SPM(sum(s)) via its forbidden patterns.
bool is_spm(const Partition& s);

/// Bottom of SPM(n), closed form.
Partition fixed_point(int n);

/// sum_j j * s_j; every fall raises it by one.
long long rank(const Partition& s) noexcept;

/// Prefix sums (s_1, s_1+s_2, ...).
std::vector<long long> prefix_sums(const Partition& s);

}  // namespace spm
