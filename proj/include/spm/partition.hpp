#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spm {

/// A sand pile: weakly decreasing positive column heights.
///
/// Columns are 1-based; every column past the end holds zero grains.
/// The empty partition is the 0-grain pile.
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped. Throws NotAPartition on increasing or
  /// negative entries.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }

  /// Number of non-empty columns.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int grains() const noexcept { return grains_; }

  /// Height of column `i` (1-based), zero past the end.
  int column(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  /// Copy with one grain added on every column 1..count.
  Partition raised_prefix(int count) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int grains_ = 0;
};

/// "4,2,1"; the empty pile formats as "".
std::string to_string(const Partition& s);

/// Parses the comma-separated form produced by to_string. A leading "~"
/// (infinite first column marker) is not accepted here.
Partition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& s);

/// (k, k-1, ..., 1)
Partition staircase(int k);

constexpr long long triangular(long long k) noexcept { return k * (k + 1) / 2; }

/// k when n == k(k+1)/2, otherwise -1.
int triangular_root(long long n) noexcept;

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> all_partitions(int n);

}  // namespace spm

template <>
struct std::hash<spm::Partition> {
  std::size_t operator()(const spm::Partition& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int p : s.parts()) {
      h ^= static_cast<std::size_t>(p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
