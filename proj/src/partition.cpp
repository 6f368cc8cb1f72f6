#include "spm/partition.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "spm/errors.hpp"

namespace spm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw NotAPartition("partition parts must be positive: " + to_string(*this));
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw NotAPartition("partition parts must be weakly decreasing: " + to_string(*this));
    }
  }
  grains_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::raised_prefix(int count) const {
  std::vector<int> parts = parts_;
  if (static_cast<int>(parts.size()) < count) parts.resize(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i) ++parts[static_cast<std::size_t>(i)];
  return Partition(std::move(parts));
}

std::string to_string(const Partition& s) {
  std::string out;
  for (std::size_t i = 0; i < s.vec().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.vec()[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.empty()) return Partition{};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw NotAPartition("cannot parse partition literal '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& s) { return os << '(' << to_string(s) << ')'; }

Partition staircase(int k) {
  std::vector<int> parts;
  for (int v = k; v >= 1; --v) parts.push_back(v);
  return Partition(std::move(parts));
}

int triangular_root(long long n) noexcept {
  if (n < 0) return -1;
  auto k = static_cast<long long>(std::floor((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0));
  while (triangular(k) > n) --k;
  while (triangular(k + 1) <= n) ++k;
  return triangular(k) == n ? static_cast<int>(k) : -1;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  if (n >= 0) partitions_rec(n, n, current, out);
  return out;
}

}  // namespace spm
