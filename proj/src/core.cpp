#include "spm/core.hpp"

#include <string>

#include "spm/errors.hpp"

namespace spm {

const char* to_string(HeightClass c) noexcept {
  switch (c) {
    case HeightClass::step: return "step";
    case HeightClass::plateau: return "plateau";
    case HeightClass::cliff: return "cliff";
  }
  return "?";
}

int height_diff(const Partition& s, int i) {
  if (i < 1 || i > s.length()) {
    throw ColumnOutOfRange("column " + std::to_string(i) + " outside [1," + std::to_string(s.length()) +
                           "] of (" + to_string(s) + ")");
  }
  return drop(s, i);
}

HeightClass classify(const Partition& s, int i) {
  int d = height_diff(s, i);
  if (d == 0) return HeightClass::plateau;
  if (d == 1) return HeightClass::step;
  return HeightClass::cliff;
}

int stair_length(const Partition& s) noexcept {
  int e = 0;
  while (e < s.length() && drop(s, e + 1) == 1) ++e;
  return e;
}

std::optional<Partition> fall(const Partition& s, int i) {
  if (i < 1 || i > s.length() || drop(s, i) < 2) return std::nullopt;
  std::vector<int> parts = s.vec();
  if (i == s.length()) parts.push_back(0);
  --parts[static_cast<std::size_t>(i - 1)];
  ++parts[static_cast<std::size_t>(i)];
  return Partition(std::move(parts));
}

std::vector<Transition> successors(const Partition& s) {
  std::vector<Transition> out;
  for (int i = 1; i <= s.length(); ++i) {
    if (auto t = fall(s, i)) out.push_back({i, std::move(*t)});
  }
  return out;
}

std::optional<Partition> add_grain(const Partition& s, int i) {
  if (i < 1 || i > s.length() + 1) return std::nullopt;
  if (i > 1 && s.column(i - 1) < s.column(i) + 1) return std::nullopt;
  std::vector<int> parts = s.vec();
  if (i == s.length() + 1) {
    parts.push_back(1);
  } else {
    ++parts[static_cast<std::size_t>(i - 1)];
  }
  return Partition(std::move(parts));
}

bool is_spm(const Partition& s) {
  const int k = s.length();
  for (int i = 1; i + 2 <= k; ++i) {
    int p = s.column(i);
    if (s.column(i + 1) == p && s.column(i + 2) == p) return false;
  }
  for (int i = 1; i + 3 <= k; ++i) {
    int p = s.column(i);
    if (s.column(i + 1) == p && s.column(i + 2) == p - 1 && s.column(i + 3) == p - 1) return false;
  }
  // Consecutive plateaus p,p ... q,q need a cliff strictly between them.
  int last_plateau = 0;
  bool cliff_since = false;
  for (int i = 1; i < k; ++i) {
    if (drop(s, i) == 0) {
      if (last_plateau != 0 && !cliff_since) return false;
      last_plateau = i;
      cliff_since = false;
    } else if (drop(s, i) >= 2) {
      cliff_since = true;
    }
  }
  return true;
}

Partition fixed_point(int n) {
  if (n <= 0) return Partition{};
  int k = 0;
  while (triangular(k + 1) <= n) ++k;
  const int p = n - static_cast<int>(triangular(k));
  std::vector<int> parts;
  for (int v = k; v >= 1; --v) {
    parts.push_back(v);
    if (v == p) parts.push_back(v);
  }
  return Partition(std::move(parts));
}

long long rank(const Partition& s) noexcept {
  long long r = 0;
  for (int j = 1; j <= s.length(); ++j) r += static_cast<long long>(j) * s.column(j);
  return r;
}

std::vector<long long> prefix_sums(const Partition& s) {
  std::vector<long long> out;
  long long acc = 0;
  for (int p : s.parts()) out.push_back(acc += p);
  return out;
}

}  // namespace spm
