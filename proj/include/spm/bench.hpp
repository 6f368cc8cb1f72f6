#pragma once

#include <string>
#include <vector>

#include "spm/diagram.hpp"

namespace spm {

struct BenchRow {
  int n = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t elements = 0;  // nodes + edges
  double seconds = 0;        // best of the repeats
  double ns_per_element = 0;
};

/// Times build_upto(n) for min_n <= n <= max_n, keeping the fastest of
/// `repeats` runs.
std::vector<BenchRow> bench(int max_n, int repeats = 3, int min_n = 0, Budget budget = {});

/// n,nodes,edges,elements,seconds,ns_per_element
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace spm
