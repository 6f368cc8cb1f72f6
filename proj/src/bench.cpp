#include "spm/bench.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include "spm/errors.hpp"
#include "spm/infinite.hpp"

namespace spm {

std::vector<BenchRow> bench(int max_n, int repeats, int min_n, Budget budget) {
  if (max_n < 0 || min_n < 0 || repeats < 1) throw Error("bench needs non-negative bounds and at least one run");
  std::vector<BenchRow> rows;
  for (int n = min_n; n <= max_n; ++n) {
    BenchRow row;
    row.n = n;
    row.seconds = std::numeric_limits<double>::infinity();
    for (int r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const Diagram d = build_upto(n, UptoMethod::incremental, budget);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      row.nodes = d.size();
      row.edges = d.edges().size();
      row.seconds = std::min(row.seconds, elapsed.count());
    }
    row.elements = row.nodes + row.edges;
    row.ns_per_element = row.seconds * 1e9 / static_cast<double>(row.elements);
    rows.push_back(row);
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n,nodes,edges,elements,seconds,ns_per_element\n";
  for (const BenchRow& r : rows) {
    os << r.n << ',' << r.nodes << ',' << r.edges << ',' << r.elements << ',' << r.seconds << ',' << r.ns_per_element << '\n';
  }
  return os.str();
}

}  // namespace spm
