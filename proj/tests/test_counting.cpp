#include <doctest.h>

#include "oracles.hpp"
#include "spm/core.hpp"
#include "spm/counting.hpp"
#include "spm/errors.hpp"

namespace {

long long stair_count(int i, int m) {
  long long count = 0;
  for (const auto& s : oracle::simulate(m).nodes) count += oracle::stairs(s) >= i ? 1 : 0;
  return count;
}

}  // namespace

TEST_CASE("oracle tables") {
  const spm::CountTables t = spm::p_table_oracle(12);
  CHECK(t.at(1, 4) == 1);
  CHECK(t.at(1, 7) == 3);
  CHECK(t.at(2, 6) == 1);
  for (int m = 0; m <= 12; ++m) {
    for (int i = 0; i <= 5; ++i) {
      CHECK(t.at(i, m) == stair_count(i, m));
      if (i > 0) CHECK(t.at(i, m) <= t.at(i - 1, m));
    }
  }
}

TEST_CASE("p recursion") {
  const spm::CountTables oracle = spm::p_table_oracle(20);
  const spm::CountTables corrected = spm::p_recursion(20, spm::DeltaVariant::corrected);
  CHECK(corrected.p == oracle.p);
  CHECK(corrected.at(1, 7) == 3);
  CHECK(corrected.at(3, 6) == 1);
  const spm::CountTables printed = spm::p_recursion(20, spm::DeltaVariant::printed_theorem3);
  CHECK(printed.at(1, 3) == 2);
  CHECK(oracle.at(1, 3) == 1);
  CHECK(spm::p_recursion(20, spm::DeltaVariant::printed_corollary).p != oracle.p);
  CHECK_THROWS_AS(spm::p_recursion(1, spm::DeltaVariant::corrected), spm::Error);
  CHECK(spm::parse_delta_variant("printed-theorem3") == spm::DeltaVariant::printed_theorem3);
  CHECK_THROWS_AS(spm::parse_delta_variant("other"), spm::Error);
}

TEST_CASE("sizes from the strata") {
  const spm::CountTables t = spm::p_table_oracle(12);
  CHECK(spm::spm_size_via_p(7, t) == 9);
  CHECK(spm::spm_size_via_p(1, t) == 1);
  CHECK(spm::spm_size_via_p(5, t) == 5);
  for (int n = 0; n <= 13; ++n) CHECK(spm::spm_size_via_p(n, t) == static_cast<long long>(oracle::simulate(n).nodes.size()));
  CHECK_THROWS_AS(spm::spm_size_via_p(14, t), spm::Error);
}

TEST_CASE("printed path counts") {
  CHECK(spm::c_printed(1, 3) == 3);
  CHECK(spm::c_printed(5, 1) == 1);
  CHECK(spm::c_printed(3, 2) == 4);
  CHECK(spm::c_printed(0, 4) == 0);
}

TEST_CASE("structural path counts") {
  CHECK(spm::c_structural(3, 2) == 3);
  CHECK(spm::c_structural(2, 3) == 4);
  for (int k = 1; k <= 10; ++k) CHECK(spm::c_structural(1, k) == k);
  for (int l = 1; l <= 12; ++l) CHECK(spm::c_structural(l, 1) == 1);
  for (int k = 1; k <= 4; ++k) {
    for (int l = 0; l <= 10; ++l) {
      CHECK(spm::c_structural(l, k) == (l == 0 ? 0 : oracle::tree_nodes(spm::staircase(k).vec(), k, l)));
      CHECK(spm::d_structural(l, k) == oracle::tree_nodes(spm::add_grain(spm::staircase(k), k)->vec(), 0, l));
    }
  }
}

TEST_CASE("sizes from the tree") {
  using spm::CVariant;
  using spm::TreeSumMode;
  CHECK(spm::spm_size_via_tree(7, TreeSumMode::structural, CVariant::structural) == 9);
  CHECK(spm::spm_size_via_tree(4, TreeSumMode::structural, CVariant::structural) == 4);
  CHECK(spm::spm_size_via_tree(4, TreeSumMode::printed, CVariant::printed) == 7);
  for (int n = 0; n <= 14; ++n) {
    CHECK(spm::spm_size_via_tree(n, TreeSumMode::structural, CVariant::structural) ==
          static_cast<long long>(oracle::simulate(n).nodes.size()));
  }
}

TEST_CASE("reconciliation report") {
  spm::ReconcileOptions options;
  options.max_n = 10;
  options.max_l = 8;
  options.max_k = 4;
  options.max_generating_n = 40;
  const auto report = spm::reconcile(options);
  const auto* c32 = report.find("c", "printed-c", "l=3;k=2");
  REQUIRE(c32 != nullptr);
  CHECK(c32->formula_value == 4);
  CHECK(c32->oracle_value == 3);
  const auto* cor4 = report.find("spm_size_via_tree", "printed/printed-c", "n=4");
  REQUIRE(cor4 != nullptr);
  CHECK(cor4->formula_value == 7);
  CHECK(cor4->oracle_value == 4);
  CHECK(report.mismatches("p_recursion", "corrected") == 0);
  CHECK(report.mismatches("spm_size_via_tree", "structural/structural-c") == 0);
  CHECK(report.mismatches("c", "structural-c") == 0);
  CHECK(report.mismatches("d", "structural") == 0);
  CHECK(report.mismatches("generating_partitions", "q-class-maxima") == 0);
  CHECK(report.mismatches("generating_count", "interval") == 0);
  CHECK(report.find("decomposition_duplicate", "printed", "i=1;n+2=6;element=3.2.1") != nullptr);
  CHECK(report.to_csv() == spm::reconcile(options).to_csv());
  CHECK(report.to_csv().find("formula,variant,args,formula_value,oracle_value,status\n") != std::string::npos);
  CHECK(report.to_json().find("\"rows\"") != std::string::npos);
}
