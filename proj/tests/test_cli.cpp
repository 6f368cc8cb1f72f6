#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spm/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = spm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--n", "7", "--method", "bfs"}).out == "9\n");
  CHECK(run({"count", "--n", "7", "--method", "p-rec"}).out == "9\n");
  CHECK(run({"count", "--n", "7", "--method", "tree", "--variant", "structural-c"}).out == "9\n");
  CHECK(run({"count", "--n", "4", "--method", "tree", "--variant", "printed-c", "--sum", "printed"}).out == "7\n");
  for (int n = 0; n <= 25; n += 5) {
    const std::string nn = std::to_string(n);
    const std::string bfs = run({"count", "--n", nn}).out;
    CHECK(run({"count", "--n", nn, "--method", "incremental"}).out == bfs);
    CHECK(run({"count", "--n", nn, "--method", "p-rec", "--variant", "corrected"}).out == bfs);
    CHECK(run({"count", "--n", nn, "--method", "p-rec", "--variant", "oracle"}).out == bfs);
    CHECK(run({"count", "--n", nn, "--method", "tree"}).out == bfs);
  }
}

TEST_CASE("queries") {
  CHECK(run({"query", "inf", "4,2", "3,3"}).out == "3,3\n");
  CHECK(run({"query", "sup", "4,1,1", "3,3"}).out == "4,2\n");
  CHECK(run({"query", "leq", "3,1", "2,2"}).out == "above\n");
  CHECK(run({"query", "sup", "~,4", "~,2,1"}).out == "~,3\n");
  CHECK(run({"query", "inf", "~,4", "~,2,1"}).out == "~,3,1\n");
  CHECK(run({"query", "inf", "4", "2,1", "--coords", "infinite"}).out == "~,3,1\n");
  CHECK(run({"query", "sup", "4,2", "3"}).code == spm::cli::exit_usage);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS lattice") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == spm::cli::exit_usage);
  CHECK(run({"build"}).code == spm::cli::exit_usage);
  CHECK(run({"build", "--n", "-1"}).code == spm::cli::exit_usage);
  CHECK(run({"build", "--n", "3", "--bogus"}).code == spm::cli::exit_usage);
  CHECK(run({"count", "--n", "3", "--method", "p-rec", "--variant", "nope"}).code == spm::cli::exit_usage);
  CHECK(run({"tree", "classify", "3,3,2,2"}).code == spm::cli::exit_usage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget") {
  CHECK(run({"--budget", "10", "build", "--n", "20"}).code == spm::cli::exit_budget);
  CHECK(run({"--budget", "10", "build", "--n", "5"}).code == 0);
}

TEST_CASE("build and export") {
  const std::string json = run({"build", "--n", "6", "--format", "json"}).out;
  CHECK(json.rfind("{\"kind\":\"single\",\"n\":6,", 0) == 0);
  const std::string path = "cli_test_spm6.json";
  CHECK(run({"build", "--n", "6", "--format", "json", "--out", path}).code == 0);
  CHECK(run({"export", "--in", path, "--format", "json"}).out == json);
  CHECK(run({"export", "--in", path, "--format", "dot"}).out == run({"build", "--n", "6"}).out);
  std::remove(path.c_str());
  CHECK(run({"export", "--in", "missing.json"}).code == spm::cli::exit_usage);
  const std::string upto = run({"build-upto", "--n", "3", "--coords", "finite", "--format", "json"}).out;
  CHECK(upto.find("\"coords\":\"finite\"") != std::string::npos);
  CHECK(run({"build-upto", "--n", "5", "--method", "explore"}).out == run({"build-upto", "--n", "5"}).out);
}

TEST_CASE("tree commands") {
  const std::string c = run({"tree", "classify", "4,2"}).out;
  CHECK(c.find("n_root=N_1") != std::string::npos);
  CHECK(c.find("memberships=N_1,N_2") != std::string::npos);
  CHECK(c.find("successors=1,2,3") != std::string::npos);
  const std::string chain = run({"tree", "chain", "--depth", "7"}).out;
  CHECK(chain.rfind("level,node,attachment\n0,,\n1,1,X_1\n2,\"1,1\",\n3,\"2,1\",X_2\n", 0) == 0);
  CHECK(run({"tree", "build", "--depth", "2"}).out.rfind("digraph SPT {", 0) == 0);
}

TEST_CASE("reconcile and bench") {
  const Result r = run({"reconcile", "--max-n", "8", "--max-l", "5", "--max-k", "3", "--max-gen", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c,printed-c,l=3;k=2,4,3,mismatch") != std::string::npos);
  const Result j = run({"reconcile", "--max-n", "6", "--max-l", "3", "--max-k", "2", "--max-gen", "8", "--format", "json"});
  CHECK(j.out.rfind("{\n  \"notes\"", 0) == 0);
  const Result b = run({"bench", "--max-n", "6", "--repeats", "1"});
  CHECK(b.out.rfind("n,nodes,edges,elements,seconds,ns_per_element\n0,1,0,1,", 0) == 0);
}
