#include "spm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spm/bench.hpp"
#include "spm/core.hpp"
#include "spm/counting.hpp"
#include "spm/errors.hpp"
#include "spm/export.hpp"
#include "spm/incremental.hpp"
#include "spm/infinite.hpp"
#include "spm/sptree.hpp"
#include "spm/verify.hpp"

namespace spm::cli {

namespace {

struct Options {
  int n = 0;
  int depth = 0;
  int max_n = 0;
  int min_n = 0;
  int max_l = 15;
  int max_k = 6;
  int max_gen = 200;
  int repeats = 3;
  std::string method;
  std::string variant;
  std::string sum = "structural";
  std::string format = "dot";
  std::string coords;
  std::string out;
  std::string in;
  std::string op;
  std::string a;
  std::string b;
  std::string partition;
  std::optional<std::size_t> budget;
};

// Writes to --out when given, otherwise to the command's stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot open '" + o.out + "' for writing");
  file << text;
}

std::string render(const Diagram& d, const Options& o) {
  std::ostringstream os;
  std::optional<Coords> shown;
  if (!o.coords.empty()) shown = parse_coords(o.coords);
  write(os, d, parse_export_format(o.format), shown);
  return os.str();
}

bool is_infinite_literal(const std::string& text) {
  return text.find('~') != std::string::npos;
}

std::string join_labels(const std::set<int>& labels) {
  std::string out;
  for (int l : labels) out += (out.empty() ? "" : ",") + std::to_string(l);
  return out;
}

std::string csv_field(const std::string& text) {
  return text.find(',') == std::string::npos ? text : "\"" + text + "\"";
}

long long count(const Options& o, Budget budget) {
  const std::string method = o.method.empty() ? "bfs" : o.method;
  if (method == "bfs") return static_cast<long long>(build_bfs(o.n, budget).size());
  if (method == "incremental") return static_cast<long long>(build_incremental(o.n, budget).size());
  if (method == "p-rec") {
    if (o.variant == "oracle") return spm_size_via_p(o.n, p_table_oracle(std::max(o.n - 1, 0), budget));
    const DeltaVariant v = o.variant.empty() ? DeltaVariant::corrected : parse_delta_variant(o.variant);
    return p_recursion(std::max(o.n, 2), v).spm_size(o.n);
  }
  if (method == "tree") {
    const CVariant v = o.variant.empty() ? CVariant::structural : parse_c_variant(o.variant);
    if (o.sum != "structural" && o.sum != "printed") throw Error("unknown sum '" + o.sum + "'");
    return spm_size_via_tree(o.n, o.sum == "printed" ? TreeSumMode::printed : TreeSumMode::structural, v);
  }
  throw Error("unknown count method '" + method + "'");
}

std::string query(const Options& o, Budget budget) {
  const bool infinite = o.coords == "infinite" || is_infinite_literal(o.a) || is_infinite_literal(o.b);
  if (infinite) {
    const InfinitePartition s = parse_infinite(o.a);
    const InfinitePartition t = parse_infinite(o.b);
    if (o.op == "inf") return to_string(inf_infinite(s, t));
    if (o.op == "sup") return to_string(sup_infinite(s, t));
    return to_string(leq_infinite(s, t));
  }
  const Partition s = parse_partition(o.a);
  const Partition t = parse_partition(o.b);
  if (o.op == "inf") return to_string(infimum(s, t));
  if (o.op == "leq") return to_string(leq(s, t));
  if (s.grains() != t.grains()) throw GrainMismatch("piles " + o.a + " and " + o.b + " have different grain counts");
  for (const Partition& p : {s, t}) {
    if (!is_spm(p)) throw CharacterizationViolation("(" + to_string(p) + ") is not in SPM(" + std::to_string(p.grains()) + ")");
  }
  return to_string(supremum(s, t, build_bfs(s.grains(), budget)));
}

std::string classify_text(const Partition& s, Budget budget) {
  if (!is_spm(s)) throw CharacterizationViolation("(" + to_string(s) + ") is not in SPM(" + std::to_string(s.grains()) + ")");
  const TreeLevels tree = build_tree(s.grains(), budget);
  const auto& node = tree.node(tree.id_of(s));
  std::ostringstream os;
  os << "partition=" << to_string(s) << '\n';
  os << "stair_length=" << stair_length(s) << '\n';
  os << "n_root=" << (node.n_root ? "N_" + std::to_string(*node.n_root) : std::string("none")) << '\n';
  os << "x_root=" << (node.x_max > 0 ? "X_" + std::to_string(node.x_max) : std::string("none")) << '\n';
  std::string members;
  for (int k : node.memberships) members += (members.empty() ? "N_" : ",N_") + std::to_string(k);
  os << "memberships=" << (members.empty() ? "none" : members) << '\n';
  os << "successors=" << join_labels(successors_via_tree(s, tree)) << '\n';
  return os.str();
}

std::string chain_text(int depth) {
  const ChainDecomposition c = chain_decomposition(depth);
  std::ostringstream os;
  os << "level,node,attachment\n";
  for (std::size_t level = 0; level < c.chain.size(); ++level) {
    std::string attachment;
    for (const Attachment& a : c.attachments) {
      if (a.level == static_cast<int>(level)) attachment = "X_" + std::to_string(a.k);
    }
    os << level << ',' << csv_field(to_string(c.chain[level])) << ',' << attachment << '\n';
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sand pile model lattices", "spm"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget", o.budget, "Maximum number of nodes (overrides SPM_BUDGET)")->check(CLI::PositiveNumber);

  const auto methods = CLI::IsMember({"bfs", "incremental"});
  const auto formats = CLI::IsMember({"dot", "json"});
  const auto coords = CLI::IsMember({"finite", "infinite"});

  auto* build = app.add_subcommand("build", "Build SPM(n)");
  build->add_option("--n", o.n, "Number of grains")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--method", o.method, "bfs or incremental")->check(methods);
  build->add_option("--format", o.format, "dot or json")->check(formats);
  build->add_option("--coords", o.coords, "finite or infinite")->check(coords);
  build->add_option("--out", o.out, "Output file");

  auto* upto = app.add_subcommand("build-upto", "Build SPM(<=n) in infinite coordinates");
  upto->add_option("--n", o.n, "Grain bound")->required()->check(CLI::NonNegativeNumber);
  upto->add_option("--method", o.method, "incremental or explore")->check(CLI::IsMember({"incremental", "explore"}));
  upto->add_option("--format", o.format, "dot or json")->check(formats);
  upto->add_option("--coords", o.coords, "finite or infinite")->check(coords);
  upto->add_option("--out", o.out, "Output file");

  auto* count_cmd = app.add_subcommand("count", "Print |SPM(n)|");
  count_cmd->add_option("--n", o.n, "Number of grains")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--method", o.method, "bfs, incremental, p-rec or tree")
      ->check(CLI::IsMember({"bfs", "incremental", "p-rec", "tree"}));
  count_cmd->add_option("--variant", o.variant,
                        "printed-corollary, printed-theorem3, corrected, oracle (p-rec); printed-c, structural-c (tree)");
  count_cmd->add_option("--sum", o.sum, "Tree sum: structural or printed")->check(CLI::IsMember({"structural", "printed"}));

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--n", o.n, "Grain bound")->required()->check(CLI::NonNegativeNumber);

  auto* rec = app.add_subcommand("reconcile", "Compare the counting formulas with the oracles");
  rec->add_option("--max-n", o.max_n, "Largest grain count")->required()->check(CLI::Range(2, 1000));
  rec->add_option("--max-l", o.max_l, "Largest path length")->check(CLI::PositiveNumber);
  rec->add_option("--max-k", o.max_k, "Largest subtree class")->check(CLI::PositiveNumber);
  rec->add_option("--max-gen", o.max_gen, "Largest n for generating counts")->check(CLI::NonNegativeNumber);
  rec->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  rec->add_option("--out", o.out, "Output file");

  auto* exp = app.add_subcommand("export", "Convert a JSON diagram to DOT or JSON");
  exp->add_option("--in", o.in, "JSON diagram")->required();
  exp->add_option("--format", o.format, "dot or json")->check(formats);
  exp->add_option("--coords", o.coords, "finite or infinite")->check(coords);
  exp->add_option("--out", o.out, "Output file");

  auto* q = app.add_subcommand("query", "inf, sup or leq of two piles");
  q->add_option("op", o.op, "inf, sup or leq")->required()->check(CLI::IsMember({"inf", "sup", "leq"}));
  q->add_option("a", o.a, "First pile")->required();
  q->add_option("b", o.b, "Second pile")->required();
  q->add_option("--coords", o.coords, "finite or infinite")->check(coords);

  auto* tree = app.add_subcommand("tree", "SPT(inf) queries");
  tree->require_subcommand(1);
  auto* classify = tree->add_subcommand("classify", "N/X classification of a pile");
  classify->add_option("partition", o.partition, "Pile")->required();
  auto* chain = tree->add_subcommand("chain", "Rightmost chain and attachments");
  chain->add_option("--depth", o.depth, "Depth")->required()->check(CLI::PositiveNumber);
  auto* tbuild = tree->add_subcommand("build", "DOT of the tree");
  tbuild->add_option("--depth", o.depth, "Depth")->required()->check(CLI::NonNegativeNumber);
  tbuild->add_option("--out", o.out, "Output file");

  auto* bench_cmd = app.add_subcommand("bench", "Time build-upto");
  bench_cmd->add_option("--max-n", o.max_n, "Largest grain bound")->required()->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--min-n", o.min_n, "Smallest grain bound")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--repeats", o.repeats, "Runs per n")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Budget budget = Budget::from_env();
  if (o.budget) budget.max_nodes = *o.budget;

  try {
    if (*build) {
      const Diagram d = o.method == "incremental" ? build_incremental(o.n, budget) : build_bfs(o.n, budget);
      emit(o, out, render(d, o));
    } else if (*upto) {
      const UptoMethod m = o.method == "explore" ? UptoMethod::explore : UptoMethod::incremental;
      emit(o, out, render(build_upto(o.n, m, budget), o));
    } else if (*count_cmd) {
      out << count(o, budget) << '\n';
    } else if (*verify) {
      return print_suites(verify_all(o.n, budget), out) ? exit_ok : exit_verify_failed;
    } else if (*rec) {
      const ReconciliationReport r = reconcile({o.max_n, o.max_l, o.max_k, o.max_gen, budget});
      emit(o, out, o.format == "json" ? r.to_json() : r.to_csv());
    } else if (*exp) {
      std::ifstream file(o.in, std::ios::binary);
      if (!file) throw Error("cannot read '" + o.in + "'");
      std::stringstream text;
      text << file.rdbuf();
      emit(o, out, render(diagram_from_json(text.str(), budget), o));
    } else if (*q) {
      out << query(o, budget) << '\n';
    } else if (*classify) {
      out << classify_text(parse_partition(o.partition), budget);
    } else if (*chain) {
      out << chain_text(o.depth);
    } else if (*tbuild) {
      emit(o, out, build_tree(o.depth, budget).to_dot());
    } else if (*bench_cmd) {
      out << to_csv(bench(o.max_n, o.repeats, o.min_n, budget));
    }
  } catch (const BudgetExceeded& e) {
    err << "spm: " << e.what() << '\n';
    return exit_budget;
  } catch (const Error& e) {
    err << "spm: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace spm::cli
