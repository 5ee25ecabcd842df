#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "simcount/branch.hpp"
#include "simcount/counting.hpp"
#include "simcount/witness.hpp"

namespace {

using namespace simcount;

struct CommonOpts {
  unsigned n = 2;
  std::uint64_t q = 2;
  std::vector<unsigned> modulus;
  std::string format;
  std::string out;
  int workers = 1;
  bool force = false;
  Budget budget() const { return Budget{workers, force}; }
};

void add_common(CLI::App* cmd, CommonOpts* o, const char* default_format) {
  cmd->add_option("--n", o->n, "matrix dimension")->required();
  cmd->add_option("--q", o->q, "field size, a prime power")->required();
  cmd->add_option("--modulus", o->modulus,
                  "field modulus coefficients c0,...,ce (monic, default: least "
                  "irreducible)")
      ->delimiter(',');
  o->format = default_format;
  cmd->add_option("--format", o->format, "output format");
  cmd->add_option("--out", o->out, "write output to a file instead of stdout");
  cmd->add_option("--workers", o->workers, "worker threads for orbit scans")
      ->check(CLI::Range(1, 256));
  cmd->add_flag("--force", o->force, "bypass scale guards");
}

std::pair<unsigned, unsigned> factor_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("--q must be at least 2");
  unsigned p = 0;
  for (unsigned d = 2; std::uint64_t(d) * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {static_cast<unsigned>(q), 1};  // q itself is prime
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw std::invalid_argument("--q must be a prime power, got " +
                                std::to_string(q));
  return {p, e};
}

Fq make_field(const CommonOpts& o) {
  auto [p, e] = factor_prime_power(o.q);
  if (o.modulus.empty()) return Fq::make(p, e);
  return Fq::make(p, e, o.modulus);
}

void write_output(const CommonOpts& o, const std::string& s) {
  if (o.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open --out path: " + o.out);
  f << s;
  if (!f.good())
    throw std::invalid_argument("failed writing --out path: " + o.out);
}

void require_format(const CommonOpts& o, std::initializer_list<const char*> ok) {
  for (const char* f : ok)
    if (o.format == f) return;
  std::string list;
  for (const char* f : ok) {
    if (!list.empty()) list += "|";
    list += f;
  }
  throw std::invalid_argument("unsupported --format '" + o.format +
                              "' for this command (expected " + list + ")");
}

// ---- count ----------------------------------------------------------------

struct CountOpts : CommonOpts {
  std::uint64_t k = 1;
  std::string method = "chain";
  std::string quantity = "c";
};

int run_count(const CountOpts& o) {
  require_format(o, {"text", "json"});
  const Fq f = make_field(o);
  const Budget budget = o.budget();
  BigCount value;

  if (o.method == "partition") {
    if (o.quantity != "c" || o.k != 1)
      throw std::invalid_argument(
          "--method partition computes the class count for k=1 only");
    value = classes_by_partition(o.n, static_cast<unsigned>(o.q));
  } else if (o.method == "burnside") {
    if (o.quantity != "a")
      throw std::invalid_argument(
          "--method burnside computes --quantity a (classes of arbitrary "
          "k-tuples)");
    value = burnside_count(o.n, f, static_cast<unsigned>(o.k), budget);
  } else if (o.method == "brute") {
    if (o.k > 16)
      throw ScaleError("brute methods are limited to k <= 16", BigCount(o.k));
    if (o.quantity == "c")
      value = brute_simclasses_commuting(o.n, f, static_cast<unsigned>(o.k),
                                         budget);
    else if (o.quantity == "C")
      value = brute_commuting_tuples(o.n, f, static_cast<unsigned>(o.k), budget);
    else
      throw std::invalid_argument("--method brute supports --quantity c or C");
  } else if (o.method == "chain") {
    const BranchGraph g = build_branch_graph(o.n, f, budget);
    if (o.quantity == "c")
      value = walk_count_classes(g, o.k, budget);
    else if (o.quantity == "C")
      value = walk_count_tuples(g, o.k, budget);
    else
      throw std::invalid_argument("--method chain supports --quantity c or C");
  } else {
    throw std::invalid_argument("unknown --method '" + o.method +
                                "' (expected partition|burnside|brute|chain)");
  }

  if (o.format == "json") {
    nlohmann::json j;
    j["n"] = o.n;
    j["q"] = o.q;
    j["k"] = o.k;
    j["method"] = o.method;
    j["quantity"] = o.quantity;
    j["value"] = decimal(value);
    write_output(o, j.dump(2) + "\n");
  } else {
    write_output(o, decimal(value) + "\n");
  }
  return 0;
}

// ---- graph ----------------------------------------------------------------

int run_graph(const CommonOpts& o) {
  require_format(o, {"json", "dot", "text"});
  const Fq f = make_field(o);
  const BranchGraph g = build_branch_graph(o.n, f, o.budget());
  if (o.format == "json") {
    write_output(o, branch_graph_json(g));
  } else if (o.format == "dot") {
    write_output(o, branch_graph_dot(g));
  } else {
    std::string s = "branching graph n=" + std::to_string(g.n()) +
                    " q=" + std::to_string(g.q()) + ": " +
                    std::to_string(g.num_nodes()) + " nodes, " +
                    std::to_string(g.num_edges()) + " edges, |GL| = " +
                    decimal(g.gl_order()) + "\n";
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      const BranchNode& node = g.node(i);
      s += "node " + std::to_string(i) + ": dim " + std::to_string(node.dim) +
           " center " + std::to_string(node.center_dim) +
           (node.commutative ? " commutative" : "") + " units " +
           decimal(node.unit_order) + "\n";
    }
    for (std::size_t i = 0; i < g.num_nodes(); ++i)
      for (const auto& [dst, w] : g.out_edges(i))
        s += "edge " + std::to_string(i) + " -> " + std::to_string(dst) +
             " weight " + decimal(w) + "\n";
    write_output(o, s);
  }
  return 0;
}

// ---- table ----------------------------------------------------------------

struct TableOpts : CommonOpts {
  std::uint64_t k_max = 3;
  std::string method = "auto";
};

int run_table(const TableOpts& o) {
  require_format(o, {"csv", "text", "json"});
  const Fq f = make_field(o);
  const Budget budget = o.budget();

  std::optional<BranchGraph> graph;
  bool graph_failed = false;
  auto chain_value = [&](std::uint64_t k) -> std::optional<BigCount> {
    if (graph_failed) return std::nullopt;
    if (!graph) {
      try {
        graph = build_branch_graph(o.n, f, budget);
      } catch (const ScaleError&) {
        graph_failed = true;
        return std::nullopt;
      }
    }
    try {
      return walk_count_classes(*graph, k, budget);
    } catch (const ScaleError&) {
      return std::nullopt;
    }
  };
  auto brute_value = [&](std::uint64_t k) -> std::optional<BigCount> {
    if (k > 16) return std::nullopt;
    try {
      return brute_simclasses_commuting(o.n, f, static_cast<unsigned>(k),
                                        budget);
    } catch (const ScaleError&) {
      return std::nullopt;
    }
  };

  struct Row {
    std::uint64_t k;
    std::string value;  // empty when refused
    std::string method;
  };
  std::vector<Row> rows;
  for (std::uint64_t k = 1; k <= o.k_max; ++k) {
    std::optional<BigCount> v;
    std::string method;
    if (o.method == "brute") {
      v = brute_value(k);
      method = "brute";
    } else if (o.method == "chain") {
      v = chain_value(k);
      method = "chain";
    } else if (o.method == "auto") {
      if (k <= 2) {
        v = brute_value(k);
        method = "brute";
      }
      if (!v) {
        v = chain_value(k);
        method = "chain";
      }
    } else {
      throw std::invalid_argument("unknown --method '" + o.method +
                                  "' (expected auto|brute|chain)");
    }
    if (!v) method = "scale-guard";
    rows.push_back(Row{k, v ? decimal(*v) : std::string(), method});
  }

  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const Row& r : rows) {
      nlohmann::json j;
      j["n"] = o.n;
      j["q"] = o.q;
      j["k"] = r.k;
      j["c_value"] = r.value;
      j["method"] = r.method;
      arr.push_back(j);
    }
    write_output(o, arr.dump(2) + "\n");
  } else {
    std::string s = "n,q,k,c_value,method\n";
    for (const Row& r : rows)
      s += std::to_string(o.n) + "," + std::to_string(o.q) + "," +
           std::to_string(r.k) + "," + r.value + "," + r.method + "\n";
    write_output(o, s);
  }
  return 0;
}

// ---- asymptotics ----------------------------------------------------------

struct AsymptoticsOpts : CommonOpts {
  std::uint64_t k_max = 20;
};

int run_asymptotics(const AsymptoticsOpts& o) {
  require_format(o, {"text", "json"});
  if (o.k_max < 1 || o.k_max > guard::kWalkLength)
    throw std::invalid_argument("--k-max must be in [1, 2^20]");
  const Fq f = make_field(o);
  const BranchGraph g = build_branch_graph(o.n, f, o.budget());
  const AsymptoticReport r =
      asymptotic_report(g, static_cast<unsigned>(o.k_max));
  write_output(o, o.format == "json" ? report_json(r) : report_text(r));
  return 0;
}

// ---- witness --------------------------------------------------------------

int run_witness(const CommonOpts& o) {
  require_format(o, {"text", "json"});
  if (o.n < 2) throw std::invalid_argument("witness requires --n at least 2");
  const Fq f = make_field(o);
  const WitnessTuple w = witness_for(o.n, f);

  VecSpan span = commutator_nullspace(f, o.n, w.mats);
  const unsigned dim = span.dim();
  const Subalgebra alg = Subalgebra::from_span(o.n, std::move(span), true);
  const bool commutative = is_commutative(alg);
  if (dim != w.expected_centralizer_dim)
    throw InternalError("witness centralizer dimension " + std::to_string(dim) +
                        " disagrees with the expected " +
                        std::to_string(w.expected_centralizer_dim));

  std::optional<BigCount> enumerated_units;
  try {
    enumerated_units = BigCount(unit_group(alg, o.budget()).order);
  } catch (const ScaleError&) {
    // Too large to enumerate; the closed form is still reported.
  }
  if (enumerated_units && *enumerated_units != w.expected_unit_order)
    throw InternalError("witness unit group order disagrees with the closed form");

  if (o.format == "json") {
    nlohmann::json j;
    j["n"] = o.n;
    j["q"] = o.q;
    j["centralizer_dim"] = dim;
    j["max_commutative_dim"] = max_commutative_dim(o.n);
    j["commutative"] = commutative;
    j["unit_order"] = decimal(w.expected_unit_order);
    j["unit_order_enumerated"] = enumerated_units.has_value();
    nlohmann::json mats = nlohmann::json::array();
    for (const MatFq& m : w.mats) {
      nlohmann::json rows = nlohmann::json::array();
      for (unsigned i = 0; i < m.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned j2 = 0; j2 < m.n(); ++j2) row.push_back(m.at(i, j2));
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    j["matrices"] = mats;
    write_output(o, j.dump(2) + "\n");
  } else {
    std::string s = "witness n=" + std::to_string(o.n) + " over " +
                    f.describe() + ": " + std::to_string(w.mats.size()) +
                    " commuting matrices\n";
    for (std::size_t i = 0; i < w.mats.size(); ++i)
      s += "matrix " + std::to_string(i + 1) + ":\n" + to_pretty(w.mats[i]) +
           "\n";
    s += "common centralizer dim " + std::to_string(dim) +
         " = max commutative dim " + std::to_string(max_commutative_dim(o.n)) +
         (commutative ? " (commutative)" : " (NOT commutative)") + "\n";
    s += "unit group order " + decimal(w.expected_unit_order) +
         (enumerated_units ? " (verified by enumeration)"
                           : " (closed form; enumeration over guard)") +
         "\n";
    write_output(o, s);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "simcount: exact counts of simultaneous similarity classes of commuting "
      "matrix tuples over small finite fields"};
  app.require_subcommand(1);

  CountOpts count_opts;
  CLI::App* count = app.add_subcommand(
      "count", "count commuting k-tuples (C) or their classes (c or a)");
  add_common(count, &count_opts, "text");
  count->add_option("--k", count_opts.k, "tuple length")->required();
  count->add_option("--method", count_opts.method,
                    "partition|burnside|brute|chain");
  count->add_option("--quantity", count_opts.quantity,
                    "c = classes of commuting tuples, C = commuting tuples, "
                    "a = classes of arbitrary tuples");

  TableOpts table_opts;
  CLI::App* table =
      app.add_subcommand("table", "class counts for k = 1..k-max");
  add_common(table, &table_opts, "csv");
  table->add_option("--k-max", table_opts.k_max, "largest tuple length")
      ->required();
  table->add_option("--method", table_opts.method, "auto|brute|chain");

  CommonOpts graph_opts;
  CLI::App* graph =
      app.add_subcommand("graph", "emit the centralizer branching graph");
  add_common(graph, &graph_opts, "json");

  AsymptoticsOpts asym_opts;
  CLI::App* asym = app.add_subcommand(
      "asymptotics", "normalized growth of the counts for k = 1..k-max");
  add_common(asym, &asym_opts, "text");
  asym->add_option("--k-max", asym_opts.k_max, "largest tuple length");

  CommonOpts witness_opts;
  CLI::App* witness = app.add_subcommand(
      "witness", "a commuting tuple with a maximal commutative centralizer");
  add_common(witness, &witness_opts, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return run_count(count_opts);
    if (table->parsed()) return run_table(table_opts);
    if (graph->parsed()) return run_graph(graph_opts);
    if (asym->parsed()) return run_asymptotics(asym_opts);
    if (witness->parsed()) return run_witness(witness_opts);
    return 2;
  } catch (const ScaleError& e) {
    std::cerr << "scale guard: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
