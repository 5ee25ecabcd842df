#include "simcount/branch.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "simcount/witness.hpp"

#include <json.hpp>

namespace simcount {

BigCount BranchGraph::edge_weight(std::size_t src, std::size_t dst) const {
  for (const auto& [d, w] : adj_[src])
    if (d == dst) return w;
  return 0;
}

std::size_t BranchGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& out : adj_) total += out.size();
  return total;
}

namespace {

struct GraphBuilder {
  const Fq& f;
  unsigned n;
  Budget budget;
  MatrixGroup gl;
  std::vector<BranchNode> nodes;
  std::vector<std::map<std::uint32_t, BigCount>> adj;
  std::unordered_map<std::string, Fingerprint> fp_cache;

  const Fingerprint& fp_of(const Subalgebra& z) {
    auto [it, fresh] = fp_cache.try_emplace(z.key());
    if (fresh) it->second = fingerprint_of(z, budget);
    return it->second;
  }

  // Identifies the GL-class of z among known nodes, certifying candidate
  // matches (equal fingerprints) by explicit conjugator search; appends a new
  // node when none matches. Nodes are numbered in discovery order.
  std::uint32_t find_or_add(const Subalgebra& z, bool* fresh) {
    const Fingerprint fp = fp_of(z);
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
      if (!(nodes[i].fp == fp)) continue;
      if (nodes[i].rep.span() == z.span() ||
          find_conjugator(nodes[i].rep, z, gl.view()).has_value()) {
        *fresh = false;
        return i;
      }
    }
    BranchNode node{z, fp, fp.dim, fp.center_dim,
                    /*commutative=*/fp.center_dim == fp.dim, BigCount(0)};
    nodes.push_back(std::move(node));
    adj.emplace_back();
    *fresh = true;
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }

  // One branching step: partition the node's elements into unit-group orbits,
  // take the centralizer of one representative per orbit, classify those up
  // to unit-group conjugacy, then aggregate the classes into GL-level nodes.
  // Each orbit contributes exactly 1 to exactly one outgoing edge weight.
  void expand(std::uint32_t id) {
    const Subalgebra z = nodes[id].rep;  // copy: nodes may grow below
    UnitGroup units = unit_group(z, budget);
    nodes[id].unit_order = BigCount(units.order);

    const std::vector<MatFq> elems = z.elements(budget);
    const OrbitPartition orbits = orbit_partition(elems, units.view(), budget);
    std::uint64_t covered = 0;
    for (std::uint64_t s : orbits.orbit_size) covered += s;
    if (covered != elems.size())
      throw InternalError("branch: orbit sizes do not cover the algebra");

    std::vector<Subalgebra> distinct;
    std::vector<BigCount> orbit_multiplicity;
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t c = 0; c < orbits.num_orbits(); ++c) {
      Subalgebra w = centralizer_in(z, elems[orbits.representative[c]]);
      std::string key = w.key();
      auto [it, fresh] = seen.try_emplace(std::move(key), distinct.size());
      if (fresh) {
        distinct.push_back(std::move(w));
        orbit_multiplicity.emplace_back(1);
      } else {
        orbit_multiplicity[it->second] += 1;
      }
    }

    const Classification cls =
        conjugacy_classify(distinct, units.view(), budget);
    std::vector<BigCount> class_weight(cls.reps.size(), BigCount(0));
    for (std::size_t i = 0; i < distinct.size(); ++i)
      class_weight[cls.class_of[i]] += orbit_multiplicity[i];

    BigCount edge_total = 0;
    for (std::size_t c = 0; c < cls.reps.size(); ++c) {
      bool fresh = false;
      const std::uint32_t dst = find_or_add(distinct[cls.reps[c]], &fresh);
      adj[id][dst] += class_weight[c];
      edge_total += class_weight[c];
    }
    if (edge_total != BigCount(orbits.num_orbits()))
      throw InternalError("branch: edge weights do not cover the orbits");
  }
};

void verify_structure(const BranchGraph& g) {
  const unsigned q = g.q();
  const std::size_t m = g.num_nodes();
  for (std::size_t i = 0; i < m; ++i) {
    const BranchNode& node = g.node(i);
    const BigCount self = g.edge_weight(i, i);
    if (self != big_pow(q, node.center_dim))
      throw InternalError("branch: self-loop weight is not q^center_dim");
    if (node.commutative) {
      if (g.out_edges(i).size() != 1 || self != big_pow(q, node.dim))
        throw InternalError("branch: commutative node must carry only q^dim self-loops");
    }
    for (const auto& [dst, w] : g.out_edges(i)) {
      if (dst == i) continue;
      const BranchNode& to = g.node(dst);
      if (!(to.dim < node.dim && to.center_dim > node.center_dim))
        throw InternalError("branch: non-loop edge must drop dim and raise center_dim");
    }
  }
  // Reachability from node 0.
  std::vector<bool> reach(m, false);
  std::deque<std::size_t> queue{0};
  reach[0] = true;
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (const auto& [dst, w] : g.out_edges(at))
      if (!reach[dst]) {
        reach[dst] = true;
        queue.push_back(dst);
      }
  }
  if (!std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }))
    throw InternalError("branch: unreachable node");
}

}  // namespace

BranchGraph build_branch_graph(unsigned n, const Fq& f, const Budget& budget) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("build_branch_graph: n must be in [1, " +
                                std::to_string(kMaxN) + "]");
  GraphBuilder b{f, n, budget, gl_enumerate(n, f, budget), {}, {}, {}};

  bool fresh = false;
  const std::uint32_t root = b.find_or_add(Subalgebra::full(f, n), &fresh);
  std::deque<std::uint32_t> queue{root};
  while (!queue.empty()) {
    const std::uint32_t at = queue.front();
    queue.pop_front();
    const std::size_t before = b.nodes.size();
    b.expand(at);
    for (std::size_t i = before; i < b.nodes.size(); ++i)
      queue.push_back(static_cast<std::uint32_t>(i));
  }

  BranchGraph g;
  g.n_ = n;
  g.f_ = &f;
  g.gl_ = std::move(b.gl);
  g.nodes_ = std::move(b.nodes);
  g.adj_.resize(b.adj.size());
  for (std::size_t i = 0; i < b.adj.size(); ++i)
    for (const auto& [dst, w] : b.adj[i]) g.adj_[i].emplace_back(dst, w);
  verify_structure(g);
  return g;
}

namespace {

using BigMat = std::vector<std::vector<BigCount>>;

BigMat big_identity(std::size_t m) {
  BigMat r(m, std::vector<BigCount>(m, 0));
  for (std::size_t i = 0; i < m; ++i) r[i][i] = 1;
  return r;
}

BigMat big_mul(const BigMat& a, const BigMat& b) {
  const std::size_t m = a.size();
  BigMat r(m, std::vector<BigCount>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

BigMat weight_matrix(const BranchGraph& g) {
  BigMat w(g.num_nodes(), std::vector<BigCount>(g.num_nodes(), 0));
  for (std::size_t i = 0; i < g.num_nodes(); ++i)
    for (const auto& [dst, weight] : g.out_edges(i)) w[i][dst] = weight;
  return w;
}

BigMat big_pow_mat(BigMat base, std::uint64_t k) {
  BigMat r = big_identity(base.size());
  while (k) {
    if (k & 1) r = big_mul(r, base);
    base = big_mul(base, base);
    k >>= 1;
  }
  return r;
}

void check_walk_length(std::uint64_t k, const Budget& budget) {
  if (k > guard::kWalkLength && !budget.force)
    throw ScaleError("walk length k = " + std::to_string(k) +
                         " exceeds 2^20 (weights would hold ~k*log2(q)*dim bits;"
                         " pass --force to override)",
                     BigCount(k));
}

std::vector<BigCount> terminal_weights(const BranchGraph& g) {
  std::vector<BigCount> v(g.num_nodes());
  for (std::size_t j = 0; j < g.num_nodes(); ++j) {
    const BigCount& u = g.node(j).unit_order;
    if (u == 0 || g.gl_order() % u != 0)
      throw InternalError("branch: unit order does not divide the GL order");
    v[j] = g.gl_order() / u;
  }
  return v;
}

}  // namespace

BigCount walk_count_classes(const BranchGraph& g, std::uint64_t k,
                            const Budget& budget) {
  check_walk_length(k, budget);
  if (k == 0) return 1;
  const BigMat wk = big_pow_mat(weight_matrix(g), k);
  BigCount total = 0;
  for (const BigCount& w : wk[0]) total += w;
  return total;
}

BigCount walk_count_tuples(const BranchGraph& g, std::uint64_t k,
                           const Budget& budget) {
  check_walk_length(k, budget);
  const std::vector<BigCount> v = terminal_weights(g);
  if (k == 0) return v[0];
  const BigMat wk = big_pow_mat(weight_matrix(g), k);
  BigCount total = 0;
  for (std::size_t j = 0; j < wk[0].size(); ++j) total += wk[0][j] * v[j];
  return total;
}

bool witness_reachability(const BranchGraph& g, const Budget& budget) {
  const unsigned n = g.n();
  const unsigned m = max_commutative_dim(n);
  if (n == 1) {
    for (const BranchNode& node : g.nodes())
      if (node.commutative && node.dim == m) return true;
    return false;
  }
  const WitnessTuple w = witness_for(n, g.field());
  VecSpan span = commutator_nullspace(g.field(), n, w.mats);
  const Subalgebra alg = Subalgebra::from_span(n, std::move(span), true);
  if (alg.dim() != w.expected_centralizer_dim)
    throw InternalError("witness: centralizer dimension disagrees with the construction");
  const Fingerprint fp = fingerprint_of(alg, budget);
  for (const BranchNode& node : g.nodes()) {
    if (!(node.fp == fp)) continue;
    if (node.rep.span() == alg.span() ||
        find_conjugator(node.rep, alg, g.gl().view()).has_value())
      return node.commutative && node.dim == m;
  }
  return false;
}

std::string branch_graph_json(const BranchGraph& g) {
  nlohmann::json root;
  root["n"] = g.n();
  root["q"] = g.q();
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    const BranchNode& node = g.node(i);
    nlohmann::json jn;
    jn["id"] = i;
    jn["dim"] = node.dim;
    jn["center_dim"] = node.center_dim;
    jn["commutative"] = node.commutative;
    jn["unit_order"] = decimal(node.unit_order);
    nodes.push_back(jn);
  }
  root["nodes"] = nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < g.num_nodes(); ++i)
    for (const auto& [dst, w] : g.out_edges(i)) {
      nlohmann::json je;
      je["src"] = i;
      je["dst"] = dst;
      je["weight"] = decimal(w);
      edges.push_back(je);
    }
  root["edges"] = edges;
  root["gl_order"] = decimal(g.gl_order());
  return root.dump(2) + "\n";
}

std::string branch_graph_dot(const BranchGraph& g) {
  std::string s = "digraph branching {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    const BranchNode& node = g.node(i);
    s += "  n" + std::to_string(i) + " [label=\"" + std::to_string(i) +
         ": dim " + std::to_string(node.dim) + ", ctr " +
         std::to_string(node.center_dim) + "\" shape=" +
         (node.commutative ? "doublecircle" : "circle") + "];\n";
  }
  for (std::size_t i = 0; i < g.num_nodes(); ++i)
    for (const auto& [dst, w] : g.out_edges(i))
      s += "  n" + std::to_string(i) + " -> n" + std::to_string(dst) +
           " [label=\"" + decimal(w) + "\"];\n";
  s += "}\n";
  return s;
}

namespace {

// Exact value of sum_{r>=0} r^j x^r for rational x in (0,1): 1/(1-x) for
// j = 0, and sum_{i=0}^{j-1} A(j,i) x^{i+1} / (1-x)^{j+1} with Eulerian
// numbers A otherwise.
BigRat power_series_sum(unsigned j, const BigRat& x) {
  const BigRat one_minus = BigRat(1) - x;
  if (j == 0) return BigRat(1) / one_minus;
  std::vector<std::vector<BigCount>> euler(j + 1);
  euler[0] = {1};
  for (unsigned row = 1; row <= j; ++row) {
    euler[row].assign(row, 0);
    for (unsigned i = 0; i < row; ++i) {
      const BigCount up = (i < euler[row - 1].size()) ? euler[row - 1][i] : 0;
      const BigCount left = (i >= 1) ? euler[row - 1][i - 1] : 0;
      euler[row][i] = BigCount(i + 1) * up + BigCount(row - i) * left;
    }
  }
  BigRat numer = 0;
  BigRat xpow = x;
  for (unsigned i = 0; i < j; ++i) {
    numer += BigRat(euler[j][i]) * xpow;
    xpow *= x;
  }
  BigRat denom = 1;
  for (unsigned i = 0; i <= j; ++i) denom *= one_minus;
  return numer / denom;
}

BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigCount r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

AsymptoticReport asymptotic_report(const BranchGraph& g, unsigned k_max) {
  AsymptoticReport r;
  r.n = g.n();
  r.q = g.q();
  r.k_max = k_max;
  r.m = max_commutative_dim(g.n());

  const BigMat w = weight_matrix(g);
  const std::vector<BigCount> v = terminal_weights(g);
  const std::size_t m = g.num_nodes();

  // Iterate u_k = W u_{k-1} from the all-ones vector; c(k) = u_k[0]. The
  // tuple count uses the terminal-weight vector as the seed instead.
  std::vector<BigCount> u(m, 1);
  std::vector<BigCount> t(v);
  BigCount qmk = 1;  // q^(m*k)
  const BigCount qm = big_pow(g.q(), r.m);
  for (unsigned k = 1; k <= k_max; ++k) {
    std::vector<BigCount> nu(m, 0), nt(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (w[i][j] == 0) continue;
        nu[i] += w[i][j] * u[j];
        nt[i] += w[i][j] * t[j];
      }
    u = std::move(nu);
    t = std::move(nt);
    qmk *= qm;
    AsymptoticRow row;
    row.k = k;
    row.classes = u[0];
    row.tuples = t[0];
    row.classes_norm = BigRat(u[0]) / BigRat(qmk);
    row.tuples_norm = BigRat(t[0]) / BigRat(qmk);
    r.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i + 1 < r.rows.size(); ++i)
    r.rows[i].ratio_next =
        BigRat(r.rows[i + 1].classes) / BigRat(r.rows[i].classes);

  if (!r.rows.empty()) {
    r.classes_norm_min = r.rows[0].classes_norm;
    r.classes_norm_max = r.rows[0].classes_norm;
    r.tuples_norm_min = r.rows[0].tuples_norm;
    r.tuples_norm_max = r.rows[0].tuples_norm;
    for (const auto& row : r.rows) {
      r.classes_norm_min = std::min(r.classes_norm_min, row.classes_norm);
      r.classes_norm_max = std::max(r.classes_norm_max, row.classes_norm);
      r.tuples_norm_min = std::min(r.tuples_norm_min, row.tuples_norm);
      r.tuples_norm_max = std::max(r.tuples_norm_max, row.tuples_norm);
    }
  }

  // Series upper bound for the limiting constant, with the graph's node count
  // standing in for the number of classes of maximal commutative subalgebras.
  r.surrogate_class_count = static_cast<unsigned>(g.num_nodes());
  const unsigned nn = g.n() * g.n();
  const BigRat x = BigRat(1) / BigRat(g.q());
  BigRat bound = 0;
  for (unsigned j = 0; j < nn; ++j) {
    const BigCount choose = binomial(r.surrogate_class_count, j + 1);
    if (choose == 0) break;
    bound += BigRat(choose) * BigRat(big_pow(g.q(), std::uint64_t(nn) * (j + 1))) *
             power_series_sum(j, x);
  }
  r.series_bound_surrogate = bound;
  return r;
}

std::string report_text(const AsymptoticReport& r) {
  std::string s = "asymptotics n=" + std::to_string(r.n) +
                  " q=" + std::to_string(r.q) +
                  " growth exponent m=" + std::to_string(r.m) + " (q^m = " +
                  decimal(big_pow(r.q, r.m)) + ")\n";
  s += "k\tclasses\ttuples\tclasses/q^(mk)\tratio_to_next\n";
  for (const auto& row : r.rows) {
    s += std::to_string(row.k) + "\t" + decimal(row.classes) + "\t" +
         decimal(row.tuples) + "\t" + to_fixed(row.classes_norm, 6) + "\t";
    s += row.ratio_next ? to_fixed(*row.ratio_next, 6) : std::string("-");
    s += "\n";
  }
  s += "classes/q^(mk) empirical range [" + to_fixed(r.classes_norm_min, 6) +
       ", " + to_fixed(r.classes_norm_max, 6) + "]\n";
  s += "tuples/q^(mk) empirical range [" + to_fixed(r.tuples_norm_min, 6) +
       ", " + to_fixed(r.tuples_norm_max, 6) + "]\n";
  s += "series upper bound for the class constant: " +
       to_fixed(r.series_bound_surrogate, 3) +
       " (node-count surrogate: uses " +
       std::to_string(r.surrogate_class_count) +
       " graph nodes in place of the maximal-commutative class count)\n";
  return s;
}

std::string report_json(const AsymptoticReport& r) {
  nlohmann::json root;
  root["n"] = r.n;
  root["q"] = r.q;
  root["k_max"] = r.k_max;
  root["m"] = r.m;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json jr;
    jr["k"] = row.k;
    jr["classes"] = decimal(row.classes);
    jr["tuples"] = decimal(row.tuples);
    jr["classes_norm"] = decimal(row.classes_norm);
    jr["tuples_norm"] = decimal(row.tuples_norm);
    if (row.ratio_next) jr["ratio_next"] = decimal(*row.ratio_next);
    rows.push_back(jr);
  }
  root["rows"] = rows;
  root["classes_norm_min"] = decimal(r.classes_norm_min);
  root["classes_norm_max"] = decimal(r.classes_norm_max);
  root["tuples_norm_min"] = decimal(r.tuples_norm_min);
  root["tuples_norm_max"] = decimal(r.tuples_norm_max);
  root["series_bound_surrogate"] = decimal(r.series_bound_surrogate);
  root["surrogate_class_count"] = r.surrogate_class_count;
  return root.dump(2) + "\n";
}

}  // namespace simcount
