#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simcount/algebra.hpp"
#include "simcount/common.hpp"
#include "simcount/counting.hpp"
#include "simcount/grp.hpp"

namespace simcount {

// One GL_n-conjugacy class of iterated centralizer subalgebras.
struct BranchNode {
  Subalgebra rep;
  Fingerprint fp;
  unsigned dim = 0;
  unsigned center_dim = 0;
  bool commutative = false;
  BigCount unit_order;  // order of the unit group of rep
};

// The branching graph of M_n(F_q). Node 0 is M_n itself. The weight on edge
// Z -> Z' is the number of unit-group orbits on Z whose member centralizers
// land in class Z'. Walks of length k starting at node 0 therefore count
// simultaneous similarity classes of commuting k-tuples; weighting the
// terminal node j by |GL_n| / |units(Z_j)| counts the tuples themselves.
//
// Structure (verified after every build): exactly one self-loop per node, of
// weight q^center_dim; commutative nodes carry only their self-loop; every
// non-loop edge strictly drops dim and strictly raises center_dim, so the
// loop-free part is a DAG; every node is reachable from node 0.
class BranchGraph {
 public:
  unsigned n() const { return n_; }
  unsigned q() const { return f_->q(); }
  const Fq& field() const { return *f_; }
  const BigCount& gl_order() const { return gl_.order; }
  const MatrixGroup& gl() const { return gl_; }

  std::size_t num_nodes() const { return nodes_.size(); }
  const BranchNode& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<BranchNode>& nodes() const { return nodes_; }

  // Outgoing edges of a node, (dst, weight), sorted by dst.
  const std::vector<std::pair<std::uint32_t, BigCount>>& out_edges(
      std::size_t i) const {
    return adj_[i];
  }
  // Zero when the edge is absent.
  BigCount edge_weight(std::size_t src, std::size_t dst) const;
  std::size_t num_edges() const;

 private:
  friend BranchGraph build_branch_graph(unsigned, const Fq&, const Budget&);
  unsigned n_ = 0;
  const Fq* f_ = nullptr;
  MatrixGroup gl_;
  std::vector<BranchNode> nodes_;
  std::vector<std::vector<std::pair<std::uint32_t, BigCount>>> adj_;
};

// Breadth-first closure from M_n: partition each discovered subalgebra's
// elements into unit-group orbits, take one centralizer per orbit, classify
// the results up to conjugacy, recurse on fresh classes.
BranchGraph build_branch_graph(unsigned n, const Fq& f,
                               const Budget& budget = {});

// Weighted count of length-k walks from node 0: the number of simultaneous
// similarity classes of commuting k-tuples. k = 0 gives 1. Binary powering,
// so large k is cheap; k is guarded by guard::kWalkLength.
BigCount walk_count_classes(const BranchGraph& g, std::uint64_t k,
                            const Budget& budget = {});

// Same walks with terminal weight |GL_n| / |units(terminal)|: the number of
// commuting k-tuples. Divisions are exact; InternalError otherwise.
BigCount walk_count_tuples(const BranchGraph& g, std::uint64_t k,
                           const Budget& budget = {});

// True when the graph contains the class of the witness tuple's centralizer
// and that node is commutative of dimension max_commutative_dim(n).
bool witness_reachability(const BranchGraph& g, const Budget& budget = {});

// Stable serializations. JSON: alphabetical keys, counts as decimal strings,
// nodes by id, edges sorted by (src, dst). DOT: one node per line, double
// circle for commutative nodes, every edge labeled with its weight.
std::string branch_graph_json(const BranchGraph& g);
std::string branch_graph_dot(const BranchGraph& g);

struct AsymptoticRow {
  unsigned k = 0;
  BigCount classes;  // walk count
  BigCount tuples;   // terminal-weighted walk count
  BigRat classes_norm;  // classes / q^(m*k), m = max_commutative_dim(n)
  BigRat tuples_norm;
  // classes(k+1) / classes(k); empty on the last row.
  std::optional<BigRat> ratio_next;
};

struct AsymptoticReport {
  unsigned n = 0, q = 0, k_max = 0;
  unsigned m = 0;  // the growth exponent: classes ~ q^(m*k)
  std::vector<AsymptoticRow> rows;
  // Empirical bounds of the normalized sequences over k = 1..k_max.
  BigRat classes_norm_min, classes_norm_max;
  BigRat tuples_norm_min, tuples_norm_max;
  // Closed-form upper bound for the limiting constant, evaluated with the
  // node count standing in for the number of conjugacy classes of maximal
  // commutative subalgebras. A surrogate, and labeled as such in output.
  unsigned surrogate_class_count = 0;
  BigRat series_bound_surrogate;
};

AsymptoticReport asymptotic_report(const BranchGraph& g, unsigned k_max);
std::string report_text(const AsymptoticReport& r);
std::string report_json(const AsymptoticReport& r);

}  // namespace simcount
