#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simcount/common.hpp"
#include "simcount/linalg.hpp"

namespace simcount {

// A unital subalgebra of M_n(F_q): a VecSpan of flattened matrices that
// contains the identity and is closed under products. Construction verifies
// both unless told not to.
class Subalgebra {
 public:
  static Subalgebra full(const Fq& f, unsigned n);
  // Throws InternalError when verify finds the span not unital or not closed.
  static Subalgebra from_span(unsigned n, VecSpan span, bool verify = true);

  const Fq& field() const { return span_.field(); }
  unsigned n() const { return n_; }
  unsigned dim() const { return span_.dim(); }
  const VecSpan& span() const { return span_; }
  std::string key() const;

  MatFq basis_mat(unsigned r) const;
  bool contains(const MatFq& a) const;

  // The element whose coordinate vector over the RREF basis is `code` read as
  // base-q digits, digit r scaling basis row r. Enumeration order for the
  // whole algebra is code = 0 .. q^dim - 1.
  MatFq element_at(std::uint64_t code) const;
  // q^dim, guarded by guard::kAlgebraElems (ScaleError; budget.force bypasses).
  std::uint64_t element_count(const Budget& budget = {}) const;
  std::vector<MatFq> elements(const Budget& budget = {}) const;

 private:
  Subalgebra(unsigned n, VecSpan span) : n_(n), span_(std::move(span)) {}
  unsigned n_;
  VecSpan span_;
};

// Centralizer of a within the subalgebra z, i.e. {x in z : xa = ax}, itself a
// unital subalgebra when a is in z. Throws std::invalid_argument otherwise.
Subalgebra centralizer_in(const Subalgebra& z, const MatFq& a);

// Center of z: elements commuting with every basis element.
Subalgebra center_of(const Subalgebra& z);

bool is_commutative(const Subalgebra& z);

// Smallest unital multiplicatively-closed subspace containing the span.
// Grows by basis products until a fixed point; at most ambient-dim rounds.
VecSpan span_closure_product(const VecSpan& s);

// Largest dimension of a commutative unital subalgebra of M_n: n^2/4 + 1,
// integer division.
unsigned max_commutative_dim(unsigned n);

// Conjugation-invariant summary of a subalgebra, used to prune the expensive
// conjugator search. Equality never certifies conjugacy; inequality refutes it.
struct Fingerprint {
  std::uint32_t dim = 0;
  std::uint32_t center_dim = 0;
  std::uint64_t unit_count = 0;
  std::uint64_t idempotent_count = 0;
  // minpoly_degree_counts[d] = number of elements with minimal polynomial of
  // degree d, for d = 1..n; index 0 unused.
  std::vector<std::uint64_t> minpoly_degree_counts;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

// Scans all q^dim elements; guarded like Subalgebra::elements.
Fingerprint fingerprint_of(const Subalgebra& z, const Budget& budget = {});

// Degree of the minimal polynomial of a (dimension of F[a]). At most n.
unsigned minpoly_degree(const MatFq& a);

// Span of g * z * g^{-1}.
VecSpan conjugate_span(const Subalgebra& z, const MatFq& g, const MatFq& g_inv);

// First g in group order with g * a * g^{-1} = b, if any.
std::optional<MatFq> find_conjugator(const Subalgebra& a, const Subalgebra& b,
                                     GroupView group);

// Partition of subalgebras into conjugacy classes under a matrix group.
// class_of[i] is the class of input i; reps[c] is the index of the first
// input in class c. Classes are numbered in order of first appearance, so the
// result is independent of everything but the input order.
struct Classification {
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> reps;
};
Classification conjugacy_classify(const std::vector<Subalgebra>& algs,
                                  GroupView group, const Budget& budget = {});

}  // namespace simcount
