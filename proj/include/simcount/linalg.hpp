#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simcount/field.hpp"

namespace simcount {

inline constexpr unsigned kMaxN = 8;

// Dense n x n matrix over F_q, n <= kMaxN, entries stored row-major as
// canonical element indices. Value type; carries a pointer to its field
// context, which must outlive it.
class MatFq {
 public:
  MatFq(const Fq& f, unsigned n);  // zero matrix
  static MatFq identity(const Fq& f, unsigned n);

  const Fq& field() const { return *f_; }
  unsigned n() const { return n_; }

  Elem at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
  void set(unsigned i, unsigned j, Elem v) { a_[i * n_ + j] = v; }
  Elem* row(unsigned i) { return a_.data() + i * n_; }
  const Elem* row(unsigned i) const { return a_.data() + i * n_; }

  // Row-major flattening: entry (i,j) sits at position i*n + j. Every
  // consumer of flattened matrices (spans, nullspaces, keys, encodings)
  // relies on this one ordering.
  std::span<const Elem> flat() const { return {a_.data(), std::size_t(n_) * n_}; }
  std::span<Elem> flat() { return {a_.data(), std::size_t(n_) * n_}; }

  bool operator==(const MatFq& o) const;
  bool is_zero() const;
  bool is_identity() const;

  // Position in the canonical enumeration of all n x n matrices: the flat
  // entries read as base-q digits, position 0 least significant.
  std::uint64_t encode() const;
  static MatFq decode(const Fq& f, unsigned n, std::uint64_t code);

  void append_key(std::string& out) const;
  MatFq conjugated(const MatFq& g, const MatFq& g_inv) const;

 private:
  const Fq* f_;
  std::uint8_t n_;
  std::array<Elem, kMaxN * kMaxN> a_{};
};

MatFq mat_mul(const MatFq& a, const MatFq& b);
MatFq mat_add(const MatFq& a, const MatFq& b);
// g * a * g_inv; g_inv is taken on trust (callers cache inverses).
MatFq conjugate(const MatFq& g, const MatFq& a, const MatFq& g_inv);
unsigned mat_rank(const MatFq& a);
// False when the matrix is singular; *out untouched in that case.
bool try_inverse(const MatFq& a, MatFq* out);
// Throws std::invalid_argument on a singular input.
MatFq inverse(const MatFq& a);
std::string to_pretty(const MatFq& a);

// A subspace of F_q^ambient held in reduced row echelon form. The RREF basis
// is a canonical representative: two spans are equal as sets iff their row
// bytes are equal, so the raw rows serve as a dictionary key.
class VecSpan {
 public:
  VecSpan(const Fq& f, unsigned ambient);

  const Fq& field() const { return *f_; }
  unsigned ambient() const { return ambient_; }
  unsigned dim() const { return static_cast<unsigned>(pivots_.size()); }
  std::span<const Elem> row(unsigned r) const {
    return {rows_.data() + std::size_t(r) * ambient_, ambient_};
  }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  // Inserts a vector, re-canonicalizing. Returns true when the dimension grew.
  bool insert(std::span<const Elem> v);
  // Reduces v against the basis in place; v lands on zero iff it was in the span.
  void reduce_inplace(Elem* v) const;
  bool contains(std::span<const Elem> v) const;

  bool operator==(const VecSpan& o) const;
  void append_key(std::string& out) const;

 private:
  const Fq* f_;
  std::uint32_t ambient_;
  std::vector<Elem> rows_;  // dim * ambient, pivot columns strictly increasing
  std::vector<std::uint32_t> pivots_;
};

// Kernel of the nrows x ncols system rows * x = 0. `rows` is row-major and is
// destroyed (reduced in place).
VecSpan nullspace(const Fq& f, std::vector<Elem>& rows, std::size_t nrows,
                  std::size_t ncols);

// Common centralizer in M_n of a list of n x n matrices, as a subspace of
// F_q^(n*n) under the row-major flattening. An empty list yields all of M_n.
// This subspace is automatically multiplicatively closed and unital.
VecSpan commutator_nullspace(const Fq& f, unsigned n,
                             std::span<const MatFq> mats);

// A group of invertible matrices given by parallel element/inverse arrays.
struct GroupView {
  std::span<const MatFq> elements;
  std::span<const MatFq> inverses;
  std::size_t size() const { return elements.size(); }
};

}  // namespace simcount
