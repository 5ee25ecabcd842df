#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace simcount {

// Canonical index of a field element, always in [0, q).
using Elem = std::uint8_t;

namespace kern {
struct Ops;
}

// The finite field F_q, q = p^e <= 256, with table-driven arithmetic.
//
// Element i encodes the polynomial sum_j c_j x^j over F_p via i = sum_j c_j p^j
// (c_0 is the least significant base-p digit). Prime-field elements are their
// residues; 0 and 1 are the additive and multiplicative identities in every
// field. Extension fields reduce modulo a monic irreducible of degree e; the
// default modulus is the least one, ordering candidates by their non-leading
// coefficient vector read as a base-p integer.
//
// Contexts are immutable after construction. Matrices and spans hold a pointer
// to their context, so keep the Fq alive for as long as its values are.
class Fq {
 public:
  // Least-modulus constructor. Throws std::invalid_argument if p is not prime,
  // e < 1, or p^e > 256.
  static Fq make(unsigned p, unsigned e);
  // Explicit modulus c_0..c_e (monic, degree e, coefficients in [0,p)).
  // Throws std::invalid_argument if the modulus is malformed or reducible.
  static Fq make(unsigned p, unsigned e, const std::vector<unsigned>& modulus);

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }
  bool char_two() const { return p_ == 2; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[std::size_t(a) * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return sub_[std::size_t(a) * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  // Throws std::invalid_argument on inv(0).
  Elem inv(Elem a) const;

  // All q elements in canonical index order (0, 1, ..., q-1).
  std::vector<Elem> enumerate() const;

  // Coefficients c_0..c_{e-1} of the element's polynomial representative.
  std::vector<unsigned> coeffs(Elem a) const;
  // Inverse of coeffs(); inputs are reduced mod p.
  Elem from_coeffs(std::span<const unsigned> c) const;
  // Embeds an integer as a constant polynomial (residue mod p).
  Elem from_int(std::uint64_t v) const { return Elem(v % p_); }

  // Row a of the multiplication table, length q (padded allocation, so 16-byte
  // vector loads from a row start are in bounds).
  const Elem* mul_row(Elem a) const { return mul_.data() + std::size_t(a) * q_; }
  const Elem* add_table() const { return add_.data(); }

  // Row kernels selected for this field at construction.
  const kern::Ops& ops() const { return *ops_; }
  const char* ops_name() const;

  // Human-readable description, e.g. "F_4 = F_2[x]/(x^2 + x + 1)".
  std::string describe() const;

 private:
  Fq() = default;
  void build_tables();

  unsigned p_ = 0, e_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;  // c_0..c_e, monic
  std::vector<Elem> add_, sub_, mul_;  // q*q each, padded by 16 zero bytes
  std::vector<Elem> neg_, inv_;        // q each; inv_[0] unused
  const kern::Ops* ops_ = nullptr;
};

}  // namespace simcount
