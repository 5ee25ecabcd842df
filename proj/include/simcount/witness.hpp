#pragma once

#include <vector>

#include "simcount/bigint.hpp"
#include "simcount/linalg.hpp"

namespace simcount {

// A tuple of floor(n/2)+1 commuting n x n matrices whose common centralizer
// is a commutative subalgebra of the largest possible dimension
// max_commutative_dim(n) = n^2/4 + 1. Every matrix is strictly
// block-upper-triangular (top-right block only), so all pairwise products
// vanish and the tuple commutes termwise.
struct WitnessTuple {
  unsigned n = 0;
  std::vector<MatFq> mats;
  unsigned expected_centralizer_dim = 0;
  // (q-1) * q^(n^2/4): the scalars times the square-zero radical part.
  BigCount expected_unit_order;
};

// n = 2l, l >= 1: l x l top-right blocks. The first matrix's block is I_l;
// matrix i >= 2 has the single row e_{i-1} as its bottom row.
WitnessTuple witness_even(unsigned l, const Fq& f);

// n = 2l+1, l >= 1: (l+1) x l top-right blocks, same rows stacked over zero.
WitnessTuple witness_odd(unsigned l, const Fq& f);

// Dispatch on parity; n >= 2.
WitnessTuple witness_for(unsigned n, const Fq& f);

}  // namespace simcount
