#include "simcount/witness.hpp"

#include <stdexcept>

#include "simcount/algebra.hpp"

namespace simcount {

namespace {

// Places a (rows x cols) block B into the top-right corner of an n x n
// matrix: entries (i, n - cols + j) for B with the given row count.
MatFq block_upper(const Fq& f, unsigned n, unsigned rows, unsigned cols,
                  const std::vector<Elem>& b) {
  MatFq m(f, n);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j)
      m.set(i, n - cols + j, b[i * cols + j]);
  return m;
}

}  // namespace

WitnessTuple witness_even(unsigned l, const Fq& f) {
  if (l < 1) throw std::invalid_argument("witness_even: l must be at least 1");
  const unsigned n = 2 * l;
  WitnessTuple w;
  w.n = n;
  w.expected_centralizer_dim = max_commutative_dim(n);
  w.expected_unit_order =
      BigCount(f.q() - 1) * big_pow(f.q(), std::uint64_t(n) * n / 4);

  // First matrix: identity block. Matrix i >= 2: bottom row e_{i-1}, the unit
  // row vector with a 1 in column i-2 (0-indexed).
  std::vector<Elem> b(std::size_t(l) * l, 0);
  for (unsigned i = 0; i < l; ++i) b[std::size_t(i) * l + i] = 1;
  w.mats.push_back(block_upper(f, n, l, l, b));
  for (unsigned i = 2; i <= l + 1; ++i) {
    std::fill(b.begin(), b.end(), 0);
    b[std::size_t(l - 1) * l + (i - 2)] = 1;
    w.mats.push_back(block_upper(f, n, l, l, b));
  }
  return w;
}

WitnessTuple witness_odd(unsigned l, const Fq& f) {
  if (l < 1) throw std::invalid_argument("witness_odd: l must be at least 1");
  const unsigned n = 2 * l + 1;
  WitnessTuple w;
  w.n = n;
  w.expected_centralizer_dim = max_commutative_dim(n);
  w.expected_unit_order =
      BigCount(f.q() - 1) * big_pow(f.q(), std::uint64_t(n) * n / 4);

  // (l+1) x l top-right blocks: same shapes as the even case with a zero row
  // appended below the identity, and the e_{i-1} rows at the bottom.
  std::vector<Elem> b(std::size_t(l + 1) * l, 0);
  for (unsigned i = 0; i < l; ++i) b[std::size_t(i) * l + i] = 1;
  w.mats.push_back(block_upper(f, n, l + 1, l, b));
  for (unsigned i = 2; i <= l + 1; ++i) {
    std::fill(b.begin(), b.end(), 0);
    b[std::size_t(l) * l + (i - 2)] = 1;
    w.mats.push_back(block_upper(f, n, l + 1, l, b));
  }
  return w;
}

WitnessTuple witness_for(unsigned n, const Fq& f) {
  if (n < 2) throw std::invalid_argument("witness_for: n must be at least 2");
  return (n % 2 == 0) ? witness_even(n / 2, f) : witness_odd(n / 2, f);
}

}  // namespace simcount
