#include "simcount/grp.hpp"

#include <string>

namespace simcount {

BigCount gl_order_formula(unsigned n, unsigned q) {
  // |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)
  BigCount order = 1;
  const BigCount qn = big_pow(q, n);
  for (unsigned i = 0; i < n; ++i) order *= qn - big_pow(q, i);
  return order;
}

MatrixGroup gl_enumerate(unsigned n, const Fq& f, const Budget& budget) {
  const BigCount space = big_pow(f.q(), std::uint64_t(n) * n);
  if (space > BigCount(guard::kMatrixSpaceHard))
    throw ScaleError("gl_enumerate refused: q^(n^2) = " + decimal(space) +
                         " exceeds 2^40",
                     space);
  if (space > BigCount(guard::kMatrixSpaceScan) && !budget.force)
    throw ScaleError("gl_enumerate refused: scanning q^(n^2) = " +
                         decimal(space) +
                         " matrices exceeds 2^26 (pass --force to override)",
                     space);
  const BigCount order = gl_order_formula(n, f.q());
  if (order > BigCount(guard::kGroupElems) && !budget.force)
    throw ScaleError("gl_enumerate refused: |GL_" + std::to_string(n) + "(F_" +
                         std::to_string(f.q()) + ")| = " + decimal(order) +
                         " elements exceeds 2^22 (pass --force to override)",
                     order);

  MatrixGroup g;
  g.n = n;
  g.order = order;
  const auto total = static_cast<std::uint64_t>(space);
  g.elements.reserve(static_cast<std::size_t>(order));
  for (std::uint64_t code = 0; code < total; ++code) {
    MatFq m = MatFq::decode(f, n, code);
    if (mat_rank(m) == n) g.elements.push_back(m);
  }
  if (BigCount(g.elements.size()) != order)
    throw InternalError("gl_enumerate: element count disagrees with the order formula");
  g.inverses.reserve(g.elements.size());
  for (const MatFq& m : g.elements) g.inverses.push_back(inverse(m));
  return g;
}

UnitGroup unit_group(const Subalgebra& z, const Budget& budget) {
  const unsigned n = z.n();
  UnitGroup u;
  const std::uint64_t count = z.element_count(budget);
  for (std::uint64_t code = 0; code < count; ++code) {
    MatFq m = z.element_at(code);
    if (mat_rank(m) == n) u.elements.push_back(m);
  }
  u.order = u.elements.size();
  u.inverses.reserve(u.elements.size());
  for (const MatFq& m : u.elements) u.inverses.push_back(inverse(m));
  return u;
}

std::string OrbitPartition::serialize() const {
  std::string s = "points " + std::to_string(num_points) + " orbits " +
                  std::to_string(num_orbits()) + "\n";
  for (std::size_t c = 0; c < num_orbits(); ++c)
    s += "orbit " + std::to_string(c) + ": rep " +
         std::to_string(representative[c]) + " size " +
         std::to_string(orbit_size[c]) + "\n";
  return s;
}

}  // namespace simcount
