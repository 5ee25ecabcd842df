#include "simcount/counting.hpp"

#include <algorithm>

#include "simcount/algebra.hpp"

namespace simcount {

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  // Descending-lexicographic: extend with parts no larger than the last.
  auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigCount classes_by_partition(unsigned n, unsigned q) {
  BigCount total = 0;
  for (const auto& lambda : partitions_of(n)) total += big_pow(q, lambda[0]);
  return total;
}

BigCount burnside_count(unsigned n, const Fq& f, unsigned k,
                        const Budget& budget) {
  MatrixGroup g = gl_enumerate(n, f, budget);
  OrbitPartition classes = orbit_partition(g.elements, g.view(), budget);
  // Fixed tuples of the conjugation by g are tuples over its centralizer:
  // |Fix(g)| = q^(k * dim Z(g)), constant on conjugacy classes.
  BigCount total = 0;
  for (std::size_t c = 0; c < classes.num_orbits(); ++c) {
    const MatFq& rep = g.elements[classes.representative[c]];
    const MatFq reps[] = {rep};
    const unsigned d = commutator_nullspace(f, n, reps).dim();
    total += BigCount(classes.orbit_size[c]) *
             big_pow(f.q(), std::uint64_t(k) * d);
  }
  if (total % g.order != 0)
    throw InternalError("burnside_count: fixed-point sum not divisible by the group order");
  return total / g.order;
}

void MatTuple::append_key(std::string& out) const {
  out.push_back(static_cast<char>(mats.size()));
  for (const MatFq& m : mats) m.append_key(out);
}

MatTuple MatTuple::conjugated(const MatFq& g, const MatFq& g_inv) const {
  MatTuple t;
  t.mats.reserve(mats.size());
  for (const MatFq& m : mats) t.mats.push_back(conjugate(g, m, g_inv));
  return t;
}

namespace {

// Fuel for the depth-first walks below: every materialized tree node burns
// one unit, so runaway enumerations refuse deterministically instead of
// grinding. The tree size is not known up front; the guard names the limit.
struct WalkFuel {
  std::uint64_t used = 0;
  bool force = false;
  void burn() {
    if (++used > guard::kTupleList && !force)
      throw ScaleError(
          "commuting-tuple walk exceeded 2^22 nodes (pass --force to override)",
          BigCount(guard::kTupleList));
  }
};

// Depth-first walk of the commuting-tuple tree. Every node at depth j is a
// commuting j-tuple together with its common centralizer; children extend by
// that centralizer's elements in coordinate order, which is the encoding
// order of the matrices themselves at the top level. The last level skips the
// child centralizers, which no visitor needs.
template <class Visit>
void walk_tuples(const Subalgebra& z, MatTuple& acc, unsigned k,
                 const Budget& budget, WalkFuel& fuel, const Visit& visit) {
  if (acc.mats.size() == k) {
    visit(const_cast<const MatTuple&>(acc));
    return;
  }
  const std::uint64_t count = z.element_count(budget);
  const bool leaf = acc.mats.size() + 1 == k;
  for (std::uint64_t code = 0; code < count; ++code) {
    fuel.burn();
    MatFq el = z.element_at(code);
    if (leaf) {
      acc.mats.push_back(std::move(el));
      visit(const_cast<const MatTuple&>(acc));
    } else {
      Subalgebra next = centralizer_in(z, el);
      acc.mats.push_back(std::move(el));
      walk_tuples(next, acc, k, budget, fuel, visit);
    }
    acc.mats.pop_back();
  }
}

// Same walk cut one level short: visits (k-1)-tuples with their centralizers,
// whose sizes sum to the k-tuple count without materializing the last level.
template <class Visit>
void walk_prefixes(const Subalgebra& z, MatTuple& acc, unsigned k,
                   const Budget& budget, WalkFuel& fuel, const Visit& visit) {
  if (acc.mats.size() + 1 == k) {
    visit(const_cast<const MatTuple&>(acc), z);
    return;
  }
  const std::uint64_t count = z.element_count(budget);
  for (std::uint64_t code = 0; code < count; ++code) {
    fuel.burn();
    MatFq el = z.element_at(code);
    Subalgebra next = centralizer_in(z, el);
    acc.mats.push_back(std::move(el));
    walk_prefixes(next, acc, k, budget, fuel, visit);
    acc.mats.pop_back();
  }
}

}  // namespace

void for_each_commuting_tuple(unsigned n, const Fq& f, unsigned k,
                              const Budget& budget,
                              const std::function<void(const MatTuple&)>& visit) {
  MatTuple acc;
  WalkFuel fuel{0, budget.force};
  walk_tuples(Subalgebra::full(f, n), acc, k, budget, fuel,
              [&](const MatTuple& t) { visit(t); });
}

BigCount brute_commuting_tuples(unsigned n, const Fq& f, unsigned k,
                                const Budget& budget) {
  if (k == 0) return 1;
  BigCount total = 0;
  MatTuple acc;
  WalkFuel fuel{0, budget.force};
  walk_prefixes(Subalgebra::full(f, n), acc, k, budget, fuel,
                [&](const MatTuple&, const Subalgebra& z) {
                  total += big_pow(f.q(), z.dim());
                });
  return total;
}

std::vector<MatTuple> commuting_tuples(unsigned n, const Fq& f, unsigned k,
                                       const Budget& budget) {
  const BigCount count = brute_commuting_tuples(n, f, k, budget);
  if (count > BigCount(guard::kTupleList) && !budget.force)
    throw ScaleError("commuting_tuples refused: " + decimal(count) +
                         " tuples exceeds 2^22 (pass --force to override)",
                     count);
  std::vector<MatTuple> out;
  out.reserve(static_cast<std::size_t>(count));
  MatTuple acc;
  WalkFuel fuel{0, budget.force};
  walk_tuples(Subalgebra::full(f, n), acc, k, budget, fuel,
              [&](const MatTuple& t) { out.push_back(t); });
  return out;
}

OrbitPartition brute_simclasses_partition(unsigned n, const Fq& f, unsigned k,
                                          const Budget& budget) {
  MatrixGroup g = gl_enumerate(n, f, budget);
  std::vector<MatTuple> tuples = commuting_tuples(n, f, k, budget);
  return orbit_partition(tuples, g.view(), budget);
}

BigCount brute_simclasses_commuting(unsigned n, const Fq& f, unsigned k,
                                    const Budget& budget) {
  return BigCount(brute_simclasses_partition(n, f, k, budget).num_orbits());
}

}  // namespace simcount
