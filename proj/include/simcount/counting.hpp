#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "simcount/common.hpp"
#include "simcount/grp.hpp"
#include "simcount/linalg.hpp"

namespace simcount {

// Partitions of n in descending-lexicographic order, parts weakly decreasing.
std::vector<std::vector<unsigned>> partitions_of(unsigned n);

// Number of similarity classes in M_n(F_q): sum over partitions lambda of n
// of q^(largest part). Closed form, no enumeration.
BigCount classes_by_partition(unsigned n, unsigned q);

// Average fixed-point count of GL_n(F_q) conjugating k-tuples of matrices
// (commuting or not): sum over g of |centralizer(g)|^k, divided by the group
// order. The division is exact; InternalError otherwise.
BigCount burnside_count(unsigned n, const Fq& f, unsigned k,
                        const Budget& budget = {});

// An ordered k-tuple of n x n matrices, the point type for simultaneous
// conjugation.
struct MatTuple {
  std::vector<MatFq> mats;
  bool operator==(const MatTuple& o) const { return mats == o.mats; }
  void append_key(std::string& out) const;
  MatTuple conjugated(const MatFq& g, const MatFq& g_inv) const;
};

// Visits every commuting k-tuple over M_n(F_q), in lexicographic order of the
// member matrices' encodings. The walk extends a tuple only by elements of the
// running common centralizer, so nothing non-commuting is ever touched.
void for_each_commuting_tuple(unsigned n, const Fq& f, unsigned k,
                              const Budget& budget,
                              const std::function<void(const MatTuple&)>& visit);

// Number of commuting k-tuples, by summing centralizer sizes over the
// (k-1)-tuple tree; no tuple list is materialized.
BigCount brute_commuting_tuples(unsigned n, const Fq& f, unsigned k,
                                const Budget& budget = {});

// All commuting k-tuples as a list. Guarded by guard::kTupleList.
std::vector<MatTuple> commuting_tuples(unsigned n, const Fq& f, unsigned k,
                                       const Budget& budget = {});

// Simultaneous-similarity classes of commuting k-tuples, counted by explicit
// orbit partition under GL_n(F_q). The oracle against which the graph method
// is validated.
OrbitPartition brute_simclasses_partition(unsigned n, const Fq& f, unsigned k,
                                          const Budget& budget = {});
BigCount brute_simclasses_commuting(unsigned n, const Fq& f, unsigned k,
                                    const Budget& budget = {});

}  // namespace simcount
