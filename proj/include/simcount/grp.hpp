#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "simcount/algebra.hpp"
#include "simcount/common.hpp"
#include "simcount/linalg.hpp"
#include "simcount/parallel.hpp"

namespace simcount {

// GL_n(F_q), fully materialized with elementwise inverses.
struct MatrixGroup {
  unsigned n = 0;
  std::vector<MatFq> elements;
  std::vector<MatFq> inverses;
  BigCount order;
  GroupView view() const { return {elements, inverses}; }
};

BigCount gl_order_formula(unsigned n, unsigned q);

// Scans all q^(n^2) matrices and keeps the invertible ones, in enumeration
// order. Guards: q^(n^2) <= 2^40 hard, q^(n^2) <= 2^26 for the scan, group
// order <= 2^22 for materialization. budget.force bypasses; the error names
// the offending cardinality.
MatrixGroup gl_enumerate(unsigned n, const Fq& f, const Budget& budget = {});

// Unit group of a subalgebra (elements of rank n), inverses included. The
// inverse of a unit lies in the algebra, but is computed as a plain matrix
// inverse. order fits in 64 bits because element_count does.
struct UnitGroup {
  std::vector<MatFq> elements;
  std::vector<MatFq> inverses;
  std::uint64_t order = 0;
  GroupView view() const { return {elements, inverses}; }
};

UnitGroup unit_group(const Subalgebra& z, const Budget& budget = {});

// Orbits of a conjugation action on an explicit point list. representative[c]
// is the least input index in class c; classes are numbered by discovery
// order, scanning points in input order. Point lookups go through exact keys,
// so the input must list distinct points and be closed under the action
// (InternalError otherwise).
struct OrbitPartition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> representative;
  std::vector<std::uint64_t> orbit_size;
  std::size_t num_points = 0;
  std::size_t num_orbits() const { return representative.size(); }
  // Canonical text form, for determinism comparisons and snapshots.
  std::string serialize() const;
};

template <class Point>
OrbitPartition orbit_partition(const std::vector<Point>& points, GroupView g,
                               const Budget& budget = {}) {
  constexpr std::uint32_t kUnset = 0xffffffffu;
  const std::size_t npts = points.size();
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(npts * 2);
  {
    std::string key;
    for (std::size_t i = 0; i < npts; ++i) {
      key.clear();
      points[i].append_key(key);
      auto [it, fresh] = index.emplace(key, static_cast<std::uint32_t>(i));
      if (!fresh) throw InternalError("orbit_partition: duplicate point in input");
    }
  }

  OrbitPartition part;
  part.num_points = npts;
  part.class_of.assign(npts, kUnset);

  const std::size_t ng = g.size();
  std::vector<std::vector<std::uint32_t>> chunk_hits;
  for (std::size_t seed = 0; seed < npts; ++seed) {
    if (part.class_of[seed] != kUnset) continue;
    const auto cid = static_cast<std::uint32_t>(part.representative.size());

    // Map the whole group over the seed. Each range collects hit indices;
    // membership marking is order-insensitive, so chunking cannot show.
    chunk_hits.assign(parallel_range_count(ng, budget.workers), {});
    parallel_ranges(ng, budget.workers,
                    [&](std::size_t r, std::size_t b, std::size_t e) {
                      auto& hits = chunk_hits[r];
                      hits.reserve(e - b);
                      std::string key;
                      for (std::size_t gi = b; gi < e; ++gi) {
                        Point moved =
                            points[seed].conjugated(g.elements[gi], g.inverses[gi]);
                        key.clear();
                        moved.append_key(key);
                        auto it = index.find(key);
                        if (it == index.end())
                          throw InternalError(
                              "orbit_partition: input not closed under the action");
                        hits.push_back(it->second);
                      }
                    });

    std::uint64_t size = 0;
    for (const auto& hits : chunk_hits)
      for (std::uint32_t idx : hits)
        if (part.class_of[idx] == kUnset) {
          part.class_of[idx] = cid;
          ++size;
        }
    part.representative.push_back(static_cast<std::uint32_t>(seed));
    part.orbit_size.push_back(size);
  }
  return part;
}

}  // namespace simcount
