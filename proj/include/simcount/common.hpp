#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "simcount/bigint.hpp"

namespace simcount {

// Worker count and guard override, threaded through every heavy operation.
// Results are byte-identical for any worker count.
struct Budget {
  int workers = 1;
  bool force = false;  // bypass scale guards
};

// A computation refused because its cardinality exceeds the desk-scale guards.
// The offending cardinality is carried for diagnostics; --force bypasses.
class ScaleError : public std::runtime_error {
 public:
  ScaleError(const std::string& what, BigCount cardinality)
      : std::runtime_error(what), card_(std::move(cardinality)) {}
  const BigCount& cardinality() const { return card_; }

 private:
  BigCount card_;
};

// An internal consistency check failed (inexact division where exactness is
// guaranteed, an orbit map hitting a point outside the input set, ...).
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

namespace guard {
// Matrix-space scan hard refusal.
inline constexpr std::uint64_t kMatrixSpaceHard = std::uint64_t(1) << 40;
// Matrix-space scan practical limit (every element is visited).
inline constexpr std::uint64_t kMatrixSpaceScan = std::uint64_t(1) << 26;
// Materialized group elements (each ~80 bytes plus an inverse).
inline constexpr std::uint64_t kGroupElems = std::uint64_t(1) << 22;
// Subalgebra element enumerations (fingerprints, unit groups, branching).
inline constexpr std::uint64_t kAlgebraElems = std::uint64_t(1) << 24;
// Materialized tuple lists for brute-force orbit counting.
inline constexpr std::uint64_t kTupleList = std::uint64_t(1) << 22;
// Walk length: weights hold ~ k*log2(q)*dim bits, so huge k means huge ints.
inline constexpr std::uint64_t kWalkLength = std::uint64_t(1) << 20;
}  // namespace guard

}  // namespace simcount
