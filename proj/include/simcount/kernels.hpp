#pragma once

#include <cstddef>

#include "simcount/field.hpp"

namespace simcount::kern {

// Elementwise row kernels over canonical F_q element bytes. These are the
// inner loops of Gaussian elimination and of subalgebra element
// materialization. The scalar implementations are the reference; vector
// variants must be byte-identical on every input and are selected once per
// field context at construction.
struct Ops {
  // y[i] = y[i] + a * x[i]
  void (*axpy)(const Fq& f, Elem* y, const Elem* x, Elem a, std::size_t len);
  // y[i] = a * y[i]
  void (*scale)(const Fq& f, Elem* y, Elem a, std::size_t len);
  const char* name;
};

// Reference implementation, table lookups only. Works for every field.
const Ops& scalar_ops();

// AVX2 variant, or null when the CPU or the field layout rules it out.
// Covered layouts: characteristic-2 fields with q <= 16 (addition is XOR on
// the canonical indices, multiplication is a 16-byte shuffle LUT) and prime
// fields with p <= 13 (shuffle LUT multiply, byte add, conditional subtract).
const Ops* avx2_ops(const Fq& f);

// Runtime choice for a field: the AVX2 variant when available, unless the
// environment variable SIMCOUNT_FORCE_SCALAR is set to a nonempty value.
const Ops& select_ops(const Fq& f);

bool cpu_has_avx2();

}  // namespace simcount::kern
