#include "simcount/kernels.hpp"

#include <cstdlib>

namespace simcount::kern {

const Ops& select_ops(const Fq& f) {
  const char* force = std::getenv("SIMCOUNT_FORCE_SCALAR");
  if (force != nullptr && force[0] != '\0') return scalar_ops();
  if (const Ops* v = avx2_ops(f)) return *v;
  return scalar_ops();
}

}  // namespace simcount::kern
