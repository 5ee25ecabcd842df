#include "simcount/kernels.hpp"

namespace simcount::kern {
namespace {

void axpy_scalar(const Fq& f, Elem* y, const Elem* x, Elem a, std::size_t len) {
  const Elem* mul_a = f.mul_row(a);
  const Elem* add = f.add_table();
  const std::size_t q = f.q();
  for (std::size_t i = 0; i < len; ++i)
    y[i] = add[std::size_t(y[i]) * q + mul_a[x[i]]];
}

void scale_scalar(const Fq& f, Elem* y, Elem a, std::size_t len) {
  const Elem* mul_a = f.mul_row(a);
  for (std::size_t i = 0; i < len; ++i) y[i] = mul_a[y[i]];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{axpy_scalar, scale_scalar, "scalar"};
  return ops;
}

}  // namespace simcount::kern
