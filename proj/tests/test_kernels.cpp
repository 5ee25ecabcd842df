#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>
#include <vector>

#include "simcount/field.hpp"
#include "simcount/kernels.hpp"

using namespace simcount;
using namespace simcount::kern;

namespace {

// Lengths straddling the 32-byte vector width: empty, sub-vector, one lane
// boundary each side, and a long run with a ragged tail.
const std::size_t kLens[] = {0, 1, 5, 15, 16, 17, 31, 32, 33, 64, 100, 257};

std::vector<Elem> random_row(const Fq& f, std::size_t len, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
  std::vector<Elem> v(len);
  for (auto& x : v) x = Elem(d(rng));
  return v;
}

void naive_axpy(const Fq& f, Elem* y, const Elem* x, Elem a, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] = f.add(y[i], f.mul(a, x[i]));
}

void naive_scale(const Fq& f, Elem* y, Elem a, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] = f.mul(a, y[i]);
}

}  // namespace

TEST_CASE("scalar kernels match the field operations", "[kernels]") {
  std::mt19937 rng(7001);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u},
                      {7u, 1u}, {2u, 3u}, {3u, 2u}, {11u, 1u}, {13u, 1u},
                      {2u, 4u}, {251u, 1u}}) {
    Fq f = Fq::make(p, e);
    const Ops& ops = scalar_ops();
    for (std::size_t len : kLens) {
      std::vector<Elem> x = random_row(f, len, rng);
      std::vector<Elem> y0 = random_row(f, len, rng);
      for (unsigned a = 0; a < f.q(); ++a) {
        std::vector<Elem> y1 = y0, y2 = y0;
        ops.axpy(f, y1.data(), x.data(), Elem(a), len);
        naive_axpy(f, y2.data(), x.data(), Elem(a), len);
        REQUIRE(y1 == y2);
        y1 = y0;
        y2 = y0;
        ops.scale(f, y1.data(), Elem(a), len);
        naive_scale(f, y2.data(), Elem(a), len);
        REQUIRE(y1 == y2);
      }
    }
  }
}

TEST_CASE("avx2 availability follows the documented envelope", "[kernels]") {
  struct Case {
    unsigned p, e;
    bool eligible;  // layout-wise; CPU support gates on top
  };
  const Case cases[] = {
      {2, 1, true},  {2, 2, true},  {2, 3, true},  {2, 4, true},
      {3, 1, true},  {5, 1, true},  {7, 1, true},  {11, 1, true},
      {13, 1, true}, {3, 2, false}, {2, 5, false}, {17, 1, false},
      {5, 2, false}, {251, 1, false}};
  for (const Case& c : cases) {
    Fq f = Fq::make(c.p, c.e);
    const Ops* v = avx2_ops(f);
    if (!c.eligible || !cpu_has_avx2()) {
      CHECK(v == nullptr);
    } else {
      REQUIRE(v != nullptr);
      CHECK(std::string(v->name) == "avx2");
    }
  }
}

TEST_CASE("avx2 kernels are byte-identical to scalar", "[kernels]") {
  if (!cpu_has_avx2()) {
    SUCCEED("no AVX2 on this CPU, nothing to compare");
    return;
  }
  std::mt19937 rng(7002);
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u},
                      {3u, 1u}, {5u, 1u}, {7u, 1u}, {11u, 1u}, {13u, 1u}}) {
    Fq f = Fq::make(p, e);
    const Ops* v = avx2_ops(f);
    REQUIRE(v != nullptr);
    const Ops& s = scalar_ops();
    for (std::size_t len : kLens) {
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<Elem> x = random_row(f, len, rng);
        std::vector<Elem> y0 = random_row(f, len, rng);
        for (unsigned a = 0; a < f.q(); ++a) {
          std::vector<Elem> yv = y0, ys = y0;
          v->axpy(f, yv.data(), x.data(), Elem(a), len);
          s.axpy(f, ys.data(), x.data(), Elem(a), len);
          REQUIRE(yv == ys);
          yv = y0;
          ys = y0;
          v->scale(f, yv.data(), Elem(a), len);
          s.scale(f, ys.data(), Elem(a), len);
          REQUIRE(yv == ys);
        }
      }
    }
  }
}

TEST_CASE("kill switch forces the scalar backend", "[kernels]") {
  setenv("SIMCOUNT_FORCE_SCALAR", "1", 1);
  Fq forced = Fq::make(2, 1);
  CHECK(std::string(forced.ops_name()) == "scalar");
  CHECK(&select_ops(forced) == &scalar_ops());
  unsetenv("SIMCOUNT_FORCE_SCALAR");

  Fq plain = Fq::make(2, 1);
  if (cpu_has_avx2()) {
    CHECK(std::string(plain.ops_name()) == "avx2");
  } else {
    CHECK(std::string(plain.ops_name()) == "scalar");
  }
}
