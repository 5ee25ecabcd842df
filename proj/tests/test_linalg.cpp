#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "simcount/field.hpp"
#include "simcount/linalg.hpp"

using namespace simcount;

namespace {

MatFq naive_mul(const MatFq& a, const MatFq& b) {
  const Fq& f = a.field();
  const unsigned n = a.n();
  MatFq c(f, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Elem s = 0;
      for (unsigned t = 0; t < n; ++t)
        s = f.add(s, f.mul(a.at(i, t), b.at(t, j)));
      c.set(i, j, s);
    }
  return c;
}

MatFq random_mat(const Fq& f, unsigned n, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
  MatFq m(f, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m.set(i, j, Elem(d(rng)));
  return m;
}

MatFq random_invertible(const Fq& f, unsigned n, std::mt19937& rng) {
  for (;;) {
    MatFq m = random_mat(f, n, rng);
    if (mat_rank(m) == n) return m;
  }
}

// Elementary matrix with a single 1 at (i, j).
MatFq unit_mat(const Fq& f, unsigned n, unsigned i, unsigned j) {
  MatFq m(f, n);
  m.set(i, j, 1);
  return m;
}

bool commutes(const MatFq& a, const MatFq& b) {
  return mat_mul(a, b) == mat_mul(b, a);
}

}  // namespace

TEST_CASE("encode and decode are inverse bijections", "[linalg]") {
  Fq f2 = Fq::make(2, 1);
  for (std::uint64_t code = 0; code < 512; ++code) {
    MatFq m = MatFq::decode(f2, 3, code);
    CHECK(m.encode() == code);
  }
  // Position 0 is entry (0,0); position weights grow row-major.
  Fq f3 = Fq::make(3, 1);
  MatFq m1 = MatFq::decode(f3, 2, 1);
  CHECK(m1.at(0, 0) == 1);
  CHECK(m1.at(0, 1) == 0);
  MatFq m3 = MatFq::decode(f3, 2, 3);
  CHECK(m3.at(0, 0) == 0);
  CHECK(m3.at(0, 1) == 1);
  MatFq m9 = MatFq::decode(f3, 2, 9);
  CHECK(m9.at(1, 0) == 1);

  std::mt19937 rng(9001);
  Fq f4 = Fq::make(2, 2);
  std::uniform_int_distribution<std::uint64_t> d(0, (1ull << 32) - 1);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t code = d(rng);
    CHECK(MatFq::decode(f4, 4, code).encode() == code);
  }
  CHECK_THROWS_AS(MatFq::decode(f2, 2, 16), std::invalid_argument);
}

TEST_CASE("matrix product matches the schoolbook sum", "[linalg]") {
  std::mt19937 rng(9002);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {3u, 2u}}) {
    Fq f = Fq::make(p, e);
    for (unsigned n = 1; n <= 4; ++n) {
      for (int rep = 0; rep < 25; ++rep) {
        MatFq a = random_mat(f, n, rng);
        MatFq b = random_mat(f, n, rng);
        REQUIRE(mat_mul(a, b) == naive_mul(a, b));
        MatFq s = mat_add(a, b);
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < n; ++j)
            CHECK(s.at(i, j) == f.add(a.at(i, j), b.at(i, j)));
      }
      MatFq id = MatFq::identity(f, n);
      CHECK(id.is_identity());
      CHECK(MatFq(f, n).is_zero());
      MatFq r = random_mat(f, n, rng);
      CHECK(mat_mul(id, r) == r);
      CHECK(mat_mul(r, id) == r);
    }
  }
}

TEST_CASE("rank, inverse, and nullspace satisfy rank-nullity", "[linalg]") {
  Fq f2 = Fq::make(2, 1);
  CHECK(mat_rank(MatFq(f2, 2)) == 0);
  CHECK(mat_rank(MatFq::identity(f2, 2)) == 2);
  CHECK(mat_rank(unit_mat(f2, 2, 0, 1)) == 1);

  std::mt19937 rng(9003);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    Fq f = Fq::make(p, e);
    for (unsigned n = 1; n <= 4; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        MatFq a = random_mat(f, n, rng);
        const unsigned r = mat_rank(a);
        std::vector<Elem> rows(a.flat().begin(), a.flat().end());
        VecSpan ker = nullspace(f, rows, n, n);
        REQUIRE(r + ker.dim() == n);
        // Every kernel basis vector really is annihilated.
        for (unsigned v = 0; v < ker.dim(); ++v) {
          auto x = ker.row(v);
          for (unsigned i = 0; i < n; ++i) {
            Elem s = 0;
            for (unsigned j = 0; j < n; ++j)
              s = f.add(s, f.mul(a.at(i, j), x[j]));
            REQUIRE(s == 0);
          }
        }
        MatFq inv(f, n);
        const bool ok = try_inverse(a, &inv);
        REQUIRE(ok == (r == n));
        if (ok) {
          CHECK(mat_mul(a, inv).is_identity());
          CHECK(mat_mul(inv, a).is_identity());
        }
      }
    }
  }
  CHECK_THROWS_AS(inverse(unit_mat(f2, 2, 0, 1)), std::invalid_argument);
}

TEST_CASE("conjugation is an algebra map", "[linalg]") {
  std::mt19937 rng(9004);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    Fq f = Fq::make(p, e);
    for (unsigned n = 2; n <= 4; ++n) {
      MatFq g = random_invertible(f, n, rng);
      MatFq gi = inverse(g);
      MatFq a = random_mat(f, n, rng);
      MatFq b = random_mat(f, n, rng);
      MatFq id = MatFq::identity(f, n);
      CHECK(conjugate(id, a, id) == a);
      CHECK(mat_rank(conjugate(g, a, gi)) == mat_rank(a));
      CHECK(conjugate(g, mat_mul(a, b), gi) ==
            mat_mul(conjugate(g, a, gi), conjugate(g, b, gi)));
      CHECK(conjugate(g, mat_add(a, b), gi) ==
            mat_add(conjugate(g, a, gi), conjugate(g, b, gi)));
      CHECK(a.conjugated(g, gi) == conjugate(g, a, gi));
    }
  }
}

TEST_CASE("spans canonicalize independently of insertion order", "[linalg]") {
  std::mt19937 rng(9005);
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}}) {
    Fq f = Fq::make(p, e);
    const unsigned ambient = 6;
    std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<std::vector<Elem>> vecs;
      for (int i = 0; i < 5; ++i) {
        std::vector<Elem> v(ambient);
        for (auto& x : v) x = Elem(d(rng));
        vecs.push_back(v);
      }
      VecSpan s1(f, ambient);
      for (const auto& v : vecs) s1.insert(v);
      std::shuffle(vecs.begin(), vecs.end(), rng);
      VecSpan s2(f, ambient);
      for (const auto& v : vecs) s2.insert(v);
      REQUIRE(s1 == s2);
      std::string k1, k2;
      s1.append_key(k1);
      s2.append_key(k2);
      REQUIRE(k1 == k2);
      // Pivot columns come out strictly increasing.
      for (unsigned i = 1; i < s1.dim(); ++i)
        CHECK(s1.pivots()[i - 1] < s1.pivots()[i]);
      for (const auto& v : vecs) CHECK(s1.contains(v));
    }
  }

  Fq f2 = Fq::make(2, 1);
  VecSpan s(f2, 4);
  CHECK(s.insert(std::vector<Elem>{1, 0, 0, 0}));
  CHECK(s.insert(std::vector<Elem>{0, 1, 0, 0}));
  CHECK_FALSE(s.insert(std::vector<Elem>{1, 1, 0, 0}));
  CHECK(s.dim() == 2);
  CHECK(s.contains(std::vector<Elem>{1, 1, 0, 0}));
  CHECK_FALSE(s.contains(std::vector<Elem>{0, 0, 1, 0}));
  std::vector<Elem> member{1, 1, 0, 0};
  s.reduce_inplace(member.data());
  CHECK(std::all_of(member.begin(), member.end(),
                    [](Elem x) { return x == 0; }));
}

TEST_CASE("centralizer of one matrix, brute cross-check", "[linalg]") {
  Fq f2 = Fq::make(2, 1);
  MatFq n12 = unit_mat(f2, 2, 0, 1);
  const MatFq one[] = {n12};
  VecSpan z = commutator_nullspace(f2, 2, one);
  REQUIRE(z.dim() == 2);
  CHECK(z.contains(MatFq::identity(f2, 2).flat()));
  CHECK(z.contains(n12.flat()));
  CHECK_FALSE(z.contains(unit_mat(f2, 2, 0, 0).flat()));

  // Exhaustive: membership in the span is exactly the commuting relation.
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}}) {
    Fq f = Fq::make(p, e);
    std::mt19937 rng(9006);
    for (unsigned n = 2; n <= 3; ++n) {
      const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (unsigned i = 0; i < n * n; ++i) t *= f.q();
        return t;
      }();
      if (total > 100000) continue;
      for (int rep = 0; rep < 6; ++rep) {
        MatFq a = random_mat(f, n, rng);
        const MatFq mats[] = {a};
        VecSpan span = commutator_nullspace(f, n, mats);
        std::uint64_t hits = 0;
        for (std::uint64_t code = 0; code < total; ++code) {
          MatFq b = MatFq::decode(f, n, code);
          const bool in = span.contains(b.flat());
          REQUIRE(in == commutes(a, b));
          hits += in;
        }
        std::uint64_t expect = 1;
        for (unsigned i = 0; i < span.dim(); ++i) expect *= f.q();
        REQUIRE(hits == expect);
      }
    }
  }
}

TEST_CASE("common centralizer of a list", "[linalg]") {
  Fq f2 = Fq::make(2, 1);
  // Empty list: all of M_n.
  VecSpan all = commutator_nullspace(f2, 3, {});
  CHECK(all.dim() == 9);

  // {E12, E21} force scalars plus nothing else in M_2.
  const MatFq pair[] = {unit_mat(f2, 2, 0, 1), unit_mat(f2, 2, 1, 0)};
  VecSpan z = commutator_nullspace(f2, 2, pair);
  std::uint64_t hits = 0;
  for (std::uint64_t code = 0; code < 16; ++code) {
    MatFq b = MatFq::decode(f2, 2, code);
    const bool in = z.contains(b.flat());
    REQUIRE(in == (commutes(pair[0], b) && commutes(pair[1], b)));
    hits += in;
  }
  CHECK(hits == (std::uint64_t(1) << z.dim()));
  CHECK(z.dim() == 1);
}

TEST_CASE("pretty printer layout", "[linalg]") {
  Fq f2 = Fq::make(2, 1);
  CHECK(to_pretty(unit_mat(f2, 2, 0, 1)) == "[0 1]\n[0 0]");
}
