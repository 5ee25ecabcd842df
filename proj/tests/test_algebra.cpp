#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "simcount/algebra.hpp"
#include "simcount/field.hpp"
#include "simcount/grp.hpp"
#include "simcount/linalg.hpp"

using namespace simcount;

namespace {

MatFq unit_mat(const Fq& f, unsigned n, unsigned i, unsigned j) {
  MatFq m(f, n);
  m.set(i, j, 1);
  return m;
}

MatFq from_row(const Fq& f, unsigned n, std::span<const Elem> row) {
  MatFq m(f, n);
  for (unsigned i = 0; i < n * n; ++i) m.flat()[i] = row[i];
  return m;
}

Subalgebra span_of(const Fq& f, unsigned n, const std::vector<MatFq>& gens,
                   bool with_identity = true) {
  VecSpan s(f, n * n);
  if (with_identity) s.insert(MatFq::identity(f, n).flat());
  for (const MatFq& g : gens) s.insert(g.flat());
  return Subalgebra::from_span(n, std::move(s));
}

}  // namespace

TEST_CASE("full matrix algebra basics", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  Subalgebra m2 = Subalgebra::full(f2, 2);
  CHECK(m2.dim() == 4);
  CHECK(m2.element_count() == 16);
  CHECK_FALSE(is_commutative(m2));
  CHECK(center_of(m2).dim() == 1);
  CHECK(center_of(m2).contains(MatFq::identity(f2, 2)));

  // For the full algebra the RREF basis is the standard basis, so algebra
  // coordinates coincide with the matrix encoding.
  for (std::uint64_t code = 0; code < 16; ++code)
    CHECK(m2.element_at(code).encode() == code);

  Fq f3 = Fq::make(3, 1);
  CHECK(center_of(Subalgebra::full(f3, 3)).dim() == 1);
  CHECK(is_commutative(Subalgebra::full(f3, 1)));
}

TEST_CASE("from_span verifies closure and identity", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  // (E12 + E23)^2 = E13 falls outside the span: not closed.
  {
    VecSpan s(f2, 9);
    s.insert(MatFq::identity(f2, 3).flat());
    MatFq a = mat_add(unit_mat(f2, 3, 0, 1), unit_mat(f2, 3, 1, 2));
    s.insert(a.flat());
    CHECK_THROWS_AS(Subalgebra::from_span(3, std::move(s)), InternalError);
  }
  // No identity.
  {
    VecSpan s(f2, 4);
    s.insert(unit_mat(f2, 2, 0, 1).flat());
    CHECK_THROWS_AS(Subalgebra::from_span(2, std::move(s)), InternalError);
  }
}

TEST_CASE("centralizer inside an algebra, exhaustive cross-check", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  Subalgebra m2 = Subalgebra::full(f2, 2);
  for (std::uint64_t code = 0; code < 16; ++code) {
    MatFq a = MatFq::decode(f2, 2, code);
    Subalgebra z = centralizer_in(m2, a);
    std::uint64_t hits = 0;
    for (std::uint64_t bc = 0; bc < 16; ++bc) {
      MatFq b = MatFq::decode(f2, 2, bc);
      const bool in = z.contains(b);
      REQUIRE(in == (mat_mul(a, b) == mat_mul(b, a)));
      hits += in;
    }
    REQUIRE(hits == (std::uint64_t(1) << z.dim()));
  }

  // Relative centralizer: inside Z(E12) everything commutes.
  MatFq n12 = unit_mat(f2, 2, 0, 1);
  Subalgebra z12 = centralizer_in(m2, n12);
  REQUIRE(z12.dim() == 2);
  MatFq in_z = mat_add(MatFq::identity(f2, 2), n12);
  CHECK(centralizer_in(z12, in_z).dim() == 2);
  CHECK(centralizer_in(z12, in_z).span() == z12.span());

  // The element must lie in the ambient algebra.
  CHECK_THROWS_AS(centralizer_in(z12, unit_mat(f2, 2, 1, 0)),
                  std::invalid_argument);
}

TEST_CASE("center and commutativity of hand-built algebras", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  // Upper triangular 2x2: dim 3, center = scalars, not commutative.
  Subalgebra borel = span_of(
      f2, 2, {unit_mat(f2, 2, 0, 0), unit_mat(f2, 2, 0, 1)});
  CHECK(borel.dim() == 3);
  CHECK_FALSE(is_commutative(borel));
  CHECK(center_of(borel).dim() == 1);

  // Diagonal: commutative, equal to its own center.
  Subalgebra diag = span_of(f2, 2, {unit_mat(f2, 2, 0, 0)});
  CHECK(diag.dim() == 2);
  CHECK(is_commutative(diag));
  CHECK(center_of(diag).dim() == 2);
}

TEST_CASE("product closure of a span", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  // J = E12 + E23 generates {I, J, J^2 = E13}.
  VecSpan s(f2, 9);
  MatFq j = mat_add(unit_mat(f2, 3, 0, 1), unit_mat(f2, 3, 1, 2));
  s.insert(j.flat());
  VecSpan closed = span_closure_product(s);
  CHECK(closed.dim() == 3);
  CHECK(closed.contains(unit_mat(f2, 3, 0, 2).flat()));
  CHECK(closed.contains(MatFq::identity(f2, 3).flat()));
  // Idempotent: closing again changes nothing.
  CHECK(span_closure_product(closed) == closed);
}

TEST_CASE("minimal polynomial degrees", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  CHECK(minpoly_degree(MatFq(f2, 2)) == 1);
  CHECK(minpoly_degree(MatFq::identity(f2, 3)) == 1);
  CHECK(minpoly_degree(unit_mat(f2, 2, 0, 1)) == 2);
  MatFq d01(f2, 2);
  d01.set(1, 1, 1);
  CHECK(minpoly_degree(d01) == 2);
  MatFq j3 = mat_add(unit_mat(f2, 3, 0, 1), unit_mat(f2, 3, 1, 2));
  CHECK(minpoly_degree(j3) == 3);
  // Companion of x^2 + x + 1.
  MatFq c(f2, 2);
  c.set(0, 1, 1);
  c.set(1, 0, 1);
  c.set(1, 1, 1);
  CHECK(minpoly_degree(c) == 2);
}

TEST_CASE("largest commutative dimension", "[algebra]") {
  const unsigned expect[] = {0, 1, 2, 3, 5, 7, 10, 13, 17};
  for (unsigned n = 1; n <= 8; ++n) CHECK(max_commutative_dim(n) == expect[n]);
}

TEST_CASE("fingerprints separate the dimension-2 algebra types", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  Subalgebra m2 = Subalgebra::full(f2, 2);
  Fingerprint fp = fingerprint_of(m2);
  CHECK(fp.dim == 4);
  CHECK(fp.center_dim == 1);
  CHECK(fp.unit_count == 6);
  CHECK(fp.idempotent_count == 8);
  REQUIRE(fp.minpoly_degree_counts.size() == 3);
  CHECK(fp.minpoly_degree_counts[1] == 2);
  CHECK(fp.minpoly_degree_counts[2] == 14);

  MatFq c(f2, 2);
  c.set(0, 1, 1);
  c.set(1, 0, 1);
  c.set(1, 1, 1);
  Subalgebra nilp = span_of(f2, 2, {unit_mat(f2, 2, 0, 1)});
  Subalgebra diag = span_of(f2, 2, {unit_mat(f2, 2, 0, 0)});
  Subalgebra quad = span_of(f2, 2, {c});
  Fingerprint fn = fingerprint_of(nilp);
  Fingerprint fd = fingerprint_of(diag);
  Fingerprint fq = fingerprint_of(quad);
  // F_2[N], F_2 x F_2, F_4: unit counts 2, 1, 3.
  CHECK(fn.unit_count == 2);
  CHECK(fd.unit_count == 1);
  CHECK(fq.unit_count == 3);
  CHECK(fn.idempotent_count == 2);
  CHECK(fd.idempotent_count == 4);
  CHECK(fq.idempotent_count == 2);
  CHECK_FALSE(fn == fd);
  CHECK_FALSE(fn == fq);
  CHECK_FALSE(fd == fq);

  // Conjugate algebras fingerprint identically.
  Subalgebra nilp_t = span_of(f2, 2, {unit_mat(f2, 2, 1, 0)});
  CHECK(fingerprint_of(nilp_t) == fn);

  Fq f2b = Fq::make(2, 1);
  Fingerprint fm3 = fingerprint_of(Subalgebra::full(f2b, 3));
  CHECK(fm3.dim == 9);
  CHECK(fm3.unit_count == 168);
  CHECK(fm3.idempotent_count == 58);
  CHECK(fm3.minpoly_degree_counts[1] == 2);
  std::uint64_t total = 0;
  for (auto v : fm3.minpoly_degree_counts) total += v;
  CHECK(total == 512);
}

TEST_CASE("conjugators and classification", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  MatrixGroup gl = gl_enumerate(2, f2);
  Subalgebra m2 = Subalgebra::full(f2, 2);
  MatFq c(f2, 2);
  c.set(0, 1, 1);
  c.set(1, 0, 1);
  c.set(1, 1, 1);
  Subalgebra nilp_a = span_of(f2, 2, {unit_mat(f2, 2, 0, 1)});
  Subalgebra nilp_b = span_of(f2, 2, {unit_mat(f2, 2, 1, 0)});
  Subalgebra diag = span_of(f2, 2, {unit_mat(f2, 2, 0, 0)});
  Subalgebra quad = span_of(f2, 2, {c});

  auto g = find_conjugator(nilp_a, nilp_b, gl.view());
  REQUIRE(g.has_value());
  CHECK(conjugate_span(nilp_a, *g, inverse(*g)) == nilp_b.span());
  CHECK_FALSE(find_conjugator(nilp_a, diag, gl.view()).has_value());
  CHECK_FALSE(find_conjugator(diag, quad, gl.view()).has_value());

  std::vector<Subalgebra> algs{m2, diag, nilp_a, nilp_b, quad, diag};
  Classification cls = conjugacy_classify(algs, gl.view());
  CHECK(cls.class_of == std::vector<std::uint32_t>{0, 1, 2, 2, 3, 1});
  CHECK(cls.reps == std::vector<std::uint32_t>{0, 1, 2, 4});
}

TEST_CASE("element counting guards", "[algebra]") {
  Fq f3 = Fq::make(3, 1);
  Subalgebra m4 = Subalgebra::full(f3, 4);
  // 3^16 = 43046721 exceeds the enumeration guard but not 64 bits.
  CHECK_THROWS_AS(m4.element_count(), ScaleError);
  CHECK(m4.element_count(Budget{1, true}) == 43046721ull);
  // 3^64 does not fit in 64 bits; force cannot help.
  Subalgebra m8 = Subalgebra::full(f3, 8);
  CHECK_THROWS_AS(m8.element_count(Budget{1, true}), ScaleError);
}

TEST_CASE("subspace census of M_2(F_2)", "[algebra]") {
  Fq f2 = Fq::make(2, 1);
  // All 15 nonzero flat vectors; every subspace has a spanning set of
  // size <= 4, so subsets up to size 4 reach everything.
  std::vector<std::vector<Elem>> vecs;
  for (unsigned code = 1; code < 16; ++code) {
    std::vector<Elem> v(4);
    for (unsigned b = 0; b < 4; ++b) v[b] = Elem((code >> b) & 1);
    vecs.push_back(v);
  }
  std::map<std::string, VecSpan> seen;
  std::vector<unsigned> subset;
  auto visit = [&](const std::vector<unsigned>& idx) {
    VecSpan s(f2, 4);
    for (unsigned i : idx) s.insert(vecs[i]);
    std::string key;
    s.append_key(key);
    seen.emplace(key, s);
  };
  visit({});
  for (unsigned a = 0; a < 15; ++a) {
    visit({a});
    for (unsigned b = a + 1; b < 15; ++b) {
      visit({a, b});
      for (unsigned c = b + 1; c < 15; ++c) {
        visit({a, b, c});
        for (unsigned d = c + 1; d < 15; ++d) visit({a, b, c, d});
      }
    }
  }
  // Gaussian binomials for F_2^4: 1 + 15 + 35 + 15 + 1.
  REQUIRE(seen.size() == 67);

  MatFq id = MatFq::identity(f2, 2);
  unsigned unital_closed = 0, commutative = 0;
  unsigned max_proper = 0, max_comm = 0;
  for (const auto& [key, s] : seen) {
    if (!s.contains(id.flat())) continue;
    std::vector<MatFq> basis;
    for (unsigned r = 0; r < s.dim(); ++r)
      basis.push_back(from_row(f2, 2, s.row(r)));
    bool closed = true, comm = true;
    for (const MatFq& a : basis)
      for (const MatFq& b : basis) {
        if (!s.contains(mat_mul(a, b).flat())) closed = false;
        if (!(mat_mul(a, b) == mat_mul(b, a))) comm = false;
      }
    if (!closed) continue;
    ++unital_closed;
    if (s.dim() < 4) max_proper = std::max(max_proper, s.dim());
    if (comm) {
      ++commutative;
      max_comm = std::max(max_comm, s.dim());
    }
  }
  // 1 scalar + 7 of dimension 2 + 3 Borel + M_2 itself.
  CHECK(unital_closed == 12);
  CHECK(commutative == 8);
  CHECK(max_proper == 3);
  CHECK(max_comm == max_commutative_dim(2));
}
