#include "simcount/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "simcount/kernels.hpp"

namespace simcount {

namespace {

#ifdef NDEBUG
constexpr bool kVerifyInternal = false;
#else
constexpr bool kVerifyInternal = true;
#endif

}  // namespace

Subalgebra Subalgebra::full(const Fq& f, unsigned n) {
  return from_span(n, commutator_nullspace(f, n, {}), false);
}

Subalgebra Subalgebra::from_span(unsigned n, VecSpan span, bool verify) {
  if (span.ambient() != n * n)
    throw std::invalid_argument("Subalgebra: span ambient must be n*n");
  Subalgebra z(n, std::move(span));
  if (verify) {
    const MatFq id = MatFq::identity(z.field(), n);
    if (!z.span_.contains(id.flat()))
      throw InternalError("Subalgebra: span does not contain the identity");
    for (unsigned i = 0; i < z.dim(); ++i) {
      const MatFq bi = z.basis_mat(i);
      for (unsigned j = 0; j < z.dim(); ++j) {
        const MatFq prod = mat_mul(bi, z.basis_mat(j));
        if (!z.span_.contains(prod.flat()))
          throw InternalError("Subalgebra: span not closed under products");
      }
    }
  }
  return z;
}

std::string Subalgebra::key() const {
  std::string s;
  span_.append_key(s);
  return s;
}

MatFq Subalgebra::basis_mat(unsigned r) const {
  MatFq m(field(), n_);
  auto row = span_.row(r);
  std::copy(row.begin(), row.end(), m.flat().begin());
  return m;
}

bool Subalgebra::contains(const MatFq& a) const { return span_.contains(a.flat()); }

MatFq Subalgebra::element_at(std::uint64_t code) const {
  const Fq& f = field();
  const unsigned q = f.q();
  MatFq m(f, n_);
  Elem* flat = m.flat().data();
  const auto& ops = f.ops();
  for (unsigned r = 0; r < dim(); ++r) {
    const Elem digit = static_cast<Elem>(code % q);
    code /= q;
    if (digit != 0) ops.axpy(f, flat, span_.row(r).data(), digit, span_.ambient());
  }
  if (code != 0)
    throw std::invalid_argument("Subalgebra::element_at: code out of range");
  return m;
}

std::uint64_t Subalgebra::element_count(const Budget& budget) const {
  const unsigned q = field().q();
  std::uint64_t count = 1;
  for (unsigned r = 0; r < dim(); ++r) {
    if (count > ~std::uint64_t{0} / q)
      throw ScaleError("subalgebra enumeration refused: q^dim = " +
                           decimal(big_pow(q, dim())) +
                           " does not even fit in 64 bits",
                       big_pow(q, dim()));
    count *= q;
  }
  if (count > guard::kAlgebraElems && !budget.force)
    throw ScaleError("subalgebra enumeration refused: q^dim = " +
                         std::to_string(count) + " elements exceeds 2^24" +
                         " (pass --force to override)",
                     BigCount(count));
  return count;
}

std::vector<MatFq> Subalgebra::elements(const Budget& budget) const {
  const std::uint64_t count = element_count(budget);
  std::vector<MatFq> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code)
    out.push_back(element_at(code));
  return out;
}

Subalgebra centralizer_in(const Subalgebra& z, const MatFq& a) {
  const Fq& f = z.field();
  const unsigned n = z.n();
  const std::size_t nn = std::size_t(n) * n;
  if (!z.contains(a))
    throw std::invalid_argument("centralizer_in: element not in the algebra");

  // Unknown t in F_q^dim with sum_m t_m (B_m a - a B_m) = 0; one equation per
  // flat position.
  const unsigned d = z.dim();
  std::vector<MatFq> basis;
  basis.reserve(d);
  for (unsigned m = 0; m < d; ++m) basis.push_back(z.basis_mat(m));

  std::vector<Elem> rows(nn * d, 0);
  for (unsigned m = 0; m < d; ++m) {
    const MatFq bm_a = mat_mul(basis[m], a);
    const MatFq a_bm = mat_mul(a, basis[m]);
    for (std::size_t pos = 0; pos < nn; ++pos)
      rows[pos * d + m] = f.sub(bm_a.flat()[pos], a_bm.flat()[pos]);
  }
  VecSpan t_space = nullspace(f, rows, nn, d);

  VecSpan span(f, static_cast<unsigned>(nn));
  const auto& ops = f.ops();
  std::vector<Elem> v(nn);
  for (unsigned r = 0; r < t_space.dim(); ++r) {
    std::fill(v.begin(), v.end(), 0);
    auto t = t_space.row(r);
    for (unsigned m = 0; m < d; ++m)
      if (t[m] != 0) ops.axpy(f, v.data(), basis[m].flat().data(), t[m], nn);
    span.insert(v);
  }
  return Subalgebra::from_span(n, std::move(span), kVerifyInternal);
}

Subalgebra center_of(const Subalgebra& z) {
  const Fq& f = z.field();
  const unsigned n = z.n();
  const std::size_t nn = std::size_t(n) * n;
  const unsigned d = z.dim();
  std::vector<MatFq> basis;
  basis.reserve(d);
  for (unsigned m = 0; m < d; ++m) basis.push_back(z.basis_mat(m));

  // t such that sum_m t_m B_m commutes with every basis element.
  std::vector<Elem> rows(std::size_t(d) * nn * d, 0);
  for (unsigned j = 0; j < d; ++j)
    for (unsigned m = 0; m < d; ++m) {
      const MatFq bm_bj = mat_mul(basis[m], basis[j]);
      const MatFq bj_bm = mat_mul(basis[j], basis[m]);
      for (std::size_t pos = 0; pos < nn; ++pos)
        rows[(std::size_t(j) * nn + pos) * d + m] =
            f.sub(bm_bj.flat()[pos], bj_bm.flat()[pos]);
    }
  VecSpan t_space = nullspace(f, rows, std::size_t(d) * nn, d);

  VecSpan span(f, static_cast<unsigned>(nn));
  const auto& ops = f.ops();
  std::vector<Elem> v(nn);
  for (unsigned r = 0; r < t_space.dim(); ++r) {
    std::fill(v.begin(), v.end(), 0);
    auto t = t_space.row(r);
    for (unsigned m = 0; m < d; ++m)
      if (t[m] != 0) ops.axpy(f, v.data(), basis[m].flat().data(), t[m], nn);
    span.insert(v);
  }
  return Subalgebra::from_span(n, std::move(span), kVerifyInternal);
}

bool is_commutative(const Subalgebra& z) {
  const unsigned d = z.dim();
  std::vector<MatFq> basis;
  basis.reserve(d);
  for (unsigned m = 0; m < d; ++m) basis.push_back(z.basis_mat(m));
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j)
      if (!(mat_mul(basis[i], basis[j]) == mat_mul(basis[j], basis[i])))
        return false;
  return true;
}

VecSpan span_closure_product(const VecSpan& s) {
  const Fq& f = s.field();
  const auto ambient = s.ambient();
  const auto n = static_cast<unsigned>(
      [&] {
        unsigned r = 1;
        while (r * r < ambient) ++r;
        if (r * r != ambient)
          throw std::invalid_argument(
              "span_closure_product: ambient is not a square");
        return r;
      }());

  VecSpan c = s;
  c.insert(MatFq::identity(f, n).flat());
  for (;;) {
    const unsigned before = c.dim();
    std::vector<MatFq> basis;
    basis.reserve(before);
    for (unsigned r = 0; r < before; ++r) {
      MatFq m(f, n);
      auto row = c.row(r);
      std::copy(row.begin(), row.end(), m.flat().begin());
      basis.push_back(m);
    }
    for (unsigned i = 0; i < before; ++i)
      for (unsigned j = 0; j < before; ++j)
        c.insert(mat_mul(basis[i], basis[j]).flat());
    if (c.dim() == before) return c;
  }
}

unsigned max_commutative_dim(unsigned n) { return n * n / 4 + 1; }

unsigned minpoly_degree(const MatFq& a) {
  const Fq& f = a.field();
  const unsigned n = a.n();
  VecSpan powers(f, n * n);
  powers.insert(MatFq::identity(f, n).flat());
  MatFq p = a;
  for (unsigned m = 1; m <= n; ++m) {
    if (!powers.insert(p.flat())) return m;
    p = mat_mul(p, a);
  }
  throw InternalError("minpoly_degree: no relation up to degree n");
}

std::string Fingerprint::to_string() const {
  std::string s = "dim=" + std::to_string(dim) +
                  " center=" + std::to_string(center_dim) +
                  " units=" + std::to_string(unit_count) +
                  " idem=" + std::to_string(idempotent_count) + " minpoly=[";
  bool first = true;
  for (std::size_t d = 1; d < minpoly_degree_counts.size(); ++d) {
    if (minpoly_degree_counts[d] == 0) continue;
    if (!first) s += ",";
    s += std::to_string(d) + ":" + std::to_string(minpoly_degree_counts[d]);
    first = false;
  }
  return s + "]";
}

Fingerprint fingerprint_of(const Subalgebra& z, const Budget& budget) {
  const unsigned n = z.n();
  Fingerprint fp;
  fp.dim = z.dim();
  fp.center_dim = center_of(z).dim();
  fp.minpoly_degree_counts.assign(n + 1, 0);
  const std::uint64_t count = z.element_count(budget);
  for (std::uint64_t code = 0; code < count; ++code) {
    const MatFq el = z.element_at(code);
    if (mat_rank(el) == n) ++fp.unit_count;
    if (mat_mul(el, el) == el) ++fp.idempotent_count;
    ++fp.minpoly_degree_counts[minpoly_degree(el)];
  }
  return fp;
}

VecSpan conjugate_span(const Subalgebra& z, const MatFq& g, const MatFq& g_inv) {
  VecSpan out(z.field(), z.span().ambient());
  for (unsigned r = 0; r < z.dim(); ++r)
    out.insert(conjugate(g, z.basis_mat(r), g_inv).flat());
  return out;
}

std::optional<MatFq> find_conjugator(const Subalgebra& a, const Subalgebra& b,
                                     GroupView group) {
  if (a.n() != b.n() || a.dim() != b.dim()) return std::nullopt;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (conjugate_span(a, group.elements[i], group.inverses[i]) == b.span())
      return group.elements[i];
  }
  return std::nullopt;
}

Classification conjugacy_classify(const std::vector<Subalgebra>& algs,
                                  GroupView group, const Budget& budget) {
  Classification cls;
  cls.class_of.assign(algs.size(), 0);
  std::vector<Fingerprint> rep_fps;
  std::unordered_map<std::string, Fingerprint> fp_cache;

  auto fp_of = [&](const Subalgebra& z) -> const Fingerprint& {
    auto [it, fresh] = fp_cache.try_emplace(z.key());
    if (fresh) it->second = fingerprint_of(z, budget);
    return it->second;
  };

  for (std::size_t i = 0; i < algs.size(); ++i) {
    const Fingerprint& fp = fp_of(algs[i]);
    bool placed = false;
    for (std::size_t c = 0; c < cls.reps.size() && !placed; ++c) {
      if (!(rep_fps[c] == fp)) continue;
      const Subalgebra& rep = algs[cls.reps[c]];
      if (rep.span() == algs[i].span() ||
          find_conjugator(rep, algs[i], group).has_value()) {
        cls.class_of[i] = static_cast<std::uint32_t>(c);
        placed = true;
      }
    }
    if (!placed) {
      cls.class_of[i] = static_cast<std::uint32_t>(cls.reps.size());
      cls.reps.push_back(static_cast<std::uint32_t>(i));
      rep_fps.push_back(fp);
    }
  }
  return cls;
}

}  // namespace simcount
