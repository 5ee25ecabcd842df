#include "simcount/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "simcount/common.hpp"
#include "simcount/kernels.hpp"

namespace simcount {

MatFq::MatFq(const Fq& f, unsigned n) : f_(&f), n_(static_cast<std::uint8_t>(n)) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("MatFq: n must be in [1, " +
                                std::to_string(kMaxN) + "]");
}

MatFq MatFq::identity(const Fq& f, unsigned n) {
  MatFq m(f, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool MatFq::operator==(const MatFq& o) const {
  if (n_ != o.n_ || f_->q() != o.f_->q()) return false;
  return std::equal(a_.begin(), a_.begin() + std::size_t(n_) * n_, o.a_.begin());
}

bool MatFq::is_zero() const {
  return std::all_of(a_.begin(), a_.begin() + std::size_t(n_) * n_,
                     [](Elem v) { return v == 0; });
}

bool MatFq::is_identity() const { return *this == identity(*f_, n_); }

std::uint64_t MatFq::encode() const {
  const unsigned q = f_->q();
  unsigned __int128 v = 0;
  for (std::size_t pos = std::size_t(n_) * n_; pos-- > 0;) {
    v = v * q + a_[pos];
    if (v > ~std::uint64_t{0})
      throw std::invalid_argument("MatFq::encode: q^(n^2) exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

MatFq MatFq::decode(const Fq& f, unsigned n, std::uint64_t code) {
  MatFq m(f, n);
  const unsigned q = f.q();
  for (std::size_t pos = 0; pos < std::size_t(n) * n; ++pos) {
    m.a_[pos] = static_cast<Elem>(code % q);
    code /= q;
  }
  if (code != 0)
    throw std::invalid_argument("MatFq::decode: code out of range");
  return m;
}

void MatFq::append_key(std::string& out) const {
  out.push_back(static_cast<char>(n_));
  out.push_back(static_cast<char>(f_->q()));
  out.append(reinterpret_cast<const char*>(a_.data()), std::size_t(n_) * n_);
}

MatFq MatFq::conjugated(const MatFq& g, const MatFq& g_inv) const {
  return conjugate(g, *this, g_inv);
}

MatFq mat_mul(const MatFq& a, const MatFq& b) {
  const Fq& f = a.field();
  const unsigned n = a.n();
  MatFq c(f, n);
  const auto& ops = f.ops();
  for (unsigned i = 0; i < n; ++i) {
    Elem* ci = c.row(i);
    for (unsigned k = 0; k < n; ++k) {
      const Elem aik = a.at(i, k);
      if (aik != 0) ops.axpy(f, ci, b.row(k), aik, n);
    }
  }
  return c;
}

MatFq mat_add(const MatFq& a, const MatFq& b) {
  const Fq& f = a.field();
  MatFq c = a;
  f.ops().axpy(f, c.flat().data(), b.flat().data(), 1, c.flat().size());
  return c;
}

MatFq conjugate(const MatFq& g, const MatFq& a, const MatFq& g_inv) {
  return mat_mul(mat_mul(g, a), g_inv);
}

namespace {

// Forward elimination on a row-major buffer; returns the rank and leaves the
// buffer in (non-reduced) echelon form.
unsigned echelon_rank(const Fq& f, Elem* m, unsigned nrows, unsigned ncols) {
  const auto& ops = f.ops();
  unsigned r = 0;
  for (unsigned c = 0; c < ncols && r < nrows; ++c) {
    unsigned pivot = nrows;
    for (unsigned i = r; i < nrows; ++i)
      if (m[std::size_t(i) * ncols + c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == nrows) continue;
    if (pivot != r)
      std::swap_ranges(m + std::size_t(pivot) * ncols,
                       m + std::size_t(pivot) * ncols + ncols,
                       m + std::size_t(r) * ncols);
    Elem* rr = m + std::size_t(r) * ncols;
    if (rr[c] != 1) ops.scale(f, rr, f.inv(rr[c]), ncols);
    for (unsigned i = r + 1; i < nrows; ++i) {
      Elem* ri = m + std::size_t(i) * ncols;
      if (ri[c] != 0) ops.axpy(f, ri, rr, f.neg(ri[c]), ncols);
    }
    ++r;
  }
  return r;
}

}  // namespace

unsigned mat_rank(const MatFq& a) {
  const unsigned n = a.n();
  std::array<Elem, kMaxN * kMaxN> buf;
  std::copy(a.flat().begin(), a.flat().end(), buf.begin());
  return echelon_rank(a.field(), buf.data(), n, n);
}

bool try_inverse(const MatFq& a, MatFq* out) {
  const Fq& f = a.field();
  const auto& ops = f.ops();
  const unsigned n = a.n();
  const unsigned w = 2 * n;
  // Gauss-Jordan on [A | I].
  std::array<Elem, kMaxN * kMaxN * 2> buf{};
  for (unsigned i = 0; i < n; ++i) {
    std::copy(a.row(i), a.row(i) + n, buf.data() + std::size_t(i) * w);
    buf[std::size_t(i) * w + n + i] = 1;
  }
  for (unsigned c = 0; c < n; ++c) {
    unsigned pivot = n;
    for (unsigned i = c; i < n; ++i)
      if (buf[std::size_t(i) * w + c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) return false;
    if (pivot != c)
      std::swap_ranges(buf.data() + std::size_t(pivot) * w,
                       buf.data() + std::size_t(pivot) * w + w,
                       buf.data() + std::size_t(c) * w);
    Elem* rc = buf.data() + std::size_t(c) * w;
    if (rc[c] != 1) ops.scale(f, rc, f.inv(rc[c]), w);
    for (unsigned i = 0; i < n; ++i) {
      if (i == c) continue;
      Elem* ri = buf.data() + std::size_t(i) * w;
      if (ri[c] != 0) ops.axpy(f, ri, rc, f.neg(ri[c]), w);
    }
  }
  MatFq inv(f, n);
  for (unsigned i = 0; i < n; ++i)
    std::copy(buf.data() + std::size_t(i) * w + n,
              buf.data() + std::size_t(i) * w + w, inv.row(i));
  *out = inv;
  return true;
}

MatFq inverse(const MatFq& a) {
  MatFq out(a.field(), a.n());
  if (!try_inverse(a, &out))
    throw std::invalid_argument("inverse: matrix is singular");
  return out;
}

std::string to_pretty(const MatFq& a) {
  std::string s;
  for (unsigned i = 0; i < a.n(); ++i) {
    s += "[";
    for (unsigned j = 0; j < a.n(); ++j) {
      if (j) s += " ";
      s += std::to_string(a.at(i, j));
    }
    s += "]";
    if (i + 1 < a.n()) s += "\n";
  }
  return s;
}

VecSpan::VecSpan(const Fq& f, unsigned ambient) : f_(&f), ambient_(ambient) {}

bool VecSpan::insert(std::span<const Elem> v) {
  if (v.size() != ambient_)
    throw std::invalid_argument("VecSpan::insert: wrong vector length");
  std::vector<Elem> tmp(v.begin(), v.end());
  reduce_inplace(tmp.data());
  unsigned pos = ambient_;
  for (unsigned c = 0; c < ambient_; ++c)
    if (tmp[c] != 0) {
      pos = c;
      break;
    }
  if (pos == ambient_) return false;

  const auto& ops = f_->ops();
  if (tmp[pos] != 1) ops.scale(*f_, tmp.data(), f_->inv(tmp[pos]), ambient_);
  for (unsigned r = 0; r < dim(); ++r) {
    Elem* rr = rows_.data() + std::size_t(r) * ambient_;
    if (rr[pos] != 0) ops.axpy(*f_, rr, tmp.data(), f_->neg(rr[pos]), ambient_);
  }
  const auto at = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), pos) - pivots_.begin());
  rows_.insert(rows_.begin() + at * ambient_, tmp.begin(), tmp.end());
  pivots_.insert(pivots_.begin() + at, pos);
  return true;
}

void VecSpan::reduce_inplace(Elem* v) const {
  const auto& ops = f_->ops();
  for (unsigned r = 0; r < dim(); ++r) {
    const Elem c = v[pivots_[r]];
    if (c != 0)
      ops.axpy(*f_, v, rows_.data() + std::size_t(r) * ambient_, f_->neg(c),
               ambient_);
  }
}

bool VecSpan::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("VecSpan::contains: wrong vector length");
  std::vector<Elem> tmp(v.begin(), v.end());
  reduce_inplace(tmp.data());
  return std::all_of(tmp.begin(), tmp.end(), [](Elem x) { return x == 0; });
}

bool VecSpan::operator==(const VecSpan& o) const {
  return ambient_ == o.ambient_ && f_->q() == o.f_->q() && rows_ == o.rows_;
}

void VecSpan::append_key(std::string& out) const {
  out.push_back(static_cast<char>(dim()));
  out.append(reinterpret_cast<const char*>(rows_.data()), rows_.size());
}

VecSpan nullspace(const Fq& f, std::vector<Elem>& rows, std::size_t nrows,
                  std::size_t ncols) {
  const auto& ops = f.ops();
  std::vector<std::uint32_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pivot = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (rows[i * ncols + c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == nrows) continue;
    if (pivot != r)
      std::swap_ranges(rows.begin() + pivot * ncols,
                       rows.begin() + pivot * ncols + ncols,
                       rows.begin() + r * ncols);
    Elem* rr = rows.data() + r * ncols;
    if (rr[c] != 1) ops.scale(f, rr, f.inv(rr[c]), ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      Elem* ri = rows.data() + i * ncols;
      if (ri[c] != 0) ops.axpy(f, ri, rr, f.neg(ri[c]), ncols);
    }
    pivot_cols.push_back(static_cast<std::uint32_t>(c));
    ++r;
  }

  VecSpan out(f, static_cast<unsigned>(ncols));
  std::vector<Elem> v(ncols);
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    std::fill(v.begin(), v.end(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v[pivot_cols[i]] = f.neg(rows[i * ncols + c]);
    out.insert(v);
  }
  return out;
}

VecSpan commutator_nullspace(const Fq& f, unsigned n,
                             std::span<const MatFq> mats) {
  const std::size_t nn = std::size_t(n) * n;
  if (mats.empty()) {
    VecSpan all(f, static_cast<unsigned>(nn));
    std::vector<Elem> v(nn, 0);
    for (std::size_t i = 0; i < nn; ++i) {
      v[i] = 1;
      all.insert(v);
      v[i] = 0;
    }
    return all;
  }
  // One equation per (matrix A, position (i,j)): entry (i,j) of XA - AX
  // vanishes. The unknown X is flattened row-major, entry (r,s) at r*n+s.
  std::vector<Elem> rows(mats.size() * nn * nn, 0);
  std::size_t row_idx = 0;
  for (const MatFq& a : mats) {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        Elem* row = rows.data() + row_idx * nn;
        for (unsigned s = 0; s < n; ++s) {
          const std::size_t col = std::size_t(i) * n + s;
          row[col] = f.add(row[col], a.at(s, j));
        }
        for (unsigned r = 0; r < n; ++r) {
          const std::size_t col = std::size_t(r) * n + j;
          row[col] = f.sub(row[col], a.at(i, r));
        }
        ++row_idx;
      }
  }
  return nullspace(f, rows, mats.size() * nn, nn);
}

}  // namespace simcount
