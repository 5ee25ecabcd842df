#include "simcount/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "simcount/common.hpp"
#include "simcount/kernels.hpp"

namespace simcount {
namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p: c[i] is the coefficient of x^i. Not normalized;
// degree is tracked by the callers that need it.
using Poly = std::vector<unsigned>;

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Remainder of a by the monic polynomial m of degree d.
Poly poly_mod(Poly a, const Poly& m, unsigned d, unsigned p) {
  for (std::size_t i = a.size(); i-- > d;) {
    unsigned c = a[i];
    if (c == 0) continue;
    a[i] = 0;
    for (unsigned j = 0; j < d; ++j)
      a[i - d + j] = (a[i - d + j] + c * (p - m[j]) % p) % p;
  }
  a.resize(d);
  return a;
}

// Monic polynomial of degree d whose non-leading coefficients are the base-p
// digits of code, c_0 least significant.
Poly poly_from_code(std::uint64_t code, unsigned d, unsigned p) {
  Poly m(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    m[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  m[d] = 1;
  return m;
}

// Trial division by every monic polynomial of degree 1..d/2.
bool poly_is_irreducible(const Poly& m, unsigned d, unsigned p) {
  for (unsigned dd = 1; 2 * dd <= d; ++dd) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly div = poly_from_code(code, dd, p);
      if (poly_is_zero(poly_mod(m, div, dd, p))) return false;
    }
  }
  return true;
}

std::string poly_to_string(const Poly& m) {
  std::string s;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(m[i]);
    } else {
      if (m[i] != 1) s += std::to_string(m[i]) + "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

Fq Fq::make(unsigned p, unsigned e) {
  if (!is_prime(p))
    throw std::invalid_argument("F_q: p must be prime, got p=" + std::to_string(p));
  if (e < 1) throw std::invalid_argument("F_q: e must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > 256)
      throw std::invalid_argument(
          "F_q: q = p^e must be at most 256 (elements are single bytes)");
  }
  // Least monic irreducible of degree e: candidates ordered by their
  // non-leading coefficient vector read as a base-p integer.
  for (std::uint64_t code = 0;; ++code) {
    Poly m = poly_from_code(code, e, p);
    if (poly_is_irreducible(m, e, p)) {
      std::vector<unsigned> mod(m.begin(), m.end());
      return make(p, e, mod);
    }
    if (code >= q) throw InternalError("F_q: no irreducible modulus found");
  }
}

Fq Fq::make(unsigned p, unsigned e, const std::vector<unsigned>& modulus) {
  if (!is_prime(p))
    throw std::invalid_argument("F_q: p must be prime, got p=" + std::to_string(p));
  if (e < 1) throw std::invalid_argument("F_q: e must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > 256)
      throw std::invalid_argument(
          "F_q: q = p^e must be at most 256 (elements are single bytes)");
  }
  if (modulus.size() != e + 1 || modulus[e] != 1)
    throw std::invalid_argument(
        "F_q: modulus must be monic of degree e, given as coefficients c_0..c_e");
  for (unsigned c : modulus)
    if (c >= p)
      throw std::invalid_argument("F_q: modulus coefficients must lie in [0, p)");
  Poly m(modulus.begin(), modulus.end());
  if (!poly_is_irreducible(m, e, p))
    throw std::invalid_argument("F_q: modulus " + poly_to_string(m) +
                                " is reducible over F_" + std::to_string(p));

  Fq f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<unsigned>(q);
  f.modulus_ = modulus;
  f.build_tables();
  f.ops_ = &kern::select_ops(f);
  return f;
}

void Fq::build_tables() {
  const std::size_t q = q_;
  // Pad the 2-d tables so a 16-byte load from any row start stays in bounds.
  add_.assign(q * q + 16, 0);
  sub_.assign(q * q + 16, 0);
  mul_.assign(q * q + 16, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);

  auto to_poly = [&](Elem a) {
    Poly c(e_, 0);
    unsigned v = a;
    for (unsigned i = 0; i < e_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  };
  auto from_poly = [&](const Poly& c) {
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
    return static_cast<Elem>(v);
  };

  Poly m(modulus_.begin(), modulus_.end());
  for (std::size_t a = 0; a < q; ++a) {
    Poly pa = to_poly(static_cast<Elem>(a));
    Poly na(e_, 0);
    for (unsigned i = 0; i < e_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = from_poly(na);
    for (std::size_t b = 0; b < q; ++b) {
      Poly pb = to_poly(static_cast<Elem>(b));
      Poly s(e_, 0);
      for (unsigned i = 0; i < e_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[a * q + b] = from_poly(s);
      Poly d(e_, 0);
      for (unsigned i = 0; i < e_; ++i) d[i] = (pa[i] + (p_ - pb[i])) % p_;
      sub_[a * q + b] = from_poly(d);
      mul_[a * q + b] = from_poly(poly_mod(poly_mul(pa, pb, p_), m, e_, p_));
    }
  }
  for (std::size_t a = 1; a < q; ++a) {
    Elem found = 0;
    for (std::size_t b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        found = static_cast<Elem>(b);
        break;
      }
    if (found == 0)
      throw InternalError("F_q: element without inverse; modulus not irreducible?");
    inv_[a] = found;
  }
}

Elem Fq::inv(Elem a) const {
  if (a == 0) throw std::invalid_argument("F_q: inverse of zero");
  return inv_[a];
}

std::vector<Elem> Fq::enumerate() const {
  std::vector<Elem> r(q_);
  for (unsigned i = 0; i < q_; ++i) r[i] = static_cast<Elem>(i);
  return r;
}

std::vector<unsigned> Fq::coeffs(Elem a) const {
  std::vector<unsigned> c(e_, 0);
  unsigned v = a;
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Elem Fq::from_coeffs(std::span<const unsigned> c) const {
  if (c.size() > e_)
    throw std::invalid_argument("F_q: too many coefficients for this field");
  unsigned v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
  return static_cast<Elem>(v);
}

const char* Fq::ops_name() const { return ops_->name; }

std::string Fq::describe() const {
  if (e_ == 1) return "F_" + std::to_string(q_);
  Poly m(modulus_.begin(), modulus_.end());
  return "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[x]/(" +
         poly_to_string(m) + ")";
}

}  // namespace simcount
