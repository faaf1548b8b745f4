// Univariate polynomials and binary forms: Euclid, subresultants, roots.
//
// A BinaryForm of degree d in (x0, x1) stores coeffs[j] = coefficient of
// x0^j x1^(d-j), so dehomogenizing at x1 = 1 leaves an ascending
// univariate polynomial in x0.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multisecant/errors.hpp"
#include "multisecant/field.hpp"
#include "multisecant/polynomial.hpp"

namespace msec {

// Ascending coefficient vector; the zero polynomial is empty.
template <class F>
using UniPoly = std::vector<F>;

namespace uni {

template <class F>
int degree(const UniPoly<F>& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && is_zero(a[static_cast<std::size_t>(d)])) --d;
  return d;
}

template <class F>
UniPoly<F> trimmed(UniPoly<F> a) {
  a.resize(static_cast<std::size_t>(degree(a) + 1));
  return a;
}

template <class F>
const F& lead(const UniPoly<F>& a) {
  return a[static_cast<std::size_t>(degree(a))];
}

template <class F>
UniPoly<F> add(const UniPoly<F>& a, const UniPoly<F>& b) {
  UniPoly<F> r(std::max(a.size(), b.size()), F(0) * (a.empty() ? (b.empty() ? F(0) : b[0]) : a[0]));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return trimmed(std::move(r));
}

template <class F>
UniPoly<F> scale(UniPoly<F> a, const F& c) {
  for (auto& x : a) x = x * c;
  return trimmed(std::move(a));
}

template <class F>
UniPoly<F> sub(const UniPoly<F>& a, const UniPoly<F>& b) {
  UniPoly<F> nb = b;
  for (auto& x : nb) x = -x;
  return add(a, nb);
}

template <class F>
UniPoly<F> mul(const UniPoly<F>& a, const UniPoly<F>& b) {
  int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return {};
  UniPoly<F> r(static_cast<std::size_t>(da + db + 1), a[0] * F(0));
  for (int i = 0; i <= da; ++i)
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return trimmed(std::move(r));
}

// Quotient and remainder over a field.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(UniPoly<F> a, const UniPoly<F>& b) {
  int db = degree(b);
  if (db < 0) throw DomainError("division by the zero polynomial");
  a = trimmed(std::move(a));
  int da = degree(a);
  if (da < db) return {{}, a};
  F inv = lead(b).inverse();
  UniPoly<F> q(static_cast<std::size_t>(da - db + 1), inv * F(0));
  for (int d = da; d >= db; --d) {
    F c = a[static_cast<std::size_t>(d)] * inv;
    q[static_cast<std::size_t>(d - db)] = c;
    if (is_zero(c)) continue;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(d - db + k)] -= c * b[static_cast<std::size_t>(k)];
  }
  return {trimmed(std::move(q)), trimmed(std::move(a))};
}

template <class F>
UniPoly<F> rem(const UniPoly<F>& a, const UniPoly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
UniPoly<F> monic(UniPoly<F> a) {
  a = trimmed(std::move(a));
  if (a.empty()) return a;
  return scale(std::move(a), lead(a).inverse());
}

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

// lc(b)^(deg a - deg b + 1) * a mod b, exact over any domain.
template <class F>
UniPoly<F> pseudo_rem(UniPoly<F> a, const UniPoly<F>& b) {
  int db = degree(b);
  a = trimmed(std::move(a));
  int e = degree(a) - db + 1;
  const F lb = lead(b);
  while (degree(a) >= db && !a.empty()) {
    int d = degree(a);
    F c = a[static_cast<std::size_t>(d)];
    for (auto& x : a) x = x * lb;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(d - db + k)] -= c * b[static_cast<std::size_t>(k)];
    a = trimmed(std::move(a));
    --e;
  }
  for (; e > 0; --e)
    for (auto& x : a) x = x * lb;
  return a;
}

template <class F>
F pow(F base, long e) {
  if (e < 0) return pow(base.inverse(), -e);
  F r = base * F(0) + F(1);
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

template <class F>
F evaluate(const UniPoly<F>& a, const F& x) {
  if (a.empty()) return x * F(0);
  F r = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) r = r * x + a[i];
  return r;
}

}  // namespace uni

// Principal subresultant coefficients sres_0, ..., sres_{n-1} of a and b,
// where n = min(deg a, deg b), computed by the subresultant PRS.  Values
// equal the Sylvester-submatrix determinants with the larger-degree input
// in the first block of rows.  deg gcd(a, b) is the smallest j with
// sres_j != 0, or n when all vanish.
template <class F>
std::vector<F> subresultant_sequence(UniPoly<F> a, UniPoly<F> b) {
  a = uni::trimmed(std::move(a));
  b = uni::trimmed(std::move(b));
  if (a.empty() && b.empty()) throw DomainError("subresultants of two zero polynomials");
  if (uni::degree(a) < uni::degree(b)) std::swap(a, b);
  const int m = uni::degree(a), n = uni::degree(b);
  if (n <= 0) return {};
  const F zero = a[0] * F(0);
  std::vector<F> out(static_cast<std::size_t>(n), zero);
  std::vector<int> degs{m, n};
  F g = zero + F(1), h = zero + F(1);
  UniPoly<F> A = a, B = b;
  while (true) {
    int delta = uni::degree(A) - uni::degree(B);
    UniPoly<F> R = uni::pseudo_rem(A, B);
    F denom = g * uni::pow(h, delta);
    A = std::move(B);
    B = uni::scale(std::move(R), denom.inverse());
    g = uni::lead(A);
    h = uni::pow(h, 1 - delta) * uni::pow(g, delta);
    int j = uni::degree(A);
    if (j < n) {
      auto idx = static_cast<std::size_t>(std::find(degs.begin(), degs.end(), j) - degs.begin());
      long tau = 0;
      for (std::size_t k = 1; k < idx; ++k) tau += long(degs[k - 1] - j) * long(degs[k] - j);
      out[static_cast<std::size_t>(j)] = (tau % 2) ? -h : h;
    }
    if (B.empty()) break;
    degs.push_back(uni::degree(B));
  }
  return out;
}

// Resultant of a and b (as univariate polynomials of their actual degrees).
template <class F>
F resultant(const UniPoly<F>& a, const UniPoly<F>& b) {
  int da = uni::degree(a), db = uni::degree(b);
  if (da < 0 || db < 0) return (da < 0 ? (db < 0 ? F(0) : b[0] * F(0)) : a[0] * F(0));
  if (da == 0) return uni::pow(a[0], db);
  if (db == 0) return uni::pow(b[0], da);
  auto s = da >= db ? subresultant_sequence(a, b) : subresultant_sequence(b, a);
  F r = s[0];
  // subresultant_sequence puts the larger degree first; Res(a,b) = (-1)^{da db} Res(b,a)
  if (da < db && (long(da) * db) % 2) r = -r;
  return r;
}

template <class F>
class BinaryForm {
public:
  BinaryForm() = default;
  // The zero form of the given degree.
  explicit BinaryForm(int degree, const F& zero = F(0)) : degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1), zero) {
    if (degree < 0) throw DomainError("binary form degree must be non-negative");
  }
  BinaryForm(int degree, std::vector<F> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != degree + 1) throw DomainError("binary form coefficient count mismatch");
  }

  int degree() const { return degree_; }
  const std::vector<F>& coeffs() const { return coeffs_; }
  // Coefficient of x0^j x1^(d-j).
  const F& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  F& operator[](int j) { return coeffs_[static_cast<std::size_t>(j)]; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const F& c) { return msec::is_zero(c); });
  }

  UniPoly<F> dehomogenize() const { return uni::trimmed(coeffs_); }
  // Multiplicity of the root [1:0], lost when dehomogenizing at x1 = 1.
  int multiplicity_at_infinity() const { return is_zero() ? degree_ : degree_ - uni::degree(coeffs_); }

  static BinaryForm homogenize(const UniPoly<F>& p, int degree, const F& zero) {
    BinaryForm r(degree, zero);
    for (int j = 0; j <= uni::degree(p); ++j) r[j] = p[static_cast<std::size_t>(j)];
    return r;
  }

  F evaluate(const F& x0, const F& x1) const {
    F r = x0 * F(0);
    for (int j = 0; j <= degree_; ++j) r += coeffs_[static_cast<std::size_t>(j)] * uni::pow(x0, j) * uni::pow(x1, degree_ - j);
    return r;
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r(a.degree_ + b.degree_, a.coeffs_[0] * F(0));
    for (int i = 0; i <= a.degree_; ++i)
      for (int j = 0; j <= b.degree_; ++j) r[i + j] += a[i] * b[j];
    return r;
  }
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_) throw DomainError("adding binary forms of different degrees");
    BinaryForm r = a;
    for (int j = 0; j <= a.degree_; ++j) r[j] += b[j];
    return r;
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm nb = b;
    for (auto& c : nb.coeffs_) c = -c;
    return a + nb;
  }
  BinaryForm scaled(const F& c) const {
    BinaryForm r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  // Printed in variables x0, x1.
  std::string to_string() const {
    std::string out;
    for (int j = degree_; j >= 0; --j) {
      const F& c = coeffs_[static_cast<std::size_t>(j)];
      if (msec::is_zero(c)) continue;
      bool neg = detail::coef_negative(c);
      F mag = neg ? -c : c;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      if (j) mono += j > 1 ? "x0^" + std::to_string(j) : "x0";
      if (degree_ - j) {
        if (!mono.empty()) mono += "*";
        mono += degree_ - j > 1 ? "x1^" + std::to_string(degree_ - j) : "x1";
      }
      if (!mag.is_one() || mono.empty()) out += detail::coef_text(mag) + (mono.empty() ? "" : "*");
      out += mono;
    }
    return out.empty() ? "0" : out;
  }

private:
  int degree_ = 0;
  std::vector<F> coeffs_{F(0)};
};

// Monic gcd of nonzero forms (zero forms are skipped: everything divides
// them).  Normalized so that the coefficient of the highest x0 power is 1.
template <class F>
BinaryForm<F> gcd_binary_forms(const std::vector<BinaryForm<F>>& forms) {
  std::optional<UniPoly<F>> g;
  int infinity = 0;
  bool any = false;
  F zero{};
  for (auto& f : forms) {
    if (f.is_zero()) continue;
    zero = f[0] * F(0);
    int inf = f.multiplicity_at_infinity();
    if (!any || inf < infinity) infinity = inf;
    g = g ? uni::gcd(*g, f.dehomogenize()) : uni::monic(f.dehomogenize());
    any = true;
  }
  if (!any) throw DomainError("gcd of zero binary forms");
  int finite = uni::degree(*g);
  BinaryForm<F> r(finite + infinity, zero);
  for (int j = 0; j <= finite; ++j) r[j] = (*g)[static_cast<std::size_t>(j)];
  return r;
}

// Degree of gcd(a, b) read off the principal subresultant coefficients
// instead of running Euclid; the root [1:0] is accounted for separately.
template <class F>
int gcd_degree(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("gcd degree with a zero form");
  const int infinity = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
  const UniPoly<F> u = a.dehomogenize(), v = b.dehomogenize();
  const int n = std::min(uni::degree(u), uni::degree(v));
  if (n <= 0) return infinity;
  const auto s = subresultant_sequence(u, v);
  for (int j = 0; j < n; ++j)
    if (!is_zero(s[static_cast<std::size_t>(j)])) return infinity + j;
  return infinity + n;
}

// Root of a binary form as a point [x0 : x1] with multiplicity.
template <class F>
struct FormRoot {
  F x0, x1;
  int multiplicity;
};

// Roots of a univariate polynomial over GF(p), each once (distinct), by
// the gcd with x^p - x followed by random equal-degree splitting.
std::vector<Fp> roots_mod_p(const UniPoly<Fp>& f, std::uint64_t seed = 1);

// Multiplicity of r as a root of f.
template <class F>
int root_multiplicity(UniPoly<F> f, const F& r) {
  int m = 0;
  UniPoly<F> lin{-r, r * F(0) + F(1)};
  while (uni::degree(f) > 0) {
    auto [q, rr] = uni::divmod(f, lin);
    if (!rr.empty()) break;
    f = std::move(q);
    ++m;
  }
  return m;
}

// Rational roots over GF(p) of a nonzero form.
std::vector<FormRoot<Fp>> form_roots(const BinaryForm<Fp>& f, std::uint64_t seed = 1);

}  // namespace msec
