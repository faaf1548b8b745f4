// Sparse multivariate polynomials over an exact field.
//
// A polynomial keeps its terms sorted in decreasing order for the monomial
// order of its ring, with no zero coefficients.  Variables are always named
// x0, x1, ...; the ring fixes how many there are.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multisecant/errors.hpp"
#include "multisecant/field.hpp"
#include "multisecant/monomial.hpp"

namespace msec {

template <class F>
struct Ring {
  using Context = typename FieldTraits<F>::Context;

  int nvars = 0;
  Context field{};
  MonomialOrder order{};

  Ring() = default;
  Ring(int n, Context ctx, MonomialOrder ord = MonomialOrder::degrevlex())
      : nvars(n), field(ctx), order(ord) {
    if (n < 0 || n > kMaxVars) throw DomainError("ring arity out of range: " + std::to_string(n));
  }

  F from_int(std::int64_t n) const { return FieldTraits<F>::from_int(n, field); }
  F zero() const { return from_int(0); }
  F one() const { return from_int(1); }

  int compare(const Monomial& a, const Monomial& b) const { return order.compare(a, b, nvars); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.nvars == b.nvars && a.field == b.field && a.order == b.order;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(int nvars, typename FieldTraits<F>::Context ctx = {},
                     MonomialOrder order = MonomialOrder::degrevlex()) {
  return std::make_shared<const Ring<F>>(nvars, ctx, order);
}

inline RingPtr<Fp> make_ring_gf(int nvars, std::uint32_t p = kDefaultPrime,
                                MonomialOrder order = MonomialOrder::degrevlex()) {
  return make_ring<Fp>(nvars, {p}, order);
}

template <class F>
struct Term {
  Monomial mono;
  F coef;
};

template <class F>
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr<F> ring, const F& c) {
    MultiPoly p(ring);
    if (!msec::is_zero(c)) p.terms_.push_back({Monomial{}, bind(*ring, c)});
    return p;
  }
  static MultiPoly constant(RingPtr<F> ring, std::int64_t c) {
    return constant(ring, ring->from_int(c));
  }
  static MultiPoly variable(RingPtr<F> ring, int i) {
    if (i < 0 || i >= ring->nvars) throw DomainError("variable index out of range");
    MultiPoly p(ring);
    p.terms_.push_back({Monomial::variable(i), ring->one()});
    return p;
  }
  static MultiPoly monomial(RingPtr<F> ring, const Monomial& m, const F& c) {
    MultiPoly p(ring);
    if (!msec::is_zero(c)) p.terms_.push_back({m, bind(*ring, c)});
    return p;
  }
  // Builds from arbitrary (possibly repeated, unsorted) terms.
  static MultiPoly from_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
    MultiPoly p(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const F& leading_coefficient() const { return terms_.front().coef; }

  // Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max<int>(d, t.mono.deg);
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (auto& t : terms_) d = std::max<int>(d, t.mono[var]);
    return d;
  }
  bool is_homogeneous() const {
    for (auto& t : terms_)
      if (t.mono.deg != terms_.front().mono.deg) return false;
    return true;
  }
  bool uses_variable(int var) const {
    for (auto& t : terms_)
      if (t.mono[var]) return true;
    return false;
  }

  F coefficient(const Monomial& m) const {
    for (auto& t : terms_)
      if (t.mono == m) return t.coef;
    return ring_->zero();
  }

  // Homogeneous component of the given degree.
  MultiPoly homogeneous_part(int degree) const {
    MultiPoly r(ring_);
    for (auto& t : terms_)
      if (t.mono.deg == degree) r.terms_.push_back(t);
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
    std::unordered_map<Monomial, F, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (auto& x : a.terms_)
      for (auto& y : b.terms_) {
        auto [it, inserted] = acc.try_emplace(x.mono * y.mono, x.coef * y.coef);
        if (!inserted) it->second += x.coef * y.coef;
      }
    std::vector<Term<F>> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!msec::is_zero(c)) out.push_back({m, c});
    MultiPoly r(a.ring_);
    r.terms_ = std::move(out);
    r.sort_terms();
    return r;
  }
  friend MultiPoly operator*(const F& c, const MultiPoly& a) { return a.scaled(c); }
  friend MultiPoly operator*(const MultiPoly& a, const F& c) { return a.scaled(c); }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const F& c) const {
    MultiPoly r(ring_);
    if (msec::is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = t.coef * c;
    return r;
  }
  MultiPoly times_monomial(const Monomial& m, const F& c) const {
    MultiPoly r(ring_);
    if (msec::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;  // multiplication by a monomial preserves the order
  }
  MultiPoly pow(int e) const {
    MultiPoly r = constant(ring_, 1), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  // Scales so that the leading coefficient is one.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  F evaluate(const std::vector<F>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars) throw DomainError("evaluation point has wrong arity");
    F s = ring_->zero();
    for (auto& t : terms_) {
      F v = t.coef;
      for (int i = 0; i < ring_->nvars; ++i)
        for (int e = 0; e < t.mono[i]; ++e) v = v * point[static_cast<std::size_t>(i)];
      s += v;
    }
    return s;
  }

  MultiPoly derivative(int var) const {
    MultiPoly r(ring_);
    for (auto& t : terms_) {
      int e = t.mono[var];
      if (!e) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      r.terms_.push_back({m, t.coef * ring_->from_int(e)});
    }
    r.normalize();
    return r;
  }

  // Substitutes images[i] for variable i; the images live in `target`.
  MultiPoly substitute(const std::vector<MultiPoly>& images, const RingPtr<F>& target) const {
    if (static_cast<int>(images.size()) != ring_->nvars) throw DomainError("substitution arity mismatch");
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const MultiPoly& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      return cache[static_cast<std::size_t>(e)];
    };
    std::unordered_map<Monomial, F, MonomialHash> acc;
    for (auto& t : terms_) {
      MultiPoly prod = constant(target, t.coef);
      for (int i = 0; i < ring_->nvars && !prod.is_zero(); ++i)
        if (t.mono[i]) prod = prod * power(static_cast<std::size_t>(i), t.mono[i]);
      for (auto& u : prod.terms_) {
        auto [it, inserted] = acc.try_emplace(u.mono, u.coef);
        if (!inserted) it->second += u.coef;
      }
    }
    std::vector<Term<F>> out;
    for (auto& [m, c] : acc)
      if (!msec::is_zero(c)) out.push_back({m, c});
    MultiPoly r(target);
    r.terms_ = std::move(out);
    r.sort_terms();
    return r;
  }

  // Same terms, re-sorted for another ring of at least the same arity
  // (used to switch monomial orders or append variables).
  MultiPoly in_ring(const RingPtr<F>& target) const {
    if (target->nvars < ring_->nvars) {
      for (int i = target->nvars; i < ring_->nvars; ++i)
        if (uses_variable(i)) throw DomainError("polynomial uses a variable absent from target ring");
    }
    MultiPoly r(target);
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  // Renames variable i to map[i] in the target ring.
  MultiPoly rename(const std::vector<int>& map, const RingPtr<F>& target) const {
    MultiPoly r(target);
    for (auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < ring_->nvars; ++i)
        if (t.mono[i]) m.set(map[static_cast<std::size_t>(i)], m[map[static_cast<std::size_t>(i)]] + t.mono[i]);
      r.terms_.push_back({m, t.coef});
    }
    r.normalize();
    return r;
  }

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Direct access for the Gröbner engine; callers keep the invariants.
  std::vector<Term<F>>& mutable_terms() { return terms_; }

  void normalize() {
    sort_terms();
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coef += t.coef;
      else
        out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term<F>& t) { return msec::is_zero(t.coef); }),
              out.end());
    for (auto& t : out) t.coef = bind(*ring_, t.coef);
    terms_ = std::move(out);
  }

private:
  static F bind(const Ring<F>& r, const F& c) {
    if constexpr (std::is_same_v<F, Fp>) {
      return c.bound() ? c : c + r.zero();
    } else {
      return c;
    }
  }

  void sort_terms() {
    const Ring<F>& r = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&r](const Term<F>& a, const Term<F>& b) { return r.compare(a.mono, b.mono) > 0; });
  }

  static void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring_ != b.ring_ && !(a.ring_ && b.ring_ && *a.ring_ == *b.ring_))
      throw DomainError("ring mismatch");
  }

  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    check_same_ring(a, b);
    const Ring<F>& r = *a.ring_;
    MultiPoly out(a.ring_);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size())
        c = -1;
      else if (j == b.terms_.size())
        c = 1;
      else
        c = r.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        auto t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        out.terms_.push_back(t);
      } else {
        F s = subtract ? a.terms_[i].coef - b.terms_[j].coef : a.terms_[i].coef + b.terms_[j].coef;
        if (!msec::is_zero(s)) out.terms_.push_back({a.terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return out;
  }

  RingPtr<F> ring_;
  std::vector<Term<F>> terms_;
};

using PolyQ = MultiPoly<Rational>;
using PolyP = MultiPoly<Fp>;

namespace detail {
inline std::string coef_text(const Fp& c) { return std::to_string(c.signed_value()); }
inline std::string coef_text(const Rational& c) { return c.str(); }
inline bool coef_negative(const Fp& c) { return c.signed_value() < 0; }
inline bool coef_negative(const Rational& c) { return sgn(c.get()) < 0; }
}  // namespace detail

template <class F>
std::string MultiPoly<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    bool neg = detail::coef_negative(t.coef);
    F mag = neg ? -t.coef : t.coef;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool printed = false;
    if (!mag.is_one() || t.mono.is_one()) {
      os << detail::coef_text(mag);
      printed = true;
    }
    for (int i = 0; i < ring_->nvars; ++i) {
      int e = t.mono[i];
      if (!e) continue;
      if (printed) os << '*';
      os << 'x' << i;
      if (e > 1) os << '^' << e;
      printed = true;
    }
  }
  return os.str();
}

// Coefficient-wise reduction ℚ[x] → GF(p)[x].
PolyP reduce_mod(const PolyQ& f, const RingPtr<Fp>& target);

}  // namespace msec
