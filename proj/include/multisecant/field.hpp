// Exact coefficient fields: prime fields GF(p) with a runtime modulus and
// arbitrary-precision rationals.  Both satisfy the small FieldTraits
// interface consumed by the polynomial and linear-algebra templates.
#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "multisecant/errors.hpp"

namespace msec {

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

// An element of GF(p).  The modulus travels with the value so that dense
// containers (Eigen matrices) can build elements from integer literals: an
// element with modulus 0 is an unbound integer constant that adopts the
// modulus of whatever it is combined with.
class Fp {
public:
  constexpr Fp() = default;
  constexpr Fp(int n) : raw_(static_cast<std::int64_t>(n)), p_(0) {}
  Fp(std::int64_t n, std::uint32_t p) : p_(p) { raw_ = reduce(n, p); }

  static Fp from_residue(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.raw_ = v;
    r.p_ = p;
    return r;
  }

  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  // Canonical residue in [0, p); requires a bound element.
  std::uint32_t value() const { return static_cast<std::uint32_t>(raw_); }
  std::uint32_t value_in(std::uint32_t p) const {
    return p_ ? static_cast<std::uint32_t>(raw_) : static_cast<std::uint32_t>(reduce(raw_, p));
  }
  // Representative in (-p/2, p/2], handy for printing.
  std::int64_t signed_value() const {
    if (!p_) return raw_;
    return raw_ > static_cast<std::int64_t>(p_ / 2) ? raw_ - p_ : raw_;
  }

  bool is_zero() const { return raw_ == 0; }
  bool is_one() const { return raw_ == 1; }

  Fp operator-() const {
    if (!p_) return Fp(static_cast<int>(-raw_));
    return from_residue(raw_ == 0 ? 0 : p_ - static_cast<std::uint32_t>(raw_), p_);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (!p) return Fp(static_cast<int>(a.raw_ + b.raw_));
    std::uint64_t s = std::uint64_t(a.value_in(p)) + b.value_in(p);
    return from_residue(static_cast<std::uint32_t>(s >= p ? s - p : s), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (!p) return Fp(static_cast<int>(a.raw_ * b.raw_));
    return from_residue(static_cast<std::uint32_t>(std::uint64_t(a.value_in(p)) * b.value_in(p) % p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (!p) return a.raw_ == b.raw_;
    return a.value_in(p) == b.value_in(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.signed_value(); }

private:
  static std::int64_t reduce(std::int64_t n, std::uint32_t p) {
    std::int64_t r = n % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }

  std::int64_t raw_ = 0;
  std::uint32_t p_ = 0;
};

// Exact rational number; canonical form is maintained by GMP.
class Rational {
public:
  Rational() = default;
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& get() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const { return Rational(1) / *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  std::string str() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.q_.get_str(); }

private:
  mpq_class q_;
};

// Runtime description of a coefficient field, as carried by a ring.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Fp> {
  struct Context {
    std::uint32_t p = kDefaultPrime;
    friend bool operator==(const Context&, const Context&) = default;
  };
  static Fp from_int(std::int64_t n, const Context& c) { return Fp(n, c.p); }
  // Fails when the denominator vanishes mod p.
  static Fp from_fraction(const mpz_class& num, const mpz_class& den, const Context& c);
  static std::string tag(const Context& c) { return "GF " + std::to_string(c.p); }
  static std::size_t hash(const Fp& a) { return a.value(); }
};

template <>
struct FieldTraits<Rational> {
  struct Context {
    friend bool operator==(const Context&, const Context&) = default;
  };
  static Rational from_int(std::int64_t n, const Context&) { return Rational(static_cast<long>(n)); }
  static Rational from_fraction(const mpz_class& num, const mpz_class& den, const Context&) {
    return Rational(num, den);
  }
  static std::string tag(const Context&) { return "QQ"; }
  static std::size_t hash(const Rational& a) { return std::hash<std::string>{}(a.str()); }
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }

// Reduction ℚ → GF(p); throws when p divides a denominator.
Fp reduce_mod(const Rational& q, std::uint32_t p);

}  // namespace msec
