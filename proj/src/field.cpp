#include "multisecant/field.hpp"

#include <cctype>

#include "multisecant/parse.hpp"
#include "multisecant/polynomial.hpp"

namespace msec {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp Fp::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in GF(p)");
  if (!p_) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw DomainError("inverse of an unbound integer");
  }
  std::int64_t a = raw_, m = p_, x0 = 1, x1 = 0;
  while (m) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp r = Fp(1, p_ ? p_ : 1), b = *this;
  if (!p_) throw DomainError("power of an unbound integer");
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Fp FieldTraits<Fp>::from_fraction(const mpz_class& num, const mpz_class& den, const Context& c) {
  mpz_class n = num % c.p, d = den % c.p;
  if (n < 0) n += c.p;
  if (d < 0) d += c.p;
  if (d == 0) throw DomainError("denominator divisible by " + std::to_string(c.p));
  return Fp(static_cast<std::int64_t>(n.get_si()), c.p) / Fp(static_cast<std::int64_t>(d.get_si()), c.p);
}

Fp reduce_mod(const Rational& q, std::uint32_t p) {
  return FieldTraits<Fp>::from_fraction(q.numerator(), q.denominator(), {p});
}

PolyP reduce_mod(const PolyQ& f, const RingPtr<Fp>& target) {
  std::vector<Term<Fp>> terms;
  terms.reserve(f.size());
  for (auto& t : f.terms()) terms.push_back({t.mono, reduce_mod(t.coef, target->field.p)});
  return PolyP::from_terms(target, std::move(terms));
}

FieldTag parse_field_tag(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
  if (s == "QQ") return {true, 0};
  if (s.rfind("GF", 0) == 0 && s.size() > 2) {
    for (std::size_t i = 2; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad field tag '" + std::string(text) + "'");
    std::uint64_t p = std::stoull(s.substr(2));
    if (p > 0x7fffffffull || !is_prime(p)) throw ParseError("field characteristic is not a word-sized prime: " + s.substr(2));
    return {false, static_cast<std::uint32_t>(p)};
  }
  throw ParseError("bad field tag '" + std::string(text) + "'");
}

}  // namespace msec
